#include "szego/polynomial.hpp"

namespace szego {

namespace {

template <typename Poly>
std::vector<Poly> powers(const Poly& base, const Poly& one, Exponent max_power) {
    std::vector<Poly> out{one};
    for (Exponent k = 1; k <= max_power; ++k) out.push_back(out.back() * base);
    return out;
}

}  // namespace

PolyZZbar xy_to_zzbar(const PolyRealN& p) {
    if (p.dim() != 2) throw std::invalid_argument("xy_to_zzbar requires a polynomial in two variables");
    const GaussianRational half(Rational(1, 2));
    const GaussianRational half_i(Rational(0), Rational(1, 2));

    PolyZZbar x;
    x.add_term({1, 0}, half);
    x.add_term({0, 1}, half);
    PolyZZbar y;
    y.add_term({1, 0}, -half_i);
    y.add_term({0, 1}, half_i);

    Exponent max_x = 0;
    Exponent max_y = 0;
    for (const auto& [alpha, c] : p.terms()) {
        max_x = std::max(max_x, alpha[0]);
        max_y = std::max(max_y, alpha[1]);
    }
    const PolyZZbar one = PolyZZbar::constant(1L);
    const auto xs = powers(x, one, max_x);
    const auto ys = powers(y, one, max_y);

    PolyZZbar out;
    for (const auto& [alpha, c] : p.terms()) out += (xs[alpha[0]] * ys[alpha[1]]) * c;
    return out;
}

PolyRealN zzbar_to_xy(const PolyZZbar& p) {
    const GaussianRational i = GaussianRational::i();
    PolyRealN z(2);
    z.add_term({1, 0}, 1L);
    z.add_term({0, 1}, i);
    PolyRealN zb(2);
    zb.add_term({1, 0}, 1L);
    zb.add_term({0, 1}, -i);

    Exponent max_a = 0;
    Exponent max_b = 0;
    for (const auto& [e, c] : p.terms()) {
        max_a = std::max(max_a, e.a);
        max_b = std::max(max_b, e.b);
    }
    const PolyRealN one = PolyRealN::constant(2, 1L);
    const auto zs = powers(z, one, max_a);
    const auto zbs = powers(zb, one, max_b);

    PolyRealN out(2);
    for (const auto& [e, c] : p.terms()) out += (zs[e.a] * zbs[e.b]) * c;
    return out;
}

std::vector<ExponentPair> zzbar_monomials(int n) {
    std::vector<ExponentPair> out;
    for (int d = 0; d <= n; ++d)
        for (int a = 0; a <= d; ++a)
            out.push_back({static_cast<Exponent>(a), static_cast<Exponent>(d - a)});
    return out;
}

namespace {

void homogeneous(std::size_t dim, std::size_t pos, Exponent remaining, std::vector<Exponent>& cur,
                 std::vector<std::vector<Exponent>>& out) {
    if (pos + 1 == dim) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (Exponent e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        homogeneous(dim, pos + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<std::vector<Exponent>> real_monomials(std::size_t dim, int n) {
    std::vector<std::vector<Exponent>> out;
    std::vector<Exponent> cur(dim, 0);
    for (int d = 0; d <= n; ++d) homogeneous(dim, 0, static_cast<Exponent>(d), cur, out);
    return out;
}

}  // namespace szego
