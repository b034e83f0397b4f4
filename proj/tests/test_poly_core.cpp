#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szego/random_inputs.hpp"
#include "szego/division.hpp"
#include "szego/poly_io.hpp"
#include "szego/polynomial.hpp"

using namespace szego;

namespace {

PolyZZbar zz(std::string_view s) { return parse_zzbar(s); }
PolyRealN xy(std::string_view s) { return parse_real(s, 2); }
GaussianRational q(long p, long d = 1) { return GaussianRational(Rational(p, d)); }

}  // namespace

TEST_CASE("gaussian rationals are exact and canonical") {
    const GaussianRational a(Rational(1, 3), Rational(-2, 6));
    CHECK(a.imag() == Rational(-1, 3));
    CHECK(a * a.inverse() == GaussianRational(1L));
    CHECK((a * a.conj()).is_real());
    CHECK(to_string(a) == "(1/3-1/3i)");
    CHECK(to_string(GaussianRational(Rational(-3, 8))) == "(-3/8+0i)");
    CHECK_THROWS_AS(GaussianRational{}.inverse(), std::domain_error);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
}

TEST_CASE("zero polynomial has degree -1 and no stored zeros") {
    PolyZZbar p;
    CHECK(p.degree() == -1);
    p.add_term({2, 1}, 3L);
    p.add_term({2, 1}, -3L);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK((zz("z") - zz("z")).degree() == -1);
}

TEST_CASE("xy_to_zzbar") {
    CHECK(xy_to_zzbar(xy("x")) == zz("(1/2)*z + (1/2)*zbar"));
    CHECK(xy_to_zzbar(xy("x^2 + y^2")) == zz("z*zbar"));
    CHECK(xy_to_zzbar(xy("x^2")) == zz("(1/4)*z^2 + (1/2)*z*zbar + (1/4)*zbar^2"));
    CHECK(xy_to_zzbar(xy("x^3*y + 7")).degree() == 4);
    CHECK_THROWS_AS(xy_to_zzbar(parse_real("x", 3)), std::invalid_argument);
}

TEST_CASE("zzbar_to_xy") {
    CHECK(zzbar_to_xy(zz("z")) == xy("x + i*y"));
    CHECK(zzbar_to_xy(zz("z*zbar")) == xy("x^2 + y^2"));
    CHECK(zzbar_to_xy(zz("z^2")) == xy("x^2 - y^2 + 2i*x*y"));
}

TEST_CASE("Wirtinger derivatives") {
    CHECK(d_dzbar(zz("z^3")).is_zero());
    CHECK(d_dz(zz("z*zbar")) == zz("zbar"));
    CHECK(d_dzbar(zz("z^2*zbar^2")) == zz("2*z^2*zbar"));
    CHECK(d_dz(zz("5")).is_zero());
}

TEST_CASE("laplacian in both forms") {
    CHECK(laplacian(zz("z*zbar")) == zz("4"));
    CHECK(laplacian(xy("x^2 + y^2")) == xy("4"));
    CHECK(laplacian(xy("x^2 - y^2")).is_zero());
}

TEST_CASE("arithmetic suite") {
    CHECK(conjugate(zz("i*z")) == zz("-i*zbar"));
    CHECK(zz("z + zbar") * zz("z - zbar") == zz("z^2 - zbar^2"));
    CHECK(evaluate(zz("z*zbar"), GaussianRational(Rational(3), Rational(4))) == GaussianRational(25L));
    CHECK(evaluate(zz("z*zbar"), std::complex<double>(3, 4)) == std::complex<double>(25, 0));
    const std::vector<GaussianRational> pt{q(1, 2), q(3)};
    CHECK(evaluate(xy("x*y + 1"), std::span<const GaussianRational>(pt)) == q(5, 2));
    CHECK(zz("3*z") * q(0) == PolyZZbar{});
}

TEST_CASE("exponent overflow is reported") {
    const auto big = PolyZZbar::monomial(std::numeric_limits<Exponent>::max(), 0);
    CHECK_THROWS_AS(big * zz("z"), std::overflow_error);
}

TEST_CASE("divide_exact") {
    const PolyZZbar r = zz("z*zbar - 1");
    CHECK(divide_exact(r * r, r) == r);
    CHECK_FALSE(divide_exact(zz("z"), r).has_value());
    CHECK(divide_exact(zz("z^2*zbar - z"), r) == zz("z"));
    CHECK(divide_exact(PolyZZbar{}, r) == PolyZZbar{});
    CHECK_FALSE(divide_exact(zz("z^3 + zbar"), r).has_value());
    CHECK_THROWS_AS(divide_exact(r, PolyZZbar{}), std::invalid_argument);

    const PolyRealN rr = parse_real("x^2 + 2*y^2 + z^2 - 1", 3);
    const PolyRealN p = parse_real("x*y - 3*z + 1/2", 3);
    CHECK(divide_exact(rr * p, rr) == p);
    CHECK_FALSE(divide_exact(rr * p + parse_real("x", 3), rr).has_value());
}

TEST_CASE("ring axioms on random inputs") {
    PolyGenerator gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = gen.zzbar(6);
        const auto b = gen.zzbar(6);
        const auto c = gen.zzbar(6);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("differential identities on random inputs") {
    PolyGenerator gen(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = gen.real(2, 6);
        CHECK(laplacian(xy_to_zzbar(p)) == xy_to_zzbar(laplacian(p)));
        CHECK(xy_to_zzbar(p).degree() == p.degree());

        const auto f = gen.zzbar(6);
        CHECK(d_dz(conjugate(f)) == conjugate(d_dzbar(f)));
        CHECK(xy_to_zzbar(zzbar_to_xy(f)) == f);
        CHECK(laplacian(f) == d_dz(d_dzbar(f)) * q(4));
        if (f.degree() > 0 && !d_dz(f).is_zero()) CHECK(d_dz(f).degree() <= f.degree() - 1);
    }
}

TEST_CASE("divide_exact recovers random quotients") {
    PolyGenerator gen(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = gen.zzbar(4);
        auto r = gen.zzbar(3);
        if (r.is_zero()) r = zz("z*zbar - 2");
        CHECK(divide_exact(p * r, r) == p);
    }
}

TEST_CASE("text format round-trips bit-exactly") {
    PolyGenerator gen(14);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = gen.zzbar(6);
        const std::string text = to_string(f);
        CHECK(parse_zzbar(text) == f);
        CHECK(to_string(parse_zzbar(text)) == text);
        CHECK(parse_zzbar(to_pretty_string(f)) == f);
        CHECK(zzbar_from_json(to_json(f)) == f);

        const auto p = gen.real(3, 5);
        CHECK(parse_real(to_string(p), 3) == p);
        CHECK(parse_real(to_pretty_string(p), 3) == p);
        CHECK(real_from_json(to_json(p)) == p);
    }
}

TEST_CASE("text format details") {
    CHECK(to_string(zz("-3/8*z")) == "(-3/8+0i)*z^1*zbar^0");
    CHECK(to_string(PolyZZbar{}) == "0");
    CHECK(to_pretty_string(zz("3/5*z")) == "(3/5)*z");
    CHECK(to_pretty_string(xy("4/5*x^2 - 4/5*y^2 + 4/5")) == "(4/5)*x^2 + (-4/5)*y^2 + (4/5)");
    CHECK(zz("(1/2+1/3i)") == PolyZZbar::constant(GaussianRational(Rational(1, 2), Rational(1, 3))));
    CHECK(zz("(x + y)/2") == zz("x/2 + y/2"));
    CHECK(zz("0.25*z") == zz("1/4*z"));
    CHECK(zz("2*-z") == zz("-2*z"));
    CHECK(to_json(zz("-3/8*z")).dump() == R"([{"a":1,"b":0,"im":"0","re":"-3/8"}])");
}

TEST_CASE("parse errors carry a position") {
    auto position_of = [](std::string_view s) -> std::size_t {
        try {
            parse_zzbar(s);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string_view::npos;
    };
    CHECK(position_of("z + w") == 4);
    CHECK(position_of("z^") == 2);
    CHECK(position_of("(z + 1") == 6);
    CHECK(position_of("z / zbar") == 4);
    CHECK(position_of("") == 0);
    CHECK(position_of("z^x") == 2);
    CHECK(parse_zzbar("z^2/4") == parse_zzbar("(1/4)*z^2"));
    CHECK_THROWS_AS(parse_real("x4", 3), ParseError);
}
