#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szego/random_inputs.hpp"
#include "szego/division.hpp"
#include "szego/ellipsoid.hpp"
#include "szego/poly_io.hpp"

using namespace szego;

namespace {

Ellipsoid unit_ball(std::size_t n) {
    ExactMatrix q = ExactMatrix::Constant(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n), GaussianRational{});
    for (Eigen::Index j = 0; j < q.rows(); ++j) q(j, j) = 1L;
    return Ellipsoid(q, std::vector<Rational>(n, Rational(0)));
}

PolyRealN xy(std::string_view s) { return parse_real(s, 2); }

}  // namespace

TEST_CASE("ellipsoid validation") {
    ExactMatrix q(2, 2);
    q << GaussianRational(1L), GaussianRational(2L), GaussianRational(2L), GaussianRational(1L);
    CHECK_THROWS_AS(Ellipsoid(q, {0, 0}), std::invalid_argument);  // indefinite
    q(0, 1) = 0L;
    CHECK_THROWS_AS(Ellipsoid(q, {0, 0}), std::invalid_argument);  // not symmetric
    q(1, 0) = 0L;
    CHECK_THROWS_AS(Ellipsoid(q, {0}), std::invalid_argument);      // wrong center
    q(0, 0) = GaussianRational(Rational(0), Rational(1));
    CHECK_THROWS_AS(Ellipsoid(q, {0, 0}), std::invalid_argument);  // complex
    CHECK_THROWS_AS(Ellipse(Rational(0), Rational(1)), std::invalid_argument);

    const Ellipsoid e = unit_ball(3);
    CHECK(e.defining_poly().degree() == 2);
    const std::vector<GaussianRational> center(3, GaussianRational{});
    CHECK(evaluate(e.defining_poly(), std::span<const GaussianRational>(center)) == GaussianRational(-1L));
}

TEST_CASE("ellipse defining function in both coordinate systems") {
    const Ellipse e(Rational(2), Rational(1), Rational(1, 2), Rational(-3));
    CHECK(e.defining_poly_zzbar() == xy_to_zzbar(parse_real("(x - 1/2)^2/4 + (y + 3)^2 - 1", 2)));
    CHECK(e.defining_poly_zzbar() == conjugate(e.defining_poly_zzbar()));  // real valued
    CHECK(e.d_r() == conjugate(e.dbar_r()));
    CHECK(e.d_r().degree() == 1);
}

TEST_CASE("Fischer system small cases") {
    const auto disc0 = fischer_system(unit_ball(2), 0);
    REQUIRE(disc0.matrix().rows() == 1);
    CHECK(disc0.matrix()(0, 0) == GaussianRational(4L));

    const auto disc1 = fischer_system(unit_ball(2), 1);
    REQUIRE(disc1.matrix().rows() == 3);
    ExactMatrix expected = ExactMatrix::Constant(3, 3, GaussianRational{});
    expected(0, 0) = 4L;
    expected(1, 1) = 8L;
    expected(2, 2) = 8L;
    CHECK(disc1.matrix() == expected);
    CHECK(disc1.determinant() == GaussianRational(256L));

    const auto ball0 = fischer_system(unit_ball(3), 0);
    CHECK(ball0.matrix()(0, 0) == GaussianRational(6L));
}

TEST_CASE("Fischer matrix is square of side C(m+n, n) and invertible") {
    PolyGenerator gen(31);
    for (std::size_t n : {2u, 3u}) {
        const Ellipsoid e = gen.ellipsoid(n);
        for (int m = 0; m <= (n == 2 ? 10 : 6); ++m) {
            const auto fs = fischer_system(e, m);
            long side = 1;
            for (std::size_t j = 1; j <= n; ++j) side = side * (m + static_cast<long>(j)) / static_cast<long>(j);
            CHECK(fs.matrix().rows() == side);
            CHECK(fs.matrix().cols() == side);
            CHECK_FALSE(fs.determinant().is_zero());
        }
    }
}

TEST_CASE("harmonic extension examples") {
    const Ellipse ellipse(Rational(2), Rational(1));
    const Ellipsoid e = ellipse.to_ellipsoid();
    CHECK(harmonic_extension(e, xy("x")) == xy("x"));
    CHECK(harmonic_extension(unit_ball(2), xy("x^2 + y^2")) == xy("1"));
    CHECK(harmonic_extension(e, xy("x^2")) == xy("(4*x^2 - 4*y^2 + 4)/5"));
    CHECK(to_pretty_string(harmonic_extension(e, xy("x^2"))) == "(4/5)*x^2 + (-4/5)*y^2 + (4/5)");
    CHECK_THROWS_AS(harmonic_extension(e, parse_real("x", 3)), std::invalid_argument);

    // Complex data goes through the same path.
    const PolyRealN p = xy("x^2 + i*y^3");
    const PolyRealN u = harmonic_extension(e, p);
    CHECK(u == harmonic_extension(e, xy("x^2")) + harmonic_extension(e, xy("y^3")) * GaussianRational::i());

    CHECK(harmonic_extension(ellipse, parse_zzbar("z*zbar")) == xy_to_zzbar(harmonic_extension(e, xy("x^2+y^2"))));
}

TEST_CASE("is_harmonic") {
    CHECK(is_harmonic(xy("x^2 - y^2")));
    CHECK_FALSE(is_harmonic(parse_zzbar("z*zbar")));
    CHECK(is_harmonic(xy("x^3 - 3*x*y^2")));
    CHECK(is_harmonic(parse_zzbar("z^4 + zbar^2")));
}

TEST_CASE("harmonic extension properties on random ellipsoids") {
    PolyGenerator gen(32);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = trial % 2 == 0 ? 2 : 3;
        const Ellipsoid e = gen.ellipsoid(n);
        const PolyRealN p = gen.real(n, 5);
        const PolyRealN q = gen.real(n, 5);
        const PolyRealN u = harmonic_extension(e, p);
        CHECK(is_harmonic(u));
        CHECK(u.degree() <= p.degree());
        CHECK(divide_exact(p - u, e.defining_poly()).has_value());
        CHECK(harmonic_extension(e, u) == u);

        const GaussianRational alpha = gen.small_coefficient();
        const GaussianRational beta = gen.small_coefficient();
        CHECK(harmonic_extension(e, p * alpha + q * beta) == u * alpha + harmonic_extension(e, q) * beta);
    }
}

TEST_CASE("ellipsoid JSON descriptors") {
    const auto planar = ellipsoid_from_json(nlohmann::json::parse(R"({"a": "2", "b": 1, "h": "1/2", "k": 0})"));
    CHECK(planar.defining_poly() == Ellipse(Rational(2), Rational(1), Rational(1, 2)).to_ellipsoid().defining_poly());

    const auto general = ellipsoid_from_json(
        nlohmann::json::parse(R"({"dim": 2, "Q": ["2", "1/2", "1/2", "1"], "center": ["1", "-1/3"]})"));
    CHECK(general.q()(0, 1) == GaussianRational(Rational(1, 2)));
    CHECK(ellipsoid_from_json(to_json(general)).defining_poly() == general.defining_poly());

    CHECK_THROWS_AS(ellipsoid_from_json(nlohmann::json::parse(R"({"dim": 2, "Q": ["1"], "center": ["0", "0"]})")),
                    std::invalid_argument);
}
