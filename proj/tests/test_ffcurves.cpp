#include <doctest.h>

#include <zetaquant/ffcurves.hpp>

#include <cmath>
#include <sstream>

using namespace zetaquant;

namespace {

PlaneCurve curve_from(const std::string& text) {
    std::istringstream in(text);
    return parse_curve(in);
}

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_SUITE("ffcurves") {

TEST_CASE("field axioms in F_8 and F_9") {
    for (auto [p, k] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
        const FiniteField F(p, k);
        CHECK(F.q() == static_cast<std::uint32_t>(std::pow(p, k)));
        for (FiniteField::Elem a = 0; a < F.q(); ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.frobenius(a) == F.pow(a, p));
            CHECK(F.pow(a, F.q()) == a);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (FiniteField::Elem b = 0; b < F.q(); ++b) {
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.mul(a, F.add(b, 1)) == F.add(F.mul(a, b), a));
            }
        }
        // the primitive element has order q - 1
        const auto g = F.primitive();
        for (std::uint32_t e = 1; e + 1 < F.q(); ++e) CHECK(F.pow(g, e) != 1);
        CHECK_THROWS_AS(F.inv(0), DomainError);
    }
    CHECK(FiniteField(5, 1).from_int(-7) == 3);
    CHECK_THROWS_AS(FiniteField(6, 1), DomainError);
    CHECK_THROWS_AS(FiniteField(2, 20), DomainError);
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(7917));
}

TEST_CASE("elliptic curve counts") {
    const PlaneCurve e3 = curve_from("field 3 1\naffine y^2 = x^3 + x\ninfinity 1\n");
    CHECK(count_points(e3, 1) == 4);
    CHECK(count_points(e3, 2) == 16);
    CHECK(count_points(e3, 3) == 28);
    CHECK(count_points(e3, 4) == 64);
    CHECK_THROWS_AS(count_points(e3, 20), DomainError);

    const PlaneCurve proj = curve_from("field 3 1\nprojective y^2*z - x^3 - x*z^2\n");
    for (unsigned n = 1; n <= 4; ++n) CHECK(count_points(proj, n) == count_points(e3, n));
}

TEST_CASE("P^1 zeta series is exact") {
    const PlaneCurve line = curve_from("field 3 1\nprojective z\n");
    const LocalZeta lz = local_zeta(line, 5);
    CHECK(lz.counts == ints({4, 10, 28, 82, 244}));
    CHECK(lz.numerator == ints({1}));
    CHECK(lz.genus == 0);
    const auto s = zeta_series(lz.counts);
    CHECK(s == std::vector<Rational>{1, 4, 13, 40, 121, 364});
}

TEST_CASE("recognition of P(T) for genus 1 and 2") {
    const LocalZeta e5 = local_zeta(curve_from("field 5 1\naffine y^2 = x^3 + x\ninfinity 1\n"), 4);
    CHECK(e5.numerator == ints({1, -2, 5}));
    CHECK(e5.genus == 1);

    // y^2 = x^5 + 2x + 1 over F_3; counts by an independent brute force
    const LocalZeta g2 = local_zeta(curve_from("field 3 1\naffine y^2 = x^5 + 2*x + 1\ninfinity 1\n"), 5);
    CHECK(g2.counts == ints({7, 15, 19, 83, 232}));
    CHECK(g2.numerator == ints({1, 3, 7, 9, 9}));
    CHECK(g2.genus == 2);
    CHECK(functional_equation_holds(g2));
    CHECK(weil_bound_holds(g2));
    CHECK(weil_rh_check(g2, 1e-12).pass);
    CHECK(regenerate_counts(g2, 8)[4] == 232);
}

TEST_CASE("a singular curve is not recognized") {
    // x^5 + x + 1 has a double root at x = 1 over F_3
    const PlaneCurve c = curve_from("field 3 1\naffine y^2 = x^5 + x + 1\ninfinity 1\n");
    CHECK(count_points(c, 1) == 4);
    CHECK(count_points(c, 2) == 14);
    CHECK_THROWS_AS(local_zeta(c, 5), RecognitionError);
}

TEST_CASE("extension fields read the same polynomial") {
    // E over F_9 is E/F_3 base-changed: Y_n(F_9) = Y_{2n}(F_3), P = (1 + 3T)^2
    const LocalZeta e9 = local_zeta(curve_from("field 3 2\naffine y^2 = x^3 + x\ninfinity 1\n"), 3);
    CHECK(e9.counts == ints({16, 64, 784}));
    CHECK(e9.numerator == ints({1, 6, 9}));
}

TEST_CASE("recognition rejects series that do not close") {
    const std::vector<BigInt> counts = ints({4, 5, 6, 7});
    const auto s = zeta_series(counts);
    CHECK_THROWS_AS(rational_recognize(s, BigInt(3)), RecognitionError);
    const auto e = zeta_series(ints({4, 16, 28, 64}));
    CHECK_THROWS_AS(rational_recognize(e, BigInt(3), 2u), RecognitionError);
    CHECK(rational_recognize(e, BigInt(3), 1u).numerator == ints({1, 0, 3}));
}

TEST_CASE("inverse roots and the determinant form") {
    const LocalZeta e3 = local_zeta(curve_from("field 3 1\naffine y^2 = x^3 + x\ninfinity 1\n"), 4);
    const auto roots = inverse_roots(e3);
    REQUIRE(roots.size() == 2);
    for (const Complex& a : roots) CHECK(std::abs(a - Complex(0, std::sqrt(3.0))) * std::abs(a + Complex(0, std::sqrt(3.0))) < 1e-12);
    const WeilReport w = weil_rh_check(e3, 1e-12);
    CHECK(w.pass);
    CHECK(w.max_rel_deviation < 1e-15);

    const Complex s(2.0, 0.7);
    const CurveZetaValue v = curve_zeta_det_form(e3, s);
    const Complex T = std::pow(3.0, -s);
    const Complex exact = (1.0 + 3.0 * T * T) / ((1.0 - T) * (1.0 - 3.0 * T));
    CHECK(std::abs(v.value - exact) < 1e-14);
    CHECK(v.rel_discrepancy < 1e-14);
    CHECK_THROWS_AS(curve_zeta_det_form(e3, 0.0), PoleError);
    CHECK_THROWS_AS(curve_zeta_det_form(e3, 1.0), PoleError);
}

TEST_CASE("regenerated counts match") {
    const LocalZeta e5 = local_zeta(curve_from("field 5 1\naffine y^2 = x^3 + x\ninfinity 1\n"), 4);
    CHECK(regenerate_counts(e5, 4) == e5.counts);
    CHECK(regenerate_counts(e5, 5)[4] == count_points(curve_from("field 5 1\naffine y^2 = x^3 + x\ninfinity 1\n"), 5));
}

TEST_CASE("curve file errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            curve_from(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("field 3 1\naffine y^2 = x^3 +* x\n") == 2);
    CHECK(line_of("# comment\nfield 3\n") == 2);
    CHECK(line_of("field 3 1\nprojective z\nbogus 1\n") == 3);
    CHECK(line_of("field 3 1\naffine y^2 = x = 1\n") == 2);
    CHECK(line_of("field 3 1\n") != 0);
    CHECK_THROWS_AS(curve_from("field 3 1\nprojective x^2 + y\n"), ConstructionError);
    CHECK_THROWS_AS(curve_from("field 4 1\nprojective z\n"), ConstructionError);
}

TEST_CASE("polynomial formatting round-trips") {
    const PlaneCurve c = curve_from("field 7 1\naffine y^2 = x^3 - 2*x + 3 # comment\n");
    const std::string text = format_polynomial(c.terms);
    const PlaneCurve d = curve_from("field 7 1\naffine " + text + " = 0\n");
    CHECK(format_polynomial(d.terms) == text);
    for (unsigned n = 1; n <= 2; ++n) CHECK(count_points(c, n) == count_points(d, n));
}

}
