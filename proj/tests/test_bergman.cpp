#include <doctest.h>

#include <zetaquant/bergman.hpp>

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <vector>

using namespace zetaquant;

TEST_SUITE("bergman") {

TEST_CASE("parameters") {
    CHECK_THROWS_AS(BergmanParams(0.0), DomainError);
    CHECK_THROWS_AS(BergmanParams(1.5), DomainError);
    CHECK(BergmanParams(1.0).a() == 1.0);
    CHECK(BergmanParams(0.5).a() == 0.0);
}

TEST_CASE("monomial norms against extended-precision values") {
    CHECK(weight_norm_sq(0, 0.5) == doctest::Approx(4.71238898038468986).epsilon(1e-14));
    CHECK(weight_norm_sq(3, 0.5) == doctest::Approx(250743419.665312244).epsilon(1e-13));
    CHECK(weight_norm_sq(10, 0.5) == doctest::Approx(4.31555569331499167e40).epsilon(1e-12));
    CHECK(weight_norm_sq(0, 1.0) == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
    CHECK(weight_norm_sq(3, 1.0) == doctest::Approx(123.700210735098109).epsilon(1e-14));
    CHECK(weight_norm_sq(10, 1.0) == doctest::Approx(76535667701541.5828).epsilon(1e-13));
    CHECK_THROWS_AS(weight_norm_sq(100000, 0.1), RangeError);
}

TEST_CASE("quadrature reproduces the closed form") {
    for (double alpha : {0.3, 0.7, 1.0}) {
        for (std::size_t n : {0u, 1u, 5u}) {
            CHECK(weight_norm_sq_quadrature(n, alpha, 1e-10) / weight_norm_sq(n, alpha) == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("monomials are orthogonal") {
    const Complex off = monomial_inner_product_quadrature(2, 3, 0.5, 1e-10);
    CHECK(std::abs(off) < 1e-6 * weight_norm_sq(2, 0.5));
    const Complex diag = monomial_inner_product_quadrature(2, 2, 0.5, 1e-10);
    CHECK(diag.real() / weight_norm_sq(2, 0.5) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("shift weights at alpha = 1 are sqrt(2(n+1)/(2n+3))") {
    const Eigen::VectorXd g = shift_weights(BergmanParams(1.0), 50);
    for (Eigen::Index n = 0; n < g.size(); ++n) {
        const double expected = std::sqrt(2.0 * (n + 1) / (2.0 * n + 3.0));
        CHECK(g[n] == doctest::Approx(expected).epsilon(1e-14));
        CHECK(shift_weight_from_norms(BergmanParams(1.0), static_cast<std::size_t>(n)) ==
              doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("asymptotic slope") {
    CHECK(gamma_asymptotic_fit(BergmanParams(0.5), 1000, 10000) == doctest::Approx(-1.0).epsilon(0.01));
    CHECK_THROWS_AS(gamma_asymptotic_fit(BergmanParams(0.5), 5, 100), DomainError);
}

TEST_CASE("derivative norm bound at alpha = 1 is n! e^n / n^n") {
    const double expected = 6.0 * std::exp(3.0) / 27.0;
    CHECK(derivative_norm_bound(3, BergmanParams(1.0)) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("structural power norms match a dense SVD") {
    const ShiftTruncation tr(BergmanParams(0.6), 40);
    const Eigen::MatrixXd T = tr.matrix();
    CHECK(T.rows() == 41);
    CHECK(T(0, 1) == tr.gamma()[0]);
    CHECK(T(1, 0) == 0.0);
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(T.rows(), T.cols());
    for (int k = 1; k <= 6; ++k) {
        P = P * T;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(P);
        CHECK(tr.power_norm(k) == doctest::Approx(svd.singularValues()[0]).epsilon(1e-12));
    }
    CHECK(tr.power_norm(41) == 0.0);
    CHECK(tr.leading_block(5) == T.topLeftCorner(5, 5));
}

TEST_CASE("norm checks") {
    const ShiftTruncation tr(BergmanParams(0.4), 500);
    const NormCheckReport r = truncation_norm_checks(tr, 10);
    CHECK(r.power_norms.size() == 10);
    CHECK(r.bound_holds);
    CHECK(r.root_norms_decreasing);
    for (std::size_t k = 0; k < 10; ++k) CHECK(r.power_norms[k] <= r.bounds[k]);
}

TEST_CASE("exp(-sT) translates polynomials") {
    const ShiftTruncation tr(BergmanParams(0.5), 30);
    const std::vector<Complex> f{0.0, 1.0};  // f(z) = z
    const TranslationReport t = translation_check(tr, Complex(1.5, -0.5), f);
    CHECK(t.max_discrepancy < 1e-12);
    // f(z - s) = z - s
    CHECK(std::abs(t.expected[0] - Complex(-1.5, 0.5) * std::sqrt(weight_norm_sq(0, 0.5))) < 1e-12);
    const std::vector<Complex> too_long(40, 1.0);
    CHECK_THROWS_AS(translation_check(tr, 1.0, too_long), DomainError);
}

TEST_CASE("ideal class of the Bergman D") {
    const BergmanIdealReport r = bergman_ideal_class(BergmanParams(0.4), 3, 20000);
    CHECK(r.slope == doctest::Approx(-1.5).epsilon(0.01));
    REQUIRE(r.cls.p_star);
    CHECK(*r.cls.p_star == 1);
    CHECK(r.partial_sums.size() == 3);
    const BergmanIdealReport s = bergman_ideal_class(BergmanParams(0.7), 3, 20000);
    REQUIRE(s.cls.p_star);
    CHECK(*s.cls.p_star == 3);
}

}
