#include <doctest.h>

#include <zetaquant/recon.hpp>
#include <zetaquant/special.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

using namespace zetaquant;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

ZeroDataset first_heights(std::size_t n) {
    const ZeroDataset all = load_zero_dataset(std::filesystem::path(ZETAQUANT_FIXTURE_DIR) / "zeta_zeros_100k.txt");
    ZeroDataset out;
    out.heights.assign(all.heights.begin(), all.heights.begin() + static_cast<std::ptrdiff_t>(n));
    out.source = all.source;
    return out;
}

} // namespace

TEST_SUITE("recon") {

TEST_CASE("rational functions from zeros and poles") {
    // f(z) = 3 z^2 (1 - z/2)^2 / ((1 - z/(1+i)) (1 - z/(1-i)))
    ZeroMultiset zeros(std::vector<MultisetEntry>{{2.0, 2}});
    ZeroMultiset poles(std::vector<MultisetEntry>{{Complex(1, 1), 1}, {Complex(1, -1), 1}}, MultisetKind::poles);
    const Complex z(0.3, -0.8);
    const Complex expected = 3.0 * z * z * std::pow(1.0 - z / 2.0, 2) /
                             ((1.0 - z / Complex(1, 1)) * (1.0 - z / Complex(1, -1)));
    CHECK(rel(rational_reconstruct(zeros, poles, 2, 3.0, z), expected) < 1e-14);
    CHECK(rational_reconstruct(zeros, poles, 2, 3.0, 2.0) == Complex(0.0));
    CHECK_THROWS_AS(rational_reconstruct(zeros, poles, 2, 3.0, Complex(1, 1)), PoleError);
}

TEST_CASE("exact rational reconstruction") {
    const std::vector<Rational> zeros{Rational(2), Rational(-1, 3)};
    const std::vector<Rational> poles{Rational(5)};
    const Rational v = rational_reconstruct_exact(zeros, poles, 1, Rational(7), Rational(1, 2));
    // 7 * 1/2 * (3/4) * (5/2) / (9/10)
    CHECK(v == Rational(175, 24));
    CHECK_THROWS_AS(rational_reconstruct_exact(zeros, poles, 0, Rational(1), Rational(5)), PoleError);
    CHECK_THROWS_AS(rational_reconstruct_exact(zeros, poles, -1, Rational(1), Rational(0)), PoleError);
}

TEST_CASE("Gamma from its poles") {
    // truncated at N = 1000 against an extended-precision truncated product
    CHECK(rel(gamma_reconstruct(0.5, 1000).value, 1.77223245562386509) < 1e-13);
    const ReconResult r = gamma_reconstruct(Complex(2, 1), 100000);
    CHECK(rel(r.value, gamma_oracle(Complex(2, 1))) < r.tail_estimate * 1.5);
    CHECK(r.tail_estimate == doctest::Approx(5.0 / 200000.0));
    CHECK_THROWS_AS(gamma_reconstruct(-3.0, 100), PoleError);
    CHECK_THROWS_AS(gamma_reconstruct(0.0, 100), PoleError);
    CHECK_THROWS_AS(gamma_reconstruct(0.5, 0), DomainError);
}

TEST_CASE("e^{-gamma} from the Gamma determinant at z = 1") {
    // Gamma(1) = 1 gives det_2(I - D) = e^{-gamma}
    const DiagonalOperator op = gamma_operator(1000000);
    RegDetRequest req;
    req.order = 2;
    req.z = 1.0;
    CHECK(rel(det_p(op, req).value, 0.561459483566885170) < 2e-6);
}

TEST_CASE("Euler product") {
    CHECK(primes_up_to(30) == std::vector<std::size_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
    CHECK(rel(euler_product_det(2.0, 100), 1.64194519662111575) < 1e-14);
    CHECK(rel(euler_product_det(Complex(3, 1), 100), Complex(1.10721025821046025, -0.148300253598172621)) < 1e-14);
    CHECK_THROWS_AS(euler_product_det(1.0, 100), DomainError);
}

TEST_CASE("xi from zero heights") {
    const ZeroDataset data = first_heights(1000);
    const DiagonalOperator op = xi_operator(data, 1000);
    CHECK(op.size() == 2000);
    CHECK(op.source_values()[0] == Complex(0.5, data.heights[0]));
    CHECK(op.source_values()[1] == Complex(0.5, -data.heights[0]));
    CHECK(xi_reconstruct(0.0, op).value == Complex(0.5));
    const ReconResult r = xi_reconstruct(2.0, op);
    CHECK(rel(r.value, std::numbers::pi / 6.0) < 3e-2);
    CHECK(r.tail_estimate > 0.0);
    CHECK_THROWS_AS(xi_operator(data, 1001), DomainError);
    // the first zero is a zero
    const ReconResult z = xi_reconstruct(Complex(0.5, data.heights[0]), op);
    CHECK(z.value == Complex(0.0));
}

TEST_CASE("zeta from three determinants") {
    const ZeroDataset data = first_heights(1000);
    const DiagonalOperator xi_op = xi_operator(data, 1000);
    const DiagonalOperator g_op = gamma_operator(100000);
    CHECK(rel(zeta_reconstruct(2.0, xi_op, g_op).value, std::numbers::pi * std::numbers::pi / 6.0) < 3e-2);
    const ReconResult trivial = zeta_reconstruct(-4.0, xi_op, g_op);
    CHECK(trivial.value == Complex(0.0));
    REQUIRE(trivial.zero_index);
    CHECK(*trivial.zero_index == 1);
    CHECK_THROWS_AS(zeta_reconstruct(1.0, xi_op, g_op), PoleError);
}

TEST_CASE("RH predicate wiring") {
    const ZeroDataset data = first_heights(100);
    CHECK(rh_predicate(xi_hat_operator(data)));
    std::vector<Complex> h(data.heights.begin(), data.heights.end());
    h[50] += Complex(0.0, 1e-3);
    CHECK_FALSE(rh_predicate(xi_hat_operator(h)));
    CHECK(rh_predicate(xi_hat_operator(h), 1e-2));
    const DiagonalOperator op = xi_hat_operator(data);
    CHECK(op.source_values()[0] == Complex(data.heights[0]));
    CHECK(op.source_values()[1] == Complex(-data.heights[0]));
}

TEST_CASE("Hadamard: linear fixtures") {
    const Complex z(0.4, 1.3);
    CHECK(rel(hadamard_reconstruct(linear_fixture(false), z).value, 1.0 - z) < 1e-15);
    CHECK(rel(hadamard_reconstruct(linear_fixture(true), z).value, std::exp(z) * (1.0 - z)) < 1e-15);
}

TEST_CASE("Hadamard: sinc") {
    const HadamardData data = sinc_fixture(10000);
    const ReconResult r = hadamard_reconstruct(data, 0.5);
    CHECK(rel(r.value, 2.0 / std::numbers::pi) < 1e-4);
    CHECK(r.tail_estimate >= std::abs(std::log(r.value.real() * std::numbers::pi / 2.0)));
    const ReconResult zero = hadamard_reconstruct(data, -7.0);
    CHECK(zero.value == Complex(0.0));
    REQUIRE(zero.zero_index);
    CHECK(*zero.zero_index == 13);
}

TEST_CASE("Hadamard: genus and order validation") {
    HadamardData bad = linear_fixture(false);
    bad.g_coeffs = {0.0, 1.0};
    CHECK_THROWS_AS(hadamard_reconstruct(bad, 0.5), DomainError);
    HadamardData ok = linear_fixture(true);
    ok.g_coeffs = {0.0, 1.0};  // e^{2z}(1 - z)
    CHECK(rel(hadamard_reconstruct(ok, 0.3).value, std::exp(0.6) * 0.7) < 1e-15);
    HadamardData withm = linear_fixture(false);
    withm.m = 2;
    CHECK(rel(hadamard_reconstruct(withm, 3.0).value, -18.0) < 1e-15);
}

TEST_CASE("zero dataset parsing") {
    std::istringstream good("# heights\n14.134725141734693790\n\n21.022039638771554993\n");
    const ZeroDataset d = parse_zero_dataset(good);
    CHECK(d.count() == 2);
    CHECK(d.heights[1] == 21.022039638771554993);

    std::istringstream bad("14.1\nfoo\n");
    try {
        parse_zero_dataset(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream unordered("21.0\n14.1\n");
    CHECK_THROWS_AS(parse_zero_dataset(unordered), ParseError);
    std::istringstream negative("-1\n");
    CHECK_THROWS_AS(parse_zero_dataset(negative), ParseError);
}

TEST_CASE("fixture heights agree with known zeros") {
    const ZeroDataset all = load_zero_dataset(std::filesystem::path(ZETAQUANT_FIXTURE_DIR) / "zeta_zeros_100k.txt");
    REQUIRE(all.count() == 100000);
    CHECK(all.heights[0] == doctest::Approx(14.134725141734693790).epsilon(1e-10));
    CHECK(all.heights[9999] == doctest::Approx(9877.782654005501143).epsilon(1e-10));
    CHECK(all.heights[99999] == doctest::Approx(74920.827498994186794).epsilon(1e-10));
}

}
