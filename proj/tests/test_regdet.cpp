#include <doctest.h>

#include <zetaquant/regdet.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace zetaquant;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

DiagonalOperator five_zeros() {
    return from_zeros(ZeroMultiset::from_values(
        std::vector<Complex>{2.0, -3.0, Complex(1, 1), Complex(1, -1), 4.0}));
}

} // namespace

TEST_SUITE("regdet") {

TEST_CASE("finite products for p = 1, 2, 3") {
    const DiagonalOperator op = five_zeros();
    const Complex z(0.7, 0.2);
    const Complex expected[] = {Complex(0.341624375, -0.09564125),
                                Complex(0.956282827711560171, 0.00990885846068747122),
                                Complex(1.04941818691122448, 0.0732283619777818586)};
    for (int p = 1; p <= 3; ++p) {
        RegDetRequest req;
        req.order = p;
        req.z = z;
        const DetResult d = det_p(op, req);
        CHECK(rel(d.value, expected[p - 1]) < 1e-14);
        CHECK(d.tail_estimate == 0.0);
        CHECK_FALSE(d.zero_index);
    }
    CHECK(rel(det_fredholm(op, z).value, expected[0]) < 1e-14);
}

TEST_CASE("pairings change the grouping, not the value") {
    const DiagonalOperator op = five_zeros();
    RegDetRequest req;
    req.order = 2;
    req.z = Complex(-1.3, 0.4);
    const Complex stored = det_p(op, req).value;
    req.pairing = Pairing::conjugate_paired;
    CHECK(rel(det_p(op, req).value, stored) < 1e-14);
    req.pairing = Pairing::functional_paired;
    CHECK(rel(det_p(op, req).value, stored) < 1e-14);
}

TEST_CASE("evaluation at a zero is exactly zero and names the factor") {
    const DiagonalOperator op = five_zeros();
    for (Pairing pairing : {Pairing::as_stored, Pairing::conjugate_paired}) {
        RegDetRequest req;
        req.order = 2;
        req.pairing = pairing;
        req.z = 4.0;
        DetResult d = det_p(op, req);
        CHECK(d.value == Complex(0.0));
        REQUIRE(d.zero_index);
        CHECK(*d.zero_index == 4);
        req.z = Complex(1, -1);
        d = det_p(op, req);
        CHECK(d.value == Complex(0.0));
        REQUIRE(d.zero_index);
        CHECK(*d.zero_index == 3);
    }
}

TEST_CASE("z = 0 gives 1") {
    RegDetRequest req;
    req.order = 3;
    const DetResult d = det_p(five_zeros(), req);
    CHECK(d.value == Complex(1.0));
}

TEST_CASE("small products") {
    CHECK(det_fredholm(from_diagonal(std::vector<Complex>{0.5}), 1.0).value == Complex(0.5));
    CHECK(std::abs(det_fredholm(from_diagonal(std::vector<Complex>{0.5, 1.0 / 3.0}), 1.0).value - 1.0 / 3.0) < 1e-16);
    std::vector<Complex> d;
    for (int k = 1; k <= 30; ++k) d.push_back(std::ldexp(1.0, -k));
    CHECK(std::abs(det_fredholm(from_diagonal(d), 1.0).value.real() - 0.288788095355557294) < 1e-15);
}

TEST_CASE("infinite product prod (1 - 2^-k)") {
    std::vector<Complex> d;
    for (int k = 1; k <= 60; ++k) d.push_back(std::ldexp(1.0, -k));
    const DetResult r = det_fredholm(from_diagonal(d), 1.0);
    CHECK(std::abs(r.value.real() - 0.288788095086602421) < 1e-15);
}

TEST_CASE("truncated trace-class product with a power-law tail") {
    // prod (1 - z / n^2) = sin(pi sqrt z) / (pi sqrt z) = 2/pi at z = 1/4
    const std::size_t N = 100000;
    std::vector<Complex> d;
    for (std::size_t n = 1; n <= N; ++n) d.push_back(1.0 / (static_cast<double>(n) * static_cast<double>(n)));
    const DiagonalOperator op = from_diagonal(d, PowerLawTail{2.0});
    const DetResult r = det_fredholm(op, 0.25);
    const double exact = 2.0 / std::numbers::pi;
    const double err = std::abs(std::log(r.value.real() / exact));
    CHECK(err < 3e-6);
    CHECK(r.tail_estimate >= err);
    CHECK(r.tail_estimate < 1e-5);

    // a shorter truncation has a larger tail estimate
    CHECK(det_fredholm(op, 0.25, 1000).tail_estimate > r.tail_estimate);
}

TEST_CASE("certification against the tail model") {
    std::vector<Complex> d;
    for (int n = 1; n <= 100; ++n) d.push_back(1.0 / n);
    const DiagonalOperator op = from_diagonal(d, PowerLawTail{1.0});
    CHECK_THROWS_AS(det_fredholm(op, 0.5), CertificationError);

    RegDetRequest req;
    req.order = 1;
    req.z = 0.5;
    req.certify = false;
    CHECK(std::isinf(det_p(op, req).tail_estimate));

    req.order = 2;
    req.certify = true;
    CHECK(std::isfinite(det_p(op, req).tail_estimate));

    req.tail = TailModel{DeclaredTail{3}};
    CHECK_THROWS_AS(det_p(op, req), CertificationError);
}

TEST_CASE("argument errors") {
    const DiagonalOperator op = five_zeros();
    RegDetRequest req;
    req.order = 0;
    CHECK_THROWS_AS(det_p(op, req), DomainError);
    req.order = 1;
    req.truncation = 3;
    CHECK_THROWS_AS(det_p(op, req), DomainError);
}

TEST_CASE("power-law tail estimate") {
    std::vector<Complex> d;
    for (int n = 1; n <= 1000; ++n) d.push_back(1.0 / n);
    const DiagonalOperator op = from_diagonal(d, PowerLawTail{1.0});
    // 2 (|z| c)^p N^{1 - p kappa} / (p kappa - 1) with c = 1
    CHECK(power_law_tail_estimate(op, 1.0, 2, 0.5, 1000) == doctest::Approx(2.0 * 0.25 / 1000.0).epsilon(1e-12));
    CHECK(std::isinf(power_law_tail_estimate(op, 1.0, 1, 0.5, 1000)));
    CHECK(std::isinf(power_law_tail_estimate(op, 1.0, 2, 2000.0, 1000)));
    CHECK(power_law_tail_estimate(op, 1.0, 2, 0.0, 1000) == 0.0);
}

}
