#include <zetaquant/special.hpp>

#include <zetaquant/errors.hpp>

#include <array>
#include <cmath>
#include <vector>

namespace zetaquant {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kLanczosG = 7.0;

Complex lanczos(Complex z) {
    z -= 1.0;
    Complex x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

Complex gamma_oracle(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at a nonpositive integer");
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * lanczos(1.0 - z));
    return lanczos(z);
}

Complex eta_oracle(Complex s) {
    // Borwein, "An efficient algorithm for the Riemann zeta function", alg. 2
    const int n = 64 + static_cast<int>(std::ceil(std::abs(s.imag())));
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    double term = 1.0;
    double acc = 1.0;
    d[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1.0));
        acc += term;
        d[static_cast<std::size_t>(i)] = acc;
    }
    const double dn = d[static_cast<std::size_t>(n)];
    CompensatedSum<double> sum;
    for (int k = 0; k < n; ++k) {
        const double w = (d[static_cast<std::size_t>(k)] - dn) / dn;
        const Complex t = w * std::exp(-s * std::log(static_cast<double>(k + 1)));
        sum += (k % 2 == 0) ? t : -t;
    }
    return -sum.value();
}

Complex zeta_oracle(Complex s) {
    if (s == Complex(1.0)) throw PoleError("zeta: pole at s = 1");
    if (s == Complex(0.0)) return -0.5;
    if (s.real() >= 0.0) {
        const Complex denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
        if (std::abs(denom) < 1e-300) throw PoleError("zeta: 1 - 2^{1-s} vanishes");
        return eta_oracle(s) / denom;
    }
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
    const Complex one_minus = 1.0 - s;
    return std::pow(Complex(2.0), s) * std::pow(Complex(kPi), s - 1.0) * std::sin(kPi * s / 2.0) *
           gamma_oracle(one_minus) * zeta_oracle(one_minus);
}

Complex xi_oracle(Complex s) {
    if (std::abs(s - 1.0) < 0.25) s = 1.0 - s;
    return std::exp(-0.5 * s * std::log(kPi)) * (s - 1.0) * gamma_oracle(s / 2.0 + 1.0) * zeta_oracle(s);
}

Complex sinc_oracle(Complex z) {
    if (z == Complex(0.0)) return 1.0;
    return std::sin(kPi * z) / (kPi * z);
}

} // namespace zetaquant
