#include <zetaquant/recon.hpp>

#include <zetaquant/errors.hpp>
#include <zetaquant/special.hpp>

#include <cmath>
#include <numbers>

namespace zetaquant {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2Pi = std::log(2.0 * kPi);

Complex ipow(Complex z, int k) {
    if (k < 0) {
        if (z == Complex(0.0)) throw PoleError("z^k with k < 0 at z = 0");
        return 1.0 / ipow(z, -k);
    }
    Complex out(1.0);
    Complex base = z;
    for (unsigned e = static_cast<unsigned>(k); e != 0; e >>= 1) {
        if (e & 1u) out *= base;
        base *= base;
    }
    return out;
}

const DiagonalOperator& phi_operator() {
    // phi(z) = 1 - z: a single zero at 1
    static const DiagonalOperator op = [] {
        ZeroMultiset z;
        z.add(1.0);
        return from_zeros(std::move(z));
    }();
    return op;
}

DetResult det2(const DiagonalOperator& op, Complex z, Pairing pairing) {
    RegDetRequest req;
    req.order = 2;
    req.z = z;
    req.pairing = pairing;
    return det_p(op, req);
}

} // namespace

Complex rational_reconstruct(const ZeroMultiset& zeros, const ZeroMultiset& poles, int k, Complex g0, Complex z) {
    const DetResult num = det_fredholm(from_zeros(zeros), z);
    Complex value = ipow(z, k) * g0 * num.value;
    if (!poles.empty()) {
        const DetResult den = det_fredholm(from_zeros(poles), z);
        if (den.zero_index) throw PoleError("rational_reconstruct: evaluation at a pole", *den.zero_index);
        value /= den.value;
    }
    return value;
}

Rational rational_reconstruct_exact(const std::vector<Rational>& zeros, const std::vector<Rational>& poles, int k,
                                    const Rational& g0, const Rational& z) {
    Rational value = g0;
    for (int i = 0; i < std::abs(k); ++i) {
        if (k > 0) {
            value *= z;
        } else {
            if (z == 0) throw PoleError("z^k with k < 0 at z = 0");
            value /= z;
        }
    }
    for (const Rational& a : zeros) {
        if (a == 0) throw ConstructionError("zero multiset: 0 cannot be an entry");
        value *= 1 - z / a;
    }
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (poles[i] == 0) throw ConstructionError("pole multiset: 0 cannot be an entry");
        const Rational f = 1 - z / poles[i];
        if (f == 0) throw PoleError("rational_reconstruct_exact: evaluation at a pole", i);
        value /= f;
    }
    return value;
}

DiagonalOperator gamma_operator(std::size_t N) {
    std::vector<MultisetEntry> entries;
    entries.reserve(N);
    for (std::size_t n = 1; n <= N; ++n) entries.push_back({-static_cast<double>(n), 1});
    ZeroMultiset zeros(std::move(entries));
    zeros.mark_truncation();
    return from_zeros(std::move(zeros), PowerLawTail{1.0});
}

ReconResult gamma_reconstruct(Complex z, const DiagonalOperator& gamma_op) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma_reconstruct: pole at a nonpositive integer");
    const DetResult d = det2(gamma_op, z, Pairing::as_stored);
    ReconResult out;
    out.value = std::exp(-kEulerGamma * z) / z / d.value;
    out.tail_estimate = std::norm(z) / (2.0 * static_cast<double>(gamma_op.size()));
    return out;
}

ReconResult gamma_reconstruct(Complex z, std::size_t N) {
    if (N < 1) throw DomainError("gamma_reconstruct: N must be >= 1");
    if (is_nonpositive_integer(z)) throw PoleError("gamma_reconstruct: pole at a nonpositive integer");
    return gamma_reconstruct(z, gamma_operator(N));
}

std::vector<std::size_t> primes_up_to(std::size_t bound) {
    std::vector<std::size_t> out;
    if (bound < 2) return out;
    std::vector<char> composite(bound + 1, 0);
    for (std::size_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::size_t j = i * i; j <= bound; j += i) composite[j] = 1;
    }
    return out;
}

Complex euler_product_det(Complex s, std::size_t prime_bound) {
    if (!(s.real() > 1.0)) throw DomainError("euler_product_det: needs Re s > 1");
    if (prime_bound < 2) throw DomainError("euler_product_det: prime bound must be >= 2");
    CompensatedSum<double> log_sum;
    for (std::size_t p : primes_up_to(prime_bound)) {
        const Complex t = std::exp(-s * std::log(static_cast<double>(p)));
        const DetResult d = det_fredholm(phi_operator(), t);
        log_sum += -std::log(d.value);
    }
    return detail::exp_checked(log_sum.value());
}

DiagonalOperator xi_operator(const ZeroDataset& data, std::size_t N) {
    if (N > data.count()) throw DomainError("xi_operator: dataset holds fewer heights than requested");
    std::vector<MultisetEntry> entries;
    entries.reserve(2 * N);
    for (std::size_t k = 0; k < N; ++k) {
        entries.push_back({Complex(0.5, data.heights[k]), 1});
        entries.push_back({Complex(0.5, -data.heights[k]), 1});
    }
    ZeroMultiset zeros(std::move(entries));
    zeros.mark_truncation();
    return from_zeros(std::move(zeros), PowerLawTail{1.0});
}

namespace {

/// Zero-counting density (1/2pi) log(t/2pi) integrated against |s|^2/t^2 beyond the last height.
double xi_tail(const DiagonalOperator& xi_op, Complex s) {
    if (xi_op.size() == 0 || s == Complex(0.0)) return 0.0;
    const double T = std::abs(xi_op.source_values()[xi_op.diagonal().size() - 1].imag());
    return std::norm(s) / (2.0 * kPi) * (std::log(T / (2.0 * kPi)) + 1.0) / T;
}

} // namespace

ReconResult xi_reconstruct(Complex s, const DiagonalOperator& xi_op) {
    const DetResult d = det2(xi_op, s, Pairing::functional_paired);
    ReconResult out;
    const double B = kLog2Pi - 1.0 - kEulerGamma / 2.0;
    out.value = 0.5 * std::exp(-0.5 * s * std::log(kPi) + B * s) * d.value;
    out.zero_index = d.zero_index;
    out.tail_estimate = xi_tail(xi_op, s);
    return out;
}

ReconResult xi_reconstruct(Complex s, const ZeroDataset& data, std::size_t N) {
    return xi_reconstruct(s, xi_operator(data, N));
}

ReconResult zeta_reconstruct(Complex s, const DiagonalOperator& xi_op, const DiagonalOperator& gamma_op) {
    if (s == Complex(1.0)) throw PoleError("zeta_reconstruct: pole at s = 1");
    const DetResult dg = det2(gamma_op, s / 2.0, Pairing::as_stored);
    const DetResult dxi = det2(xi_op, s, Pairing::functional_paired);
    const DetResult dphi = det_fredholm(phi_operator(), s);

    ReconResult out;
    out.tail_estimate = std::norm(s / 2.0) / (2.0 * static_cast<double>(std::max<std::size_t>(gamma_op.size(), 1))) +
                        xi_tail(xi_op, s);
    if (dg.zero_index || dxi.zero_index) {
        out.value = 0.0;
        out.zero_index = dg.zero_index ? dg.zero_index : dxi.zero_index;
        return out;
    }
    out.value = -std::exp((kLog2Pi - 1.0) * s) / 2.0 * dg.value * dxi.value / dphi.value;
    return out;
}

ReconResult zeta_reconstruct(Complex s, const ZeroDataset& data, std::size_t N_zeros, std::size_t N_gamma) {
    if (s == Complex(1.0)) throw PoleError("zeta_reconstruct: pole at s = 1");
    return zeta_reconstruct(s, xi_operator(data, N_zeros), gamma_operator(N_gamma));
}

DiagonalOperator xi_hat_operator(std::span<const Complex> heights) {
    std::vector<MultisetEntry> entries;
    entries.reserve(2 * heights.size());
    for (const Complex& t : heights) {
        entries.push_back({t, 1});
        entries.push_back({-t, 1});
    }
    ZeroMultiset zeros(std::move(entries));
    zeros.mark_truncation();
    return from_zeros(std::move(zeros), PowerLawTail{1.0});
}

DiagonalOperator xi_hat_operator(const ZeroDataset& data) {
    std::vector<Complex> heights(data.heights.begin(), data.heights.end());
    return xi_hat_operator(heights);
}

bool rh_predicate(const DiagonalOperator& xi_hat_op, double tol) {
    return classify(xi_hat_op, 2, tol).is_self_adjoint;
}

ReconResult hadamard_reconstruct(const HadamardData& data, const DiagonalOperator& op, Complex z, std::size_t N) {
    if (data.m < 0) throw DomainError("hadamard_reconstruct: m must be >= 0");
    if (data.order_lambda < 0.0) throw DomainError("hadamard_reconstruct: order must be >= 0");
    for (std::size_t i = 0; i < data.g_coeffs.size(); ++i) {
        if (data.g_coeffs[i] != Complex(0.0) && static_cast<double>(i) > data.order_lambda) {
            throw DomainError("hadamard_reconstruct: deg g exceeds the order");
        }
    }
    RegDetRequest req;
    req.order = data.p() + 1;
    req.z = z;
    req.truncation = N;
    req.pairing = data.pairing;
    const DetResult d = det_p(op, req);

    Complex g(0.0);
    for (std::size_t i = data.g_coeffs.size(); i-- > 0;) g = g * z + data.g_coeffs[i];

    ReconResult out;
    out.tail_estimate = d.tail_estimate;
    out.zero_index = d.zero_index;
    out.value = ipow(z, data.m) * std::exp(g) * d.value;
    return out;
}

ReconResult hadamard_reconstruct(const HadamardData& data, Complex z, std::size_t N) {
    return hadamard_reconstruct(data, from_zeros(data.zeros, data.tail), z, N);
}

HadamardData sinc_fixture(std::size_t pairs) {
    HadamardData out;
    std::vector<MultisetEntry> entries;
    entries.reserve(2 * pairs);
    for (std::size_t n = 1; n <= pairs; ++n) {
        entries.push_back({static_cast<double>(n), 1});
        entries.push_back({-static_cast<double>(n), 1});
    }
    out.zeros = ZeroMultiset(std::move(entries));
    out.zeros.mark_truncation();
    out.tail = PowerLawTail{1.0};
    out.order_lambda = 1.0;
    return out;
}

HadamardData linear_fixture(bool with_exp) {
    HadamardData out;
    out.zeros.add(1.0);
    out.order_lambda = with_exp ? 1.0 : 0.0;
    return out;
}

} // namespace zetaquant
