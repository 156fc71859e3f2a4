#pragma once

// Functions rebuilt from their zeros as (regularized) determinants of
// diagonal operators: rational functions, Gamma, the Euler product, xi,
// zeta, and finite-order entire functions in Hadamard form.

#include <zetaquant/opmodel.hpp>
#include <zetaquant/regdet.hpp>
#include <zetaquant/zero_dataset.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace zetaquant {

using Rational = boost::multiprecision::cpp_rational;

struct ReconResult {
    Complex value{0.0, 0.0};
    double tail_estimate = 0.0;
    /// Set when a truncated product hit an exactly vanishing factor.
    std::optional<std::size_t> zero_index;
};

/// f(z) = z^k g0 det(I - z D_zeros) / det(I - z D_poles). PoleError at a pole.
Complex rational_reconstruct(const ZeroMultiset& zeros, const ZeroMultiset& poles, int k, Complex g0, Complex z);

/// The same in exact rational arithmetic; entries are repeated for multiplicity.
Rational rational_reconstruct_exact(const std::vector<Rational>& zeros, const std::vector<Rational>& poles, int k,
                                    const Rational& g0, const Rational& z);

/// D with diagonal -1/n, n = 1..N: the zeros of 1/Gamma, tail model power-law(1).
DiagonalOperator gamma_operator(std::size_t N);

/// Gamma(z) = e^{-gamma z} / z / det_2(I - z D), truncated at N factors.
/// tail_estimate ~ |z|^2 / (2N), relative.
ReconResult gamma_reconstruct(Complex z, std::size_t N);
ReconResult gamma_reconstruct(Complex z, const DiagonalOperator& gamma_op);

/// prod_{p <= bound} det(I - p^{-s} D_phi)^{-1} with D_phi = diag(1); Re s > 1.
Complex euler_product_det(Complex s, std::size_t prime_bound);

/// Primes up to bound, by sieve.
std::vector<std::size_t> primes_up_to(std::size_t bound);

/// D_xi from the first N heights: rho_k = 1/2 + i t_k and its conjugate,
/// stored adjacently, tail model power-law(1).
DiagonalOperator xi_operator(const ZeroDataset& data, std::size_t N);

/// xi(s) = 1/2 pi^{-s/2} e^{(log 2pi - 1 - gamma/2) s} det_2(I - s D_xi).
/// tail_estimate: (|s|^2 / 2pi) (log(T/2pi) + 1) / T with T the last height used.
ReconResult xi_reconstruct(Complex s, const ZeroDataset& data, std::size_t N);
ReconResult xi_reconstruct(Complex s, const DiagonalOperator& xi_op);

/// zeta(s) = -(e^{(log 2pi - 1) s} / 2) det_2(I - (s/2) D_Gamma) det_2(I - s D_xi) / det(I - s D_phi).
ReconResult zeta_reconstruct(Complex s, const ZeroDataset& data, std::size_t N_zeros, std::size_t N_gamma);
ReconResult zeta_reconstruct(Complex s, const DiagonalOperator& xi_op, const DiagonalOperator& gamma_op);

/// Operator of xi-hat(z) = xi(1/2 + iz), whose zeros are +-t_k: real
/// diagonal exactly when every height is real. Entries stored as (t, -t).
DiagonalOperator xi_hat_operator(std::span<const Complex> heights);
DiagonalOperator xi_hat_operator(const ZeroDataset& data);

/// Self-adjointness of the xi-hat operator. Heights are read off the data,
/// so this tests that the data lie on the critical line, not RH itself.
bool rh_predicate(const DiagonalOperator& xi_hat_op, double tol = 0.0);

struct HadamardData {
    ZeroMultiset zeros;
    TailModel tail = FiniteTail{};
    int m = 0;                      ///< order of vanishing at 0
    std::vector<Complex> g_coeffs;  ///< g(z) = sum g_i z^i
    double order_lambda = 0.0;
    Pairing pairing = Pairing::as_stored;

    int p() const { return static_cast<int>(std::floor(order_lambda)); }
};

/// f(z) = z^m e^{g(z)} det_{p+1}(I - z D_f), truncated at N stored zeros.
ReconResult hadamard_reconstruct(const HadamardData& data, Complex z,
                                 std::size_t N = std::numeric_limits<std::size_t>::max());
ReconResult hadamard_reconstruct(const HadamardData& data, const DiagonalOperator& op, Complex z,
                                 std::size_t N = std::numeric_limits<std::size_t>::max());

/// sin(pi z)/(pi z): zeros +-1, +-2, ..., +-pairs stored as (n, -n), order 1.
HadamardData sinc_fixture(std::size_t pairs);

/// 1 - z (order 0), or e^z (1 - z) (order 1, where E_1 carries the e^z and g = 0).
HadamardData linear_fixture(bool with_exp = false);

} // namespace zetaquant
