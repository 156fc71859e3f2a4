#pragma once

// The weighted Bergman space H_alpha with weight exp(-|z|^alpha): monomial
// norms, the backward-shift weights of the derivative operator D in the
// orthonormal basis u_n = c_n z^n, and finite truncations of D.

#include <zetaquant/factors.hpp>
#include <zetaquant/opmodel.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace zetaquant {

struct BergmanParams {
    double alpha = 0.25;

    explicit BergmanParams(double a);

    /// lim phi(t)/t for phi(t) = t^alpha: 1 when alpha = 1, else 0.
    double a() const noexcept { return alpha == 1.0 ? 1.0 : 0.0; }
    /// The determinant constructions fix 0 < alpha < 1/2.
    bool construction_ready() const noexcept { return alpha < 0.5; }
};

/// log ||z^n||^2 = log(2 pi / alpha) - (2/alpha)(n+1) log 2 + log Gamma((2/alpha)(n+1)).
double log_weight_norm_sq(std::size_t n, double alpha);

/// ||z^n||^2 in H_alpha; RangeError when it overflows a double.
double weight_norm_sq(std::size_t n, double alpha);

/// 2 pi int_0^inf r^{2n+1} exp(-2 r^alpha) dr by adaptive Gauss-Kronrod.
double weight_norm_sq_quadrature(std::size_t n, double alpha, double tol);

/// (z^n, z^m) by quadrature over the plane, for the orthogonality check.
Complex monomial_inner_product_quadrature(std::size_t n, std::size_t m, double alpha, double tol);

/// gamma_0 .. gamma_{N-1} from the Gamma-function ratio.
Eigen::VectorXd shift_weights(const BergmanParams& params, std::size_t N);

/// gamma_n = (n+1) c_{n+1} / c_n with c_n = ||z^n||^{-1}.
double shift_weight_from_norms(const BergmanParams& params, std::size_t n);

/// Least-squares slope of log gamma_n against log n over [n_lo, n_hi].
double gamma_asymptotic_fit(const BergmanParams& params, std::size_t n_lo, std::size_t n_hi);

/// min_{r>0} n! r^{-n} exp(r^alpha), attained at alpha r^alpha = n.
double derivative_norm_bound(int n, const BergmanParams& params);

/// D on span{u_0..u_N}: entries (n, n+1) = gamma_n.
class ShiftTruncation {
public:
    ShiftTruncation(const BergmanParams& params, std::size_t N);

    const BergmanParams& params() const noexcept { return params_; }
    std::size_t N() const noexcept { return static_cast<std::size_t>(gamma_.size()); }
    const Eigen::VectorXd& gamma() const noexcept { return gamma_; }

    /// Dense (N+1) x (N+1) matrix.
    Eigen::MatrixXd matrix() const;
    /// Leading m x m block of matrix(), m <= N+1.
    Eigen::MatrixXd leading_block(std::size_t m) const;

    /// ||T^k|| from the shift structure: T^k has a single nonzero per row,
    /// so its singular values are the products of k consecutive weights.
    double power_norm(int k) const;

private:
    BergmanParams params_;
    Eigen::VectorXd gamma_;
};

struct NormCheckReport {
    std::vector<double> power_norms;  ///< ||T^k||, k = 1..k_max
    std::vector<double> bounds;       ///< derivative_norm_bound(k)
    std::vector<double> root_norms;   ///< ||T^k||^{1/k}
    bool bound_holds = true;
    bool root_norms_decreasing = true;
    /// (M, sup_{m >= M} gamma_m) at a few cut points.
    std::vector<std::pair<std::size_t, double>> tail_sup;
};

NormCheckReport truncation_norm_checks(const ShiftTruncation& tr, int k_max);

struct TranslationReport {
    Eigen::VectorXcd shifted;   ///< exp(-sT) b in the u_n basis
    Eigen::VectorXcd expected;  ///< f(z - s) expanded directly
    double max_discrepancy = 0.0;  ///< max |difference| / max(1, max |expected|)
};

/// Compares exp(-sT) against f(z) -> f(z - s) for a polynomial f given by its
/// monomial coefficients. deg f must be below N.
TranslationReport translation_check(const ShiftTruncation& tr, Complex s, std::span<const Complex> poly_coeffs);

struct BergmanIdealReport {
    double slope = 0.0;           ///< fitted exponent of gamma_n ~ c n^{slope}
    std::vector<double> partial_sums;  ///< sum_{n<n_terms} gamma_n^p, p = 1..p_max
    IdealClass cls;
};

/// Trace-ideal class of D from the first n_terms weights, extended by the fitted power tail.
BergmanIdealReport bergman_ideal_class(const BergmanParams& params, int p_max, std::size_t n_terms = 100000);

} // namespace zetaquant
