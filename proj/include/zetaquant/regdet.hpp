#pragma once

// Fredholm and regularized determinants det_p(I - z D_Z) of diagonal
// operators, evaluated as compensated sums of per-factor logarithms.

#include <zetaquant/opmodel.hpp>

#include <cstddef>
#include <limits>
#include <optional>

namespace zetaquant {

/// How factors are grouped before their logarithms are accumulated.
enum class Pairing {
    as_stored,         ///< one factor per stored entry, stored order
    conjugate_paired,  ///< a_n and conj(a_n) multiplied first
    functional_paired, ///< additionally groups rho with 1 - rho (and conjugates)
};

struct RegDetRequest {
    int order = 1;
    Complex z{0.0, 0.0};
    /// Number of stored entries used; clamped to the operator size for finite tails.
    std::size_t truncation = std::numeric_limits<std::size_t>::max();
    Pairing pairing = Pairing::as_stored;
    /// Overrides the operator's own tail model when set.
    std::optional<TailModel> tail;
    /// Require order >= p_star of the operator's ideal class.
    bool certify = true;
};

struct DetResult {
    Complex value{1.0, 0.0};
    /// Bound on |log truncated - log full| under the tail model; 0 for a
    /// complete finite product, +inf when the model gives no rate.
    double tail_estimate = 0.0;
    /// First factor (stored index) that vanished exactly; value is 0 then.
    std::optional<std::size_t> zero_index;
};

/// Fredholm determinant det(I - z D) = prod_{n<N} (1 - z_n z) for a
/// trace-class operator, truncated at the first N stored entries.
DetResult det_fredholm(const DiagonalOperator& op, Complex z,
                       std::size_t N = std::numeric_limits<std::size_t>::max());

/// Regularized determinant det_p(I - z D) with the factor of regdet_term(p, z_n, -z).
DetResult det_p(const DiagonalOperator& op, const RegDetRequest& req);

/// Tail bound C |z|^p sum_{n>N} c^p n^{-p kappa}, with C = 2 and c fitted to the
/// stored tail; +inf when p*kappa <= 1 or |z| sup_{n>N} |z_n| > 1/2.
double power_law_tail_estimate(const DiagonalOperator& op, double kappa, int order, Complex z,
                               std::size_t N);

} // namespace zetaquant
