#pragma once

// Scalar kernels shared by every determinant in the library: Weierstrass
// elementary factors, the per-eigenvalue factor of a regularized
// determinant, and compensated summation of complex terms.
//
// All kernels are templated on the real type and are pure functions.

#include <zetaquant/errors.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <type_traits>

namespace zetaquant {

using Complex = std::complex<double>;

/// Below this modulus the factor (1 - z) is folded into the exponent via log1p.
inline constexpr double kLogSpaceRadius = 0.5;

namespace detail {

template <class Real>
bool is_finite(std::complex<Real> z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Principal log(1 + w), accurate for small |w|.
template <class Real>
std::complex<Real> log1p(std::complex<Real> w) {
    const Real x = w.real();
    const Real y = w.imag();
    // |1 + w|^2 - 1 = 2x + x^2 + y^2
    const Real re = Real(0.5) * std::log1p(Real(2) * x + x * x + y * y);
    const Real im = std::atan2(y, Real(1) + x);
    return {re, im};
}

/// exp(x), raising RangeError instead of producing Inf/NaN.
template <class Real>
std::complex<Real> exp_checked(std::complex<Real> x) {
    if (!is_finite(x)) throw RangeError("non-finite exponent");
    if (x.real() > std::log(std::numeric_limits<Real>::max())) {
        throw RangeError("exponential overflow");
    }
    return std::exp(x);
}

/// sum_{j=1}^{n} sign^j z^j / j by Horner's rule; sign is +1 or -1.
template <class Real>
std::complex<Real> power_series_head(std::complex<Real> z, int n, int sign) {
    if (n <= 0) return {};
    const std::complex<Real> x = sign > 0 ? z : -z;
    std::complex<Real> acc = Real(1) / static_cast<Real>(n);
    for (int j = n - 1; j >= 1; --j) acc = Real(1) / static_cast<Real>(j) + x * acc;
    return x * acc;
}

/// log of (1 + w) exp(sum_{j<p} (-1)^j w^j / j) given an exactly computed 1 + w.
template <class Real>
std::complex<Real> regdet_log_term_split(int p, std::complex<Real> w, std::complex<Real> one_plus_w) {
    if (one_plus_w == std::complex<Real>(0)) throw PoleError("factor 1 + mu*lambda vanishes");
    const std::complex<Real> linear =
        std::abs(w) <= Real(kLogSpaceRadius) ? log1p(w) : std::log(one_plus_w);
    return linear + power_series_head(w, p - 1, -1);
}

} // namespace detail

/// Weierstrass elementary factor E_n(z) = (1 - z) exp(z + z^2/2 + ... + z^n/n).
template <class Real>
std::complex<Real> elementary_factor(int n, std::complex<Real> z) {
    static_assert(std::is_floating_point_v<Real>);
    if (n < 0) throw DomainError("elementary_factor: negative order");
    const std::complex<Real> one(1);
    if (n == 0) return one - z;
    const std::complex<Real> head = detail::power_series_head(z, n, +1);
    std::complex<Real> out;
    if (std::abs(z) <= Real(kLogSpaceRadius)) {
        out = detail::exp_checked(detail::log1p(-z) + head);
    } else {
        out = (one - z) * detail::exp_checked(head);
    }
    if (!detail::is_finite(out)) throw RangeError("elementary_factor: overflow");
    return out;
}

/// Single-eigenvalue factor of det_p(I + mu A):
/// (1 + mu*lambda) exp(sum_{j=1}^{p-1} (-1)^j (mu*lambda)^j / j).
template <class Real>
std::complex<Real> regdet_term(int p, std::complex<Real> lambda, std::complex<Real> mu) {
    static_assert(std::is_floating_point_v<Real>);
    if (p < 1) throw DomainError("regdet_term: order must be >= 1");
    const std::complex<Real> w = mu * lambda;
    const std::complex<Real> one(1);
    if (p == 1) return one + w;
    const std::complex<Real> head = detail::power_series_head(w, p - 1, -1);
    if (std::abs(w) <= Real(kLogSpaceRadius)) return detail::exp_checked(detail::log1p(w) + head);
    return (one + w) * detail::exp_checked(head);
}

/// Principal-branch logarithm of regdet_term. Throws PoleError when 1 + mu*lambda = 0.
template <class Real>
std::complex<Real> regdet_log_term(int p, std::complex<Real> lambda, std::complex<Real> mu) {
    static_assert(std::is_floating_point_v<Real>);
    if (p < 1) throw DomainError("regdet_log_term: order must be >= 1");
    const std::complex<Real> w = mu * lambda;
    return detail::regdet_log_term_split(p, w, std::complex<Real>(1) + w);
}

/// Neumaier-compensated accumulator, applied to each component separately.
template <class Real>
class CompensatedSum {
public:
    CompensatedSum& operator+=(std::complex<Real> x) {
        accumulate(sum_re_, comp_re_, x.real());
        accumulate(sum_im_, comp_im_, x.imag());
        return *this;
    }

    /// Merges another partial sum, carrying its compensation along.
    CompensatedSum& operator+=(const CompensatedSum& other) {
        *this += std::complex<Real>(other.sum_re_, other.sum_im_);
        *this += std::complex<Real>(other.comp_re_, other.comp_im_);
        return *this;
    }

    std::complex<Real> value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static void accumulate(Real& sum, Real& comp, Real x) {
        const Real t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    Real sum_re_{0}, sum_im_{0};
    Real comp_re_{0}, comp_im_{0};
};

/// Compensated sum of the terms in the given order.
template <class Real>
std::complex<Real> ordered_compensated_sum(std::span<const std::complex<Real>> terms) {
    CompensatedSum<Real> acc;
    for (const auto& t : terms) acc += t;
    return acc.value();
}

inline Complex ordered_compensated_sum(std::span<const Complex> terms) {
    return ordered_compensated_sum<double>(terms);
}

} // namespace zetaquant
