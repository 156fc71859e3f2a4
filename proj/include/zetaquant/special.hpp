#pragma once

// Reference values of Gamma, zeta and xi, computed by routes that share no
// code with the determinant reconstructions they are used to check.

#include <zetaquant/factors.hpp>

#include <numbers>

namespace zetaquant {

inline constexpr double kEulerGamma = std::numbers::egamma;

/// Lanczos approximation (g = 7, 9 terms) with the reflection formula for
/// Re z < 1/2. Throws PoleError at z = 0, -1, -2, ...
Complex gamma_oracle(Complex z);

/// Dirichlet eta by Borwein's accelerated alternating series.
Complex eta_oracle(Complex s);

/// zeta(s) = eta(s) / (1 - 2^{1-s}) for Re s >= 0, functional equation
/// otherwise. Throws PoleError at s = 1.
Complex zeta_oracle(Complex s);

/// xi(s) = pi^{-s/2} (s - 1) Gamma(s/2 + 1) zeta(s), evaluated as xi(1 - s)
/// near s = 1.
Complex xi_oracle(Complex s);

/// sin(pi z) / (pi z), 1 at z = 0.
Complex sinc_oracle(Complex z);

/// True when z is exactly 0, -1, -2, ...
bool is_nonpositive_integer(Complex z);

} // namespace zetaquant
