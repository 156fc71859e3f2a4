#pragma once

// Zeta functions of curves over F_q: brute-force point counts Y_n over
// F_{q^n}, the series exp(sum Y_n T^n / n) in exact arithmetic, recognition
// of P(T) in P(T) / ((1 - T)(1 - qT)), and checks of the Weil bounds.

#include <zetaquant/factors.hpp>
#include <zetaquant/finite_field.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zetaquant {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// c x^ex y^ey z^ez with an integer coefficient read in the prime subfield.
struct Term {
    long long coeff = 0;
    unsigned ex = 0, ey = 0, ez = 0;

    unsigned degree() const noexcept { return ex + ey + ez; }
};

enum class CurveForm { affine, projective };

/// F = 0 over F_q, q = p^k. Coefficients lie in the prime subfield, so the
/// same polynomial is read over every extension F_{q^n}.
struct PlaneCurve {
    std::uint32_t p = 0;
    std::uint32_t k = 1;
    CurveForm form = CurveForm::affine;
    std::vector<Term> terms;
    /// Affine form only: points at infinity, declared by the caller.
    std::uint64_t points_at_infinity = 0;
    std::optional<unsigned> genus_hint;

    std::uint64_t q() const;
    /// Throws ConstructionError on a zero polynomial, a projective form that
    /// is not homogeneous, or z appearing in an affine form.
    void validate() const;
};

/// Y_n = #points over F_{q^n}; DomainError when q^n exceeds bound.
std::uint64_t count_points(const PlaneCurve& curve, unsigned n,
                           std::uint64_t bound = FiniteField::kDefaultBound);

/// Coefficients 1, z_1, ..., z_M of exp(sum_{n<=M} Y_n T^n / n).
std::vector<Rational> zeta_series(std::span<const BigInt> counts);

struct LocalZeta {
    BigInt q;
    std::vector<BigInt> counts;     ///< Y_1..Y_M
    std::vector<BigInt> numerator;  ///< P(T) coefficients, constant term first
    unsigned genus = 0;
};

/// Reads P(T) off series * (1 - T)(1 - qT); the coefficients above deg P
/// must vanish through the known order. RecognitionError otherwise.
LocalZeta rational_recognize(std::span<const Rational> series, const BigInt& q,
                             std::optional<unsigned> genus_hint = std::nullopt);

/// Counts Y_1..Y_M then zeta_series and rational_recognize.
LocalZeta local_zeta(const PlaneCurve& curve, unsigned M, std::uint64_t bound = FiniteField::kDefaultBound);

/// Inverse roots alpha of P(T) = prod (1 - alpha T), from the companion
/// matrix of P reversed and rescaled by sqrt(q).
std::vector<Complex> inverse_roots(const LocalZeta& lz);

struct WeilReport {
    std::vector<double> moduli;  ///< |alpha|
    double max_rel_deviation = 0.0;  ///< max ||alpha| - sqrt q| / sqrt q
    bool pass = true;
};

WeilReport weil_rh_check(const LocalZeta& lz, double tol);

/// a_{2g-i} = q^{g-i} a_i for all i <= g.
bool functional_equation_holds(const LocalZeta& lz);

/// (Y_n - q^n - 1)^2 <= 4 g^2 q^n for every stored count, exactly.
bool weil_bound_holds(const LocalZeta& lz);

/// Y_1..Y_M regenerated from P(T) by Newton's identities.
std::vector<BigInt> regenerate_counts(const LocalZeta& lz, unsigned M);

struct CurveZetaValue {
    Complex value;   ///< det(I - T D_P) / det(I - T D_g), T = q^{-s}
    Complex direct;  ///< P(T) / ((1 - T)(1 - qT))
    double rel_discrepancy = 0.0;
};

/// ConsistencyError when the two routes differ by more than 1e-10 relative,
/// PoleError at T = 1 or T = 1/q.
CurveZetaValue curve_zeta_det_form(const LocalZeta& lz, Complex s);

/// Curve file: `field p k`, then `affine <lhs> = <rhs>` or
/// `projective <poly>`, optional `infinity <count>` and `genus <g>`;
/// '#' starts a comment.
PlaneCurve parse_curve(std::istream& in);
PlaneCurve load_curve(const std::filesystem::path& path);

/// The polynomial F as text, e.g. "y^2 - x^3 - x".
std::string format_polynomial(const std::vector<Term>& terms);

} // namespace zetaquant
