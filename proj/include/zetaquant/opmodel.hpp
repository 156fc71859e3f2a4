#pragma once

// The restricted operator D_Z attached to a multiset of zeros (or poles):
// a diagonal operator on the total eigenspace whose entries are the
// reciprocals z_n = 1/a_n, together with its spectral data and its
// trace-ideal classification.

#include <zetaquant/factors.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace zetaquant {

enum class MultisetKind { zeros, poles };

struct MultisetEntry {
    Complex value;
    std::size_t multiplicity = 1;
};

/// Ordered multiset of nonzero complex numbers with multiplicities.
class ZeroMultiset {
public:
    explicit ZeroMultiset(MultisetKind kind = MultisetKind::zeros) : kind_(kind) {}
    ZeroMultiset(std::vector<MultisetEntry> entries, MultisetKind kind = MultisetKind::zeros);

    /// One entry of multiplicity 1 per value, order preserved.
    static ZeroMultiset from_values(std::span<const Complex> values,
                                    MultisetKind kind = MultisetKind::zeros);

    /// Appends an entry. Zero, non-finite values and zero multiplicity are rejected.
    void add(Complex value, std::size_t multiplicity = 1);

    const std::vector<MultisetEntry>& entries() const noexcept { return entries_; }
    MultisetKind kind() const noexcept { return kind_; }
    std::size_t expanded_size() const noexcept { return expanded_size_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// Values repeated by multiplicity, in entry order.
    std::vector<Complex> expanded() const;

    /// Entrywise reciprocal with multiplicities and tags kept.
    ZeroMultiset reciprocal() const;

    /// Tag: the stored entries are a finite truncation of an infinite sequence.
    bool is_truncation() const noexcept { return truncation_; }
    void mark_truncation(bool value = true) noexcept { truncation_ = value; }

private:
    std::vector<MultisetEntry> entries_;
    MultisetKind kind_ = MultisetKind::zeros;
    std::size_t expanded_size_ = 0;
    bool truncation_ = false;
};

/// The stored entries are the whole sequence.
struct FiniteTail {};
/// |z_n| = Theta(n^{-kappa}); then sum |z_n|^p converges iff p*kappa > 1.
struct PowerLawTail {
    double kappa;
};
/// Membership in J_p for p >= p_star is asserted by the caller.
struct DeclaredTail {
    int p_star;
};
using TailModel = std::variant<FiniteTail, PowerLawTail, DeclaredTail>;

/// D_Z restricted to its eigenspace: multiplication by z_n = 1/a_n.
/// Immutable after construction.
class DiagonalOperator {
public:
    DiagonalOperator() = default;

    const Eigen::VectorXcd& diagonal() const noexcept { return diagonal_; }
    /// The expanded a_n, aligned with diagonal().
    const Eigen::VectorXcd& source_values() const noexcept { return source_values_; }
    const ZeroMultiset& source() const { return *source_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(diagonal_.size()); }
    bool is_truncation() const noexcept { return source_ && source_->is_truncation(); }
    const TailModel& tail_model() const noexcept { return tail_; }

    /// Same operator under a different tail model.
    DiagonalOperator with_tail(TailModel tail) const;

private:
    friend DiagonalOperator from_zeros(ZeroMultiset zeros, TailModel tail);
    friend DiagonalOperator from_diagonal(std::span<const Complex> diagonal, TailModel tail);

    std::shared_ptr<const ZeroMultiset> source_ = std::make_shared<const ZeroMultiset>();
    Eigen::VectorXcd diagonal_;
    Eigen::VectorXcd source_values_;
    TailModel tail_ = FiniteTail{};
};

/// Builds D_Z with z_n = 1/a_n expanded by multiplicity. A truncated multiset
/// needs a non-finite tail model.
DiagonalOperator from_zeros(ZeroMultiset zeros, TailModel tail = FiniteTail{});

/// Builds the operator whose diagonal is exactly the given values.
DiagonalOperator from_diagonal(std::span<const Complex> diagonal, TailModel tail = FiniteTail{});

/// Least-squares fit of log|z_n| against log n over the upper half of the
/// stored entries, rounded to 6 decimals so exact power laws land on their
/// exponent. ConstructionError with fewer than 16 entries.
PowerLawTail fit_power_law_tail(const DiagonalOperator& op);

struct Spectrum {
    /// Distinct stored diagonal values, in order of first occurrence.
    std::vector<Complex> points;
    /// Set when the stored sequence truncates an infinite one: 0 is then a limit point.
    bool includes_zero = false;
};

Spectrum spectrum(const DiagonalOperator& op);

/// Number of diagonal entries exactly equal to z.
std::size_t eigen_multiplicity(const DiagonalOperator& op, Complex z);

/// sup_n |z_n| over the stored entries; 0 for the empty operator.
double operator_norm(const DiagonalOperator& op);

struct IdealClass {
    /// Least p <= p_max with D in J_p; empty means none up to p_max.
    std::optional<int> p_star;
    int p_max = 1;
    bool is_bounded = false;
    bool is_compact = false;
    bool is_self_adjoint = false;

    bool in_ideal(int p) const noexcept { return p_star && p >= *p_star; }
    bool trace_class() const noexcept { return in_ideal(1); }
    bool hilbert_schmidt() const noexcept { return in_ideal(2); }
};

/// Trace-ideal class under an explicit tail model. tol bounds |Im z_n| for
/// self-adjointness and the decay exponent for compactness.
IdealClass classify(const DiagonalOperator& op, const TailModel& tail, int p_max, double tol = 0.0);

/// classify under the operator's own tail model.
IdealClass classify(const DiagonalOperator& op, int p_max, double tol = 0.0);

} // namespace zetaquant
