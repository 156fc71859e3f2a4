#include <zetaquant/opmodel.hpp>

#include <zetaquant/errors.hpp>

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace zetaquant {

ZeroMultiset::ZeroMultiset(std::vector<MultisetEntry> entries, MultisetKind kind) : kind_(kind) {
    entries_.reserve(entries.size());
    for (const auto& e : entries) add(e.value, e.multiplicity);
}

ZeroMultiset ZeroMultiset::from_values(std::span<const Complex> values, MultisetKind kind) {
    ZeroMultiset out(kind);
    out.entries_.reserve(values.size());
    for (const Complex& v : values) out.add(v, 1);
    return out;
}

void ZeroMultiset::add(Complex value, std::size_t multiplicity) {
    if (value == Complex(0.0)) throw ConstructionError("zero multiset: 0 cannot be an entry");
    if (!detail::is_finite(value)) throw ConstructionError("zero multiset: non-finite entry");
    if (multiplicity == 0) throw ConstructionError("zero multiset: multiplicity must be >= 1");
    entries_.push_back({value, multiplicity});
    expanded_size_ += multiplicity;
}

std::vector<Complex> ZeroMultiset::expanded() const {
    std::vector<Complex> out;
    out.reserve(expanded_size_);
    for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
    return out;
}

ZeroMultiset ZeroMultiset::reciprocal() const {
    ZeroMultiset out(kind_);
    out.entries_.reserve(entries_.size());
    for (const auto& e : entries_) out.add(1.0 / e.value, e.multiplicity);
    out.truncation_ = truncation_;
    return out;
}

DiagonalOperator DiagonalOperator::with_tail(TailModel tail) const {
    DiagonalOperator copy = *this;
    copy.tail_ = tail;
    return copy;
}

namespace {

void check_tail(const ZeroMultiset& zeros, const TailModel& tail) {
    if (zeros.is_truncation() && std::holds_alternative<FiniteTail>(tail)) {
        throw ConstructionError("a truncated sequence needs a power-law or declared tail model");
    }
}

} // namespace

DiagonalOperator from_zeros(ZeroMultiset zeros, TailModel tail) {
    check_tail(zeros, tail);
    DiagonalOperator op;
    const auto n = static_cast<Eigen::Index>(zeros.expanded_size());
    op.diagonal_.resize(n);
    op.source_values_.resize(n);
    Eigen::Index k = 0;
    for (const auto& e : zeros.entries()) {
        const Complex z = 1.0 / e.value;
        for (std::size_t m = 0; m < e.multiplicity; ++m, ++k) {
            op.diagonal_[k] = z;
            op.source_values_[k] = e.value;
        }
    }
    op.source_ = std::make_shared<const ZeroMultiset>(std::move(zeros));
    op.tail_ = tail;
    return op;
}

DiagonalOperator from_diagonal(std::span<const Complex> diagonal, TailModel tail) {
    ZeroMultiset zeros;
    for (const Complex& d : diagonal) {
        if (d == Complex(0.0)) throw ConstructionError("diagonal entry 0 has no finite reciprocal");
        zeros.add(1.0 / d);
    }
    DiagonalOperator op = from_zeros(std::move(zeros), tail);
    // keep the caller's values bit for bit
    for (std::size_t i = 0; i < diagonal.size(); ++i) op.diagonal_[static_cast<Eigen::Index>(i)] = diagonal[i];
    return op;
}

PowerLawTail fit_power_law_tail(const DiagonalOperator& op) {
    const std::size_t n = op.size();
    if (n < 16) throw ConstructionError("fit_power_law_tail: needs at least 16 entries");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, count = 0.0;
    for (std::size_t k = n / 2; k < n; ++k) {
        const double x = std::log(static_cast<double>(k + 1));
        const double y = std::log(std::abs(op.diagonal()[static_cast<Eigen::Index>(k)]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        count += 1.0;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    return PowerLawTail{std::round(-slope * 1e6) / 1e6};
}

Spectrum spectrum(const DiagonalOperator& op) {
    Spectrum out;
    out.includes_zero = op.is_truncation();
    struct Hash {
        std::size_t operator()(const Complex& z) const noexcept {
            return std::hash<double>{}(z.real()) ^ (std::hash<double>{}(z.imag()) << 1);
        }
    };
    std::unordered_set<Complex, Hash> seen;
    for (Eigen::Index i = 0; i < op.diagonal().size(); ++i) {
        const Complex z = op.diagonal()[i];
        if (seen.insert(z).second) out.points.push_back(z);
    }
    return out;
}

std::size_t eigen_multiplicity(const DiagonalOperator& op, Complex z) {
    const auto& d = op.diagonal();
    return static_cast<std::size_t>(std::count(d.data(), d.data() + d.size(), z));
}

double operator_norm(const DiagonalOperator& op) {
    if (op.size() == 0) return 0.0;
    return op.diagonal().cwiseAbs().maxCoeff();
}

IdealClass classify(const DiagonalOperator& op, const TailModel& tail, int p_max, double tol) {
    if (p_max < 1) throw DomainError("classify: p_max must be >= 1");
    IdealClass out;
    out.p_max = p_max;
    out.is_self_adjoint = (op.diagonal().imag().cwiseAbs().array() <= tol).all();

    std::visit(
        [&](const auto& model) {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, FiniteTail>) {
                out.is_bounded = true;
                out.is_compact = true;
                out.p_star = 1;
            } else if constexpr (std::is_same_v<T, PowerLawTail>) {
                out.is_bounded = model.kappa >= -tol;
                out.is_compact = model.kappa > tol;
                for (int p = 1; p <= p_max; ++p) {
                    if (static_cast<double>(p) * model.kappa > 1.0) {
                        out.p_star = p;
                        break;
                    }
                }
            } else {
                if (model.p_star < 1) throw DomainError("declared tail: p_star must be >= 1");
                out.is_bounded = true;
                out.is_compact = true;
                if (model.p_star <= p_max) out.p_star = model.p_star;
            }
        },
        tail);
    return out;
}

IdealClass classify(const DiagonalOperator& op, int p_max, double tol) {
    return classify(op, op.tail_model(), p_max, tol);
}

} // namespace zetaquant
