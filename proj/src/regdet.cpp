#include <zetaquant/regdet.hpp>

#include <zetaquant/errors.hpp>
#include <zetaquant/parallel.hpp>

#include <cmath>
#include <limits>
#include <unordered_map>

namespace zetaquant {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ComplexHash {
    std::size_t operator()(const Complex& z) const noexcept {
        return std::hash<double>{}(z.real()) * 31u ^ std::hash<double>{}(z.imag());
    }
};

/// Groups of stored indices in compressed-row form, ordered by leading index.
struct Groups {
    std::vector<std::size_t> offsets{0};
    std::vector<std::size_t> members;

    std::size_t count() const { return offsets.size() - 1; }
};

Groups build_groups(const Eigen::VectorXcd& zeros, std::size_t n, Pairing pairing) {
    std::unordered_map<Complex, std::vector<std::size_t>, ComplexHash> where;
    where.reserve(n);
    for (std::size_t i = 0; i < n; ++i) where[zeros[static_cast<Eigen::Index>(i)]].push_back(i);

    std::vector<char> used(n, 0);
    auto take = [&](const Complex& value) -> std::optional<std::size_t> {
        auto it = where.find(value);
        if (it == where.end()) return std::nullopt;
        for (std::size_t j : it->second) {
            if (!used[j]) return j;
        }
        return std::nullopt;
    };

    Groups g;
    g.members.reserve(n);
    g.offsets.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        used[i] = 1;
        g.members.push_back(i);
        const Complex a = zeros[static_cast<Eigen::Index>(i)];
        std::vector<Complex> partners;
        if (a.imag() != 0.0) partners.push_back(std::conj(a));
        if (pairing == Pairing::functional_paired) {
            const Complex reflected = 1.0 - a;
            for (const Complex& c : {reflected, std::conj(reflected)}) {
                if (c == a) continue;
                bool dup = false;
                for (const Complex& p : partners) dup = dup || p == c;
                if (!dup) partners.push_back(c);
            }
        }
        for (const Complex& c : partners) {
            if (auto j = take(c)) {
                used[*j] = 1;
                g.members.push_back(*j);
            }
        }
        g.offsets.push_back(g.members.size());
    }
    return g;
}

std::size_t effective_length(const DiagonalOperator& op, const TailModel& tail, std::size_t requested) {
    if (std::holds_alternative<FiniteTail>(tail)) {
        if (requested < op.size()) {
            throw DomainError("finite tail model: truncation below the number of stored entries");
        }
        return op.size();
    }
    return std::min(requested, op.size());
}

} // namespace

double power_law_tail_estimate(const DiagonalOperator& op, double kappa, int order, Complex z,
                               std::size_t N) {
    const double s = static_cast<double>(order) * kappa;
    if (!(s > 1.0) || N == 0) return kInf;
    if (z == Complex(0.0)) return 0.0;
    // c with |z_n| <= c n^{-kappa}, fitted on the upper half of the stored prefix
    double c = 0.0;
    for (std::size_t n = N / 2 + 1; n <= N; ++n) {
        const double mag = std::abs(op.diagonal()[static_cast<Eigen::Index>(n - 1)]);
        c = std::max(c, mag * std::pow(static_cast<double>(n), kappa));
    }
    const double dn = static_cast<double>(N);
    if (std::abs(z) * c * std::pow(dn + 1.0, -kappa) > 0.5) return kInf;
    return 2.0 * std::pow(std::abs(z) * c, order) * std::pow(dn, 1.0 - s) / (s - 1.0);
}

DetResult det_p(const DiagonalOperator& op, const RegDetRequest& req) {
    if (req.order < 1) throw DomainError("det_p: order must be >= 1");
    const TailModel& tail = req.tail ? *req.tail : op.tail_model();
    if (req.certify) {
        const IdealClass cls = classify(op, tail, req.order);
        if (!cls.in_ideal(req.order)) {
            throw CertificationError("det_p: tail model does not place the operator in J_" +
                                     std::to_string(req.order));
        }
    }
    const std::size_t n = effective_length(op, tail, req.truncation);

    DetResult out;
    if (std::holds_alternative<FiniteTail>(tail)) {
        out.tail_estimate = 0.0;
    } else if (const auto* pl = std::get_if<PowerLawTail>(&tail)) {
        out.tail_estimate = power_law_tail_estimate(op, pl->kappa, req.order, req.z, n);
    } else {
        out.tail_estimate = req.z == Complex(0.0) ? 0.0 : kInf;
    }
    if (req.z == Complex(0.0)) return out;

    const Complex z = req.z;
    const int p = req.order;
    const auto& diag = op.diagonal();
    const auto& zeros = op.source_values();

    // factor: (1 + w) exp(sum_{j<p} (-1)^j w^j / j) with w = -z z_n; 1 + w = (a_n - z)/a_n
    LogSum sum;
    if (req.pairing == Pairing::as_stored) {
        sum = chunked_log_sum(n, [&](std::size_t i) -> std::optional<Complex> {
            const auto k = static_cast<Eigen::Index>(i);
            const Complex one_plus_w = (zeros[k] - z) / zeros[k];
            if (one_plus_w == Complex(0.0)) return std::nullopt;
            return detail::regdet_log_term_split(p, -z * diag[k], one_plus_w);
        });
    } else {
        const Groups groups = build_groups(zeros, n, req.pairing);
        std::optional<std::size_t> zero_member;
        sum = chunked_log_sum(groups.count(), [&](std::size_t g) -> std::optional<Complex> {
            Complex u(0.0);  // prod (1 + w_i) - 1
            Complex heads(0.0);
            for (std::size_t m = groups.offsets[g]; m < groups.offsets[g + 1]; ++m) {
                const auto k = static_cast<Eigen::Index>(groups.members[m]);
                const Complex w = -z * diag[k];
                if (zeros[k] == z) return std::nullopt;
                u = u + w + u * w;
                heads += detail::power_series_head(w, p - 1, -1);
            }
            const Complex one_plus_u = 1.0 + u;
            if (one_plus_u == Complex(0.0)) return std::nullopt;
            const Complex lin = std::abs(u) <= kLogSpaceRadius ? detail::log1p(u) : std::log(one_plus_u);
            return lin + heads;
        });
        if (sum.zero_index) {
            // report the stored index of the vanishing member
            const std::size_t g = *sum.zero_index;
            std::size_t idx = groups.members[groups.offsets[g]];
            for (std::size_t m = groups.offsets[g]; m < groups.offsets[g + 1]; ++m) {
                const auto k = static_cast<Eigen::Index>(groups.members[m]);
                if (zeros[k] == z) {
                    idx = groups.members[m];
                    break;
                }
            }
            zero_member = idx;
        }
        if (zero_member) sum.zero_index = zero_member;
    }

    if (sum.zero_index) {
        out.value = Complex(0.0);
        out.zero_index = sum.zero_index;
        return out;
    }
    out.value = detail::exp_checked(sum.sum);
    return out;
}

DetResult det_fredholm(const DiagonalOperator& op, Complex z, std::size_t N) {
    RegDetRequest req;
    req.order = 1;
    req.z = z;
    req.truncation = N;
    return det_p(op, req);
}

} // namespace zetaquant
