#include <zetaquant/ffcurves.hpp>

#include <zetaquant/errors.hpp>
#include <zetaquant/opmodel.hpp>
#include <zetaquant/regdet.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>

namespace zetaquant {

namespace {

struct FieldTerm {
    FiniteField::Elem c;
    unsigned ex, ey, ez;
};

std::vector<FieldTerm> to_field(const PlaneCurve& curve, const FiniteField& F) {
    std::vector<FieldTerm> out;
    for (const Term& t : curve.terms) {
        const auto c = F.from_int(t.coeff);
        if (c != 0) out.push_back({c, t.ex, t.ey, t.ez});
    }
    return out;
}

FiniteField::Elem evaluate(const FiniteField& F, const std::vector<FieldTerm>& terms, FiniteField::Elem x,
                           FiniteField::Elem y, FiniteField::Elem z) {
    FiniteField::Elem acc = 0;
    for (const FieldTerm& t : terms) {
        const auto v = F.mul(t.c, F.mul(F.pow(x, t.ex), F.mul(F.pow(y, t.ey), F.pow(z, t.ez))));
        acc = F.add(acc, v);
    }
    return acc;
}

BigInt big_pow(const BigInt& b, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

std::uint64_t PlaneCurve::q() const {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < k; ++i) out *= p;
    return out;
}

void PlaneCurve::validate() const {
    if (!is_prime(p)) throw ConstructionError("curve: field characteristic must be prime");
    if (k < 1) throw ConstructionError("curve: field degree must be >= 1");
    bool nonzero = false;
    std::optional<unsigned> degree;
    for (const Term& t : terms) {
        if (t.coeff % static_cast<long long>(p) == 0) continue;
        nonzero = true;
        if (form == CurveForm::affine && t.ez != 0) throw ConstructionError("curve: affine form uses x and y only");
        if (form == CurveForm::projective) {
            if (degree && *degree != t.degree()) throw ConstructionError("curve: projective form must be homogeneous");
            degree = t.degree();
        }
    }
    if (!nonzero) throw ConstructionError("curve: zero polynomial");
}

std::uint64_t count_points(const PlaneCurve& curve, unsigned n, std::uint64_t bound) {
    curve.validate();
    if (n < 1) throw DomainError("count_points: n must be >= 1");
    std::uint64_t Q = 1;
    for (unsigned i = 0; i < n; ++i) {
        Q *= curve.q();
        if (Q > bound) {
            throw DomainError("count_points: q^n = " + std::to_string(Q) +
                              " exceeds the enumeration bound; use a smaller field or fewer extensions");
        }
    }
    const FiniteField F(curve.p, curve.k * n, bound);
    const auto terms = to_field(curve, F);
    const auto size = static_cast<FiniteField::Elem>(Q);

    std::uint64_t count = 0;
    if (curve.form == CurveForm::projective) {
        for (FiniteField::Elem x = 0; x < size; ++x) {
            for (FiniteField::Elem y = 0; y < size; ++y) count += evaluate(F, terms, x, y, 1) == 0;
        }
        for (FiniteField::Elem x = 0; x < size; ++x) count += evaluate(F, terms, x, 1, 0) == 0;
        count += evaluate(F, terms, 1, 0, 0) == 0;
        return count;
    }

    // c y^2 + g(x) = 0: count square roots of -g(x)/c from a table
    std::optional<FiniteField::Elem> c_y2;
    std::vector<FieldTerm> g;
    bool hyperelliptic = true;
    for (const FieldTerm& t : terms) {
        if (t.ey == 2 && t.ex == 0 && !c_y2) {
            c_y2 = t.c;
        } else if (t.ey == 0) {
            g.push_back(t);
        } else {
            hyperelliptic = false;
        }
    }
    if (hyperelliptic && c_y2) {
        std::vector<std::uint32_t> roots(size, 0);
        for (FiniteField::Elem y = 0; y < size; ++y) ++roots[F.mul(y, y)];
        const auto scale = F.neg(F.inv(*c_y2));
        for (FiniteField::Elem x = 0; x < size; ++x) count += roots[F.mul(scale, evaluate(F, g, x, 0, 1))];
    } else {
        for (FiniteField::Elem x = 0; x < size; ++x) {
            for (FiniteField::Elem y = 0; y < size; ++y) count += evaluate(F, terms, x, y, 1) == 0;
        }
    }
    return count + curve.points_at_infinity;
}

std::vector<Rational> zeta_series(std::span<const BigInt> counts) {
    std::vector<Rational> z(counts.size() + 1);
    z[0] = 1;
    for (std::size_t n = 1; n <= counts.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += Rational(counts[k - 1]) * z[n - k];
        z[n] = acc / static_cast<long long>(n);
    }
    return z;
}

LocalZeta rational_recognize(std::span<const Rational> series, const BigInt& q, std::optional<unsigned> genus_hint) {
    if (series.size() < 2) throw RecognitionError("rational_recognize: need the series through order >= 1");
    const std::size_t M = series.size() - 1;
    std::vector<BigInt> s(series.size());
    for (std::size_t j = 0; j <= M; ++j) {
        if (denominator(series[j]) != 1) throw RecognitionError("rational_recognize: non-integral series coefficient");
        s[j] = numerator(series[j]);
    }
    // c = s * (1 - (q+1) T + q T^2), known through order M
    std::vector<BigInt> c(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        c[j] = s[j];
        if (j >= 1) c[j] -= (q + 1) * s[j - 1];
        if (j >= 2) c[j] += q * s[j - 2];
    }
    std::size_t deg = 0;
    for (std::size_t j = 0; j <= M; ++j) {
        if (c[j] != 0) deg = j;
    }
    if (genus_hint) {
        const std::size_t want = 2 * static_cast<std::size_t>(*genus_hint);
        if (M < want + 1) throw RecognitionError("rational_recognize: need counts through order 2g + 1");
        if (deg != want) throw RecognitionError("rational_recognize: numerator degree does not match the genus hint");
    } else {
        if (deg == M) throw RecognitionError("rational_recognize: numerator does not terminate within the known order");
        if (deg % 2 != 0) throw RecognitionError("rational_recognize: numerator of odd degree");
    }
    if (c[0] != 1) throw RecognitionError("rational_recognize: P(0) != 1");

    LocalZeta out;
    out.q = q;
    out.numerator.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(deg) + 1);
    out.genus = static_cast<unsigned>(deg / 2);
    return out;
}

LocalZeta local_zeta(const PlaneCurve& curve, unsigned M, std::uint64_t bound) {
    std::vector<BigInt> counts;
    for (unsigned n = 1; n <= M; ++n) counts.emplace_back(count_points(curve, n, bound));
    const auto series = zeta_series(counts);
    LocalZeta lz = rational_recognize(series, BigInt(curve.q()), curve.genus_hint);
    lz.counts = std::move(counts);
    return lz;
}

std::vector<Complex> inverse_roots(const LocalZeta& lz) {
    const std::size_t m = lz.numerator.size() - 1;
    if (m == 0) return {};
    const double sq = std::sqrt(lz.q.convert_to<double>());
    // y^m + sum_i a_i q^{-i/2} y^{m-i}, whose roots are alpha / sqrt(q)
    const auto mm = static_cast<Eigen::Index>(m);
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(mm, mm);
    for (std::size_t i = 1; i <= m; ++i) {
        C(0, static_cast<Eigen::Index>(i - 1)) = -lz.numerator[i].convert_to<double>() / std::pow(sq, static_cast<double>(i));
    }
    for (Eigen::Index i = 1; i < mm; ++i) C(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    std::vector<Complex> out;
    for (Eigen::Index i = 0; i < mm; ++i) out.push_back(sq * es.eigenvalues()[i]);
    return out;
}

WeilReport weil_rh_check(const LocalZeta& lz, double tol) {
    WeilReport out;
    const double sq = std::sqrt(lz.q.convert_to<double>());
    for (const Complex& a : inverse_roots(lz)) {
        const double mod = std::abs(a);
        out.moduli.push_back(mod);
        out.max_rel_deviation = std::max(out.max_rel_deviation, std::abs(mod - sq) / sq);
    }
    out.pass = out.max_rel_deviation <= tol;
    return out;
}

bool functional_equation_holds(const LocalZeta& lz) {
    const unsigned g = lz.genus;
    if (lz.numerator.size() != 2 * static_cast<std::size_t>(g) + 1) return false;
    for (unsigned i = 0; i <= g; ++i) {
        if (lz.numerator[2 * g - i] != big_pow(lz.q, g - i) * lz.numerator[i]) return false;
    }
    return true;
}

bool weil_bound_holds(const LocalZeta& lz) {
    const BigInt g = lz.genus;
    for (std::size_t n = 1; n <= lz.counts.size(); ++n) {
        const BigInt qn = big_pow(lz.q, static_cast<unsigned>(n));
        const BigInt dev = lz.counts[n - 1] - qn - 1;
        if (dev * dev > 4 * g * g * qn) return false;
    }
    return true;
}

std::vector<BigInt> regenerate_counts(const LocalZeta& lz, unsigned M) {
    auto a = [&](std::size_t i) -> BigInt { return i < lz.numerator.size() ? lz.numerator[i] : BigInt(0); };
    std::vector<BigInt> power_sums(M + 1);
    std::vector<BigInt> out;
    for (unsigned n = 1; n <= M; ++n) {
        BigInt sn = -BigInt(n) * a(n);
        for (unsigned i = 1; i < n; ++i) sn -= a(i) * power_sums[n - i];
        power_sums[n] = sn;
        out.push_back(big_pow(lz.q, n) + 1 - sn);
    }
    return out;
}

CurveZetaValue curve_zeta_det_form(const LocalZeta& lz, Complex s) {
    const double q = lz.q.convert_to<double>();
    const Complex T = std::exp(-s * std::log(q));

    const std::vector<Complex> alpha = inverse_roots(lz);
    const DiagonalOperator num_op = from_diagonal(alpha);
    const std::vector<Complex> trivial{1.0, q};
    const DiagonalOperator den_op = from_diagonal(trivial);

    const DetResult num = det_fredholm(num_op, T);
    const DetResult den = det_fredholm(den_op, T);
    if (den.zero_index) throw PoleError("curve_zeta_det_form: q^{-s} is a pole", *den.zero_index);

    CurveZetaValue out;
    out.value = num.value / den.value;
    Complex p_t(0.0);
    for (std::size_t i = lz.numerator.size(); i-- > 0;) p_t = p_t * T + lz.numerator[i].convert_to<double>();
    const Complex g_t = (1.0 - T) * (1.0 - q * T);
    if (g_t == Complex(0.0)) throw PoleError("curve_zeta_det_form: q^{-s} is a pole");
    out.direct = p_t / g_t;
    const double scale = std::max({std::abs(out.value), std::abs(out.direct), 1e-300});
    out.rel_discrepancy = std::abs(out.value - out.direct) / scale;
    if (!(out.rel_discrepancy <= 1e-10)) {
        throw ConsistencyError("curve_zeta_det_form: determinant and direct routes differ by " +
                               std::to_string(out.rel_discrepancy));
    }
    return out;
}

} // namespace zetaquant
