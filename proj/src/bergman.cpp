#include <zetaquant/bergman.hpp>

#include <zetaquant/errors.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace zetaquant {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("bergman: alpha must lie in (0, 1]");
}

long double log_norm_sq_ld(std::size_t n, double alpha) {
    const long double b = 2.0L / alpha;
    const long double x = b * static_cast<long double>(n + 1);
    return std::log(2.0L * std::numbers::pi_v<long double> / alpha) - x * std::numbers::ln2_v<long double> +
           std::lgamma(x);
}

/// int_0^inf r^e exp(-2 r^alpha) dr, substituting x = 2 r^alpha:
/// (1/(2 alpha)) int_0^inf (x/2)^{b-1} e^{-x} dx with b = (e+1)/alpha.
double radial_integral(double e, double alpha, double tol) {
    const double b = (e + 1.0) / alpha;
    const double peak = std::max(b - 1.0, 1e-3);
    const double log_peak = (b - 1.0) * std::log(peak / 2.0) - peak;
    auto g = [&](double x) {
        if (x <= 0.0) return 0.0;
        return std::exp((b - 1.0) * std::log(x / 2.0) - x - log_peak);
    };
    // integrand is <= 1 after scaling; past the peak, tail <= g(X) / (1 - (b-1)/X)
    double X = peak + 10.0 * std::sqrt(b) + 10.0;
    while (g(X) / (1.0 - (b - 1.0) / X) > tol / 10.0) X *= 1.5;

    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    double err_lo = 0.0;
    double err_hi = 0.0;
    const double lo = GK::integrate(g, 0.0, peak, 15, tol / 4.0, &err_lo);
    const double hi = GK::integrate(g, peak, X, 15, tol / 4.0, &err_hi);
    const double total = lo + hi;
    if (!(err_lo + err_hi <= tol * total)) throw Error("bergman: radial quadrature did not converge");
    return std::exp(log_peak) * total / (2.0 * alpha);
}

} // namespace

BergmanParams::BergmanParams(double a) : alpha(a) { check_alpha(a); }

double log_weight_norm_sq(std::size_t n, double alpha) {
    check_alpha(alpha);
    return static_cast<double>(log_norm_sq_ld(n, alpha));
}

double weight_norm_sq(std::size_t n, double alpha) {
    const double v = std::exp(log_weight_norm_sq(n, alpha));
    if (!std::isfinite(v)) throw RangeError("weight_norm_sq: overflow");
    return v;
}

double weight_norm_sq_quadrature(std::size_t n, double alpha, double tol) {
    check_alpha(alpha);
    return 2.0 * kPi * radial_integral(2.0 * static_cast<double>(n) + 1.0, alpha, tol);
}

Complex monomial_inner_product_quadrature(std::size_t n, std::size_t m, double alpha, double tol) {
    check_alpha(alpha);
    const double radial = radial_integral(static_cast<double>(n + m) + 1.0, alpha, tol);
    const double k = static_cast<double>(n) - static_cast<double>(m);
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double re = GK::integrate([k](double t) { return std::cos(k * t); }, 0.0, 2.0 * kPi, 15, tol);
    const double im = GK::integrate([k](double t) { return std::sin(k * t); }, 0.0, 2.0 * kPi, 15, tol);
    return radial * Complex(re, im);
}

Eigen::VectorXd shift_weights(const BergmanParams& params, std::size_t N) {
    if (N < 1) throw DomainError("shift_weights: N must be >= 1");
    const long double b = 2.0L / params.alpha;
    Eigen::VectorXd out(static_cast<Eigen::Index>(N));
    long double lg_next = std::lgamma(b);
    for (std::size_t n = 0; n < N; ++n) {
        const long double lg_cur = lg_next;
        lg_next = std::lgamma(b * static_cast<long double>(n + 2));
        const long double log_sq =
            b * std::numbers::ln2_v<long double> + 2.0L * std::log(static_cast<long double>(n + 1)) + lg_cur - lg_next;
        out[static_cast<Eigen::Index>(n)] = static_cast<double>(std::exp(0.5L * log_sq));
    }
    return out;
}

double shift_weight_from_norms(const BergmanParams& params, std::size_t n) {
    const long double log_c_n = -0.5L * log_norm_sq_ld(n, params.alpha);
    const long double log_c_next = -0.5L * log_norm_sq_ld(n + 1, params.alpha);
    return static_cast<double>(std::exp(std::log(static_cast<long double>(n + 1)) + log_c_next - log_c_n));
}

double gamma_asymptotic_fit(const BergmanParams& params, std::size_t n_lo, std::size_t n_hi) {
    if (n_lo < 10 || n_lo >= n_hi) throw DomainError("gamma_asymptotic_fit: need 10 <= n_lo < n_hi");
    const Eigen::VectorXd g = shift_weights(params, n_hi + 1);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double count = static_cast<double>(n_hi - n_lo + 1);
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(g[static_cast<Eigen::Index>(n)]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

double derivative_norm_bound(int n, const BergmanParams& params) {
    if (n < 1) throw DomainError("derivative_norm_bound: n must be >= 1");
    const double a = params.alpha;
    const double dn = static_cast<double>(n);
    // stationary point: alpha r^alpha = n
    const double log_r = std::log(dn / a) / a;
    return std::exp(std::lgamma(dn + 1.0) - dn * log_r + dn / a);
}

ShiftTruncation::ShiftTruncation(const BergmanParams& params, std::size_t N)
    : params_(params), gamma_(shift_weights(params, N)) {}

Eigen::MatrixXd ShiftTruncation::matrix() const { return leading_block(N() + 1); }

Eigen::MatrixXd ShiftTruncation::leading_block(std::size_t m) const {
    if (m > N() + 1) throw DomainError("leading_block: size exceeds the truncation");
    const auto k = static_cast<Eigen::Index>(m);
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index n = 0; n + 1 < k; ++n) T(n, n + 1) = gamma_[n];
    return T;
}

double ShiftTruncation::power_norm(int k) const {
    if (k < 1) throw DomainError("power_norm: k must be >= 1");
    const auto kk = static_cast<std::size_t>(k);
    if (kk > N()) return 0.0;
    // sliding window of k consecutive log weights
    double window = 0.0;
    for (std::size_t j = 0; j < kk; ++j) window += std::log(gamma_[static_cast<Eigen::Index>(j)]);
    double best = window;
    for (std::size_t n = 1; n + kk <= N(); ++n) {
        window += std::log(gamma_[static_cast<Eigen::Index>(n + kk - 1)]) -
                  std::log(gamma_[static_cast<Eigen::Index>(n - 1)]);
        best = std::max(best, window);
    }
    return std::exp(best);
}

NormCheckReport truncation_norm_checks(const ShiftTruncation& tr, int k_max) {
    if (k_max < 1) throw DomainError("truncation_norm_checks: k_max must be >= 1");
    NormCheckReport out;
    for (int k = 1; k <= k_max; ++k) {
        const double norm = tr.power_norm(k);
        const double bound = derivative_norm_bound(k, tr.params());
        out.power_norms.push_back(norm);
        out.bounds.push_back(bound);
        out.root_norms.push_back(std::pow(norm, 1.0 / k));
        out.bound_holds = out.bound_holds && norm <= bound;
        if (k > 1) {
            const double prev = out.root_norms[out.root_norms.size() - 2];
            out.root_norms_decreasing = out.root_norms_decreasing && out.root_norms.back() <= prev * (1.0 + 1e-12);
        }
    }
    const std::size_t N = tr.N();
    std::vector<std::size_t> cuts{N / 4, N / 2, 3 * N / 4, N - 1};
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t M : cuts) {
        const double sup = tr.gamma().tail(static_cast<Eigen::Index>(N - M)).maxCoeff();
        out.tail_sup.emplace_back(M, sup);
    }
    return out;
}

TranslationReport translation_check(const ShiftTruncation& tr, Complex s, std::span<const Complex> poly_coeffs) {
    if (poly_coeffs.empty()) throw DomainError("translation_check: empty polynomial");
    const std::size_t deg = poly_coeffs.size() - 1;
    if (deg >= tr.N()) throw DomainError("translation_check: degree must be below the truncation size");
    const std::size_t m = deg + 1;
    const auto mm = static_cast<Eigen::Index>(m);

    Eigen::VectorXd norms(mm);
    for (Eigen::Index j = 0; j < mm; ++j) {
        norms[j] = std::sqrt(weight_norm_sq(static_cast<std::size_t>(j), tr.params().alpha));
    }
    Eigen::VectorXcd b(mm);
    for (Eigen::Index j = 0; j < mm; ++j) b[j] = poly_coeffs[static_cast<std::size_t>(j)] * norms[j];

    // T is nilpotent upper triangular, so the leading block of exp(-sT) is the
    // exponential of the leading block.
    const Eigen::MatrixXcd A = -s * tr.leading_block(m).cast<Complex>();
    TranslationReport out;
    out.shifted = A.exp() * b;

    // f(z - s) = sum_k z^k sum_{j>=k} a_j C(j,k) (-s)^{j-k}
    out.expected = Eigen::VectorXcd::Zero(mm);
    for (std::size_t j = 0; j < m; ++j) {
        double binom = 1.0;
        Complex pw = 1.0;
        for (std::size_t k = j + 1; k-- > 0;) {
            // k runs j, j-1, ..., 0; binom = C(j, k), pw = (-s)^{j-k}
            out.expected[static_cast<Eigen::Index>(k)] += poly_coeffs[j] * binom * pw;
            binom = binom * static_cast<double>(k) / static_cast<double>(j - k + 1);
            pw *= -s;
        }
    }
    out.expected = out.expected.cwiseProduct(norms.cast<Complex>());

    const double scale = std::max(1.0, out.expected.cwiseAbs().maxCoeff());
    out.max_discrepancy = (out.shifted - out.expected).cwiseAbs().maxCoeff() / scale;
    return out;
}

BergmanIdealReport bergman_ideal_class(const BergmanParams& params, int p_max, std::size_t n_terms) {
    if (n_terms < 200) throw DomainError("bergman_ideal_class: need at least 200 weights");
    BergmanIdealReport out;
    const Eigen::VectorXd g = shift_weights(params, n_terms);
    out.slope = gamma_asymptotic_fit(params, n_terms / 10, n_terms - 1);
    for (int p = 1; p <= p_max; ++p) out.partial_sums.push_back(g.array().pow(static_cast<double>(p)).sum());

    std::vector<Complex> diag(g.data(), g.data() + g.size());
    ZeroMultiset zeros;
    for (const Complex& d : diag) zeros.add(1.0 / d);
    zeros.mark_truncation();
    const DiagonalOperator op = from_zeros(std::move(zeros), PowerLawTail{-out.slope});
    out.cls = classify(op, p_max);
    return out;
}

} // namespace zetaquant
