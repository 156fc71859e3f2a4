#pragma once

// Small dense-matrix cross-checks for the determinant machinery. Everything
// here is exact linear algebra on matrices of dimension <= kOracleDimBound.

#include <zetaquant/errors.hpp>
#include <zetaquant/factors.hpp>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>

namespace zetaquant {

inline constexpr Eigen::Index kOracleDimBound = 64;

template <class Real>
using DenseMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Two evaluations of the same quantity and their relative discrepancy.
struct IdentityCheck {
    Complex lhs;
    Complex rhs;
    double rel_discrepancy = 0.0;
};

namespace detail {

inline double rel_diff(Complex a, Complex b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

template <class Derived>
DenseMatrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real>
as_complex_square(const Eigen::MatrixBase<Derived>& A, const char* who) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    if (A.rows() != A.cols()) throw DomainError(std::string(who) + ": matrix must be square");
    if (A.rows() > kOracleDimBound) throw DomainError(std::string(who) + ": dimension above the oracle bound");
    return A.template cast<std::complex<Real>>();
}

template <class Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> eigenvalues(const DenseMatrix<Real>& A) {
    if (A.rows() == 0) return {};
    Eigen::ComplexEigenSolver<DenseMatrix<Real>> es(A, false);
    return es.eigenvalues();
}

} // namespace detail

/// R_n(A) = (I + A) exp(sum_{j<n} (-1)^j A^j / j) - I; R_1(A) = A.
template <class Derived>
auto rn_matrix(const Eigen::MatrixBase<Derived>& A, int n) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    if (n < 1) throw DomainError("rn_matrix: n must be >= 1");
    DenseMatrix<Real> M = detail::as_complex_square(A, "rn_matrix");
    const auto I = DenseMatrix<Real>::Identity(M.rows(), M.cols());
    if (n == 1) return M;
    DenseMatrix<Real> S = DenseMatrix<Real>::Zero(M.rows(), M.cols());
    DenseMatrix<Real> P = I;
    for (int j = 1; j < n; ++j) {
        P = P * M;
        const Real sign = (j % 2 == 0) ? Real(1) : Real(-1);
        S += (sign / Real(j)) * P;
    }
    DenseMatrix<Real> E = S.exp();
    return DenseMatrix<Real>((I + M) * E - I);
}

/// Both routes to det_n(I + mu A): lhs is det(I + R_n(mu A)), rhs the
/// eigenvalue product of regdet_term.
template <class Derived>
IdentityCheck matrix_det_p_routes(const Eigen::MatrixBase<Derived>& A, int n, Complex mu) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    DenseMatrix<Real> M = detail::as_complex_square(A, "matrix_det_p");
    const std::complex<Real> m(static_cast<Real>(mu.real()), static_cast<Real>(mu.imag()));
    DenseMatrix<Real> R = rn_matrix(DenseMatrix<Real>(m * M), n);
    R += DenseMatrix<Real>::Identity(M.rows(), M.cols());
    const std::complex<Real> by_matrix = M.rows() == 0 ? std::complex<Real>(1) : R.partialPivLu().determinant();

    std::complex<Real> by_eigen(1);
    const auto ev = detail::eigenvalues<Real>(M);
    for (Eigen::Index k = 0; k < ev.size(); ++k) by_eigen *= regdet_term<Real>(n, ev[k], m);

    IdentityCheck out;
    out.lhs = Complex(static_cast<double>(by_matrix.real()), static_cast<double>(by_matrix.imag()));
    out.rhs = Complex(static_cast<double>(by_eigen.real()), static_cast<double>(by_eigen.imag()));
    out.rel_discrepancy = detail::rel_diff(out.lhs, out.rhs);
    return out;
}

/// det_n(I + mu A); throws ConsistencyError when the two routes disagree beyond tol.
template <class Derived>
Complex matrix_det_p(const Eigen::MatrixBase<Derived>& A, int n, Complex mu, double tol = 1e-10) {
    const IdentityCheck c = matrix_det_p_routes(A, n, mu);
    if (!(c.rel_discrepancy <= tol)) {
        throw ConsistencyError("matrix_det_p: matrix and eigenvalue routes differ by " +
                               std::to_string(c.rel_discrepancy));
    }
    return c.rhs;
}

/// det_n(I + mu A) against det(I + mu A) exp(sum_{j<n} (-1)^j Tr((mu A)^j) / j).
template <class Derived>
IdentityCheck det_trace_relation_check(const Eigen::MatrixBase<Derived>& A, Complex mu, int n) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    DenseMatrix<Real> M = detail::as_complex_square(A, "det_trace_relation_check");
    const std::complex<Real> m(static_cast<Real>(mu.real()), static_cast<Real>(mu.imag()));
    const DenseMatrix<Real> muA = m * M;
    const auto I = DenseMatrix<Real>::Identity(M.rows(), M.cols());

    IdentityCheck out;
    out.lhs = matrix_det_p_routes(M, n, mu).lhs;

    std::complex<Real> traces(0);
    DenseMatrix<Real> P = I;
    for (int j = 1; j < n; ++j) {
        P = P * muA;
        const Real sign = (j % 2 == 0) ? Real(1) : Real(-1);
        traces += (sign / Real(j)) * P.trace();
    }
    const std::complex<Real> det1 = M.rows() == 0 ? std::complex<Real>(1) : DenseMatrix<Real>(I + muA).partialPivLu().determinant();
    const std::complex<Real> rhs = det1 * std::exp(traces);
    out.rhs = Complex(static_cast<double>(rhs.real()), static_cast<double>(rhs.imag()));
    out.rel_discrepancy = detail::rel_diff(out.lhs, out.rhs);
    return out;
}

/// exp(sum_{n<=terms} t^n Tr(A^n) / n) against 1/det(I - tA); needs |t| rho(A) < 1.
template <class Derived>
IdentityCheck exp_trace_identity_check(const Eigen::MatrixBase<Derived>& A, Complex t, int terms = 60) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    DenseMatrix<Real> M = detail::as_complex_square(A, "exp_trace_identity_check");
    const auto ev = detail::eigenvalues<Real>(M);
    double rho = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) rho = std::max(rho, static_cast<double>(std::abs(ev[k])));
    if (!(std::abs(t) * rho < 1.0)) throw DomainError("exp_trace_identity_check: needs |t| rho(A) < 1");

    const std::complex<Real> tt(static_cast<Real>(t.real()), static_cast<Real>(t.imag()));
    const DenseMatrix<Real> tA = tt * M;
    const auto I = DenseMatrix<Real>::Identity(M.rows(), M.cols());
    std::complex<Real> s(0);
    DenseMatrix<Real> P = I;
    for (int n = 1; n <= terms; ++n) {
        P = P * tA;
        s += P.trace() / Real(n);
    }
    const std::complex<Real> lhs = std::exp(s);
    const std::complex<Real> det = M.rows() == 0 ? std::complex<Real>(1) : DenseMatrix<Real>(I - tA).partialPivLu().determinant();
    const std::complex<Real> rhs = std::complex<Real>(1) / det;

    IdentityCheck out;
    out.lhs = Complex(static_cast<double>(lhs.real()), static_cast<double>(lhs.imag()));
    out.rhs = Complex(static_cast<double>(rhs.real()), static_cast<double>(rhs.imag()));
    out.rel_discrepancy = detail::rel_diff(out.lhs, out.rhs);
    return out;
}

} // namespace zetaquant
