#include <doctest.h>

#include <zetaquant/dense_oracles.hpp>

using namespace zetaquant;

namespace {

Eigen::Matrix3d fixed_matrix() {
    Eigen::Matrix3d A;
    A << 0.2, 0.1, -0.3, 0.05, -0.4, 0.2, 0.3, 0.1, 0.1;
    return A;
}

} // namespace

TEST_SUITE("dense") {

TEST_CASE("det_n of a fixed real matrix") {
    const double expected[] = {0.897758, 0.962852799786422866, 0.981910873677806459};
    for (int n = 1; n <= 3; ++n) {
        const Complex v = matrix_det_p(fixed_matrix(), n, 0.7);
        CHECK(std::abs(v - expected[n - 1]) < 1e-14);
    }
}

TEST_CASE("R_1 is the identity map and R_n of zero vanishes") {
    const Eigen::Matrix3d A = fixed_matrix();
    CHECK((rn_matrix(A, 1) - A.cast<Complex>()).norm() == 0.0);
    CHECK(rn_matrix(Eigen::Matrix3d::Zero(), 3).norm() < 1e-16);
    CHECK_THROWS_AS(rn_matrix(A, 0), DomainError);
}

TEST_CASE("both routes and the trace relation agree on a complex matrix") {
    DenseMatrix<double> A(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) A(i, j) = Complex(0.1 * (i - j), 0.05 * (i + j) - 0.1);
    for (int n = 1; n <= 4; ++n) {
        CHECK(matrix_det_p_routes(A, n, Complex(0.6, -0.2)).rel_discrepancy < 1e-12);
        CHECK(det_trace_relation_check(A, Complex(0.6, -0.2), n).rel_discrepancy < 1e-12);
    }
    CHECK(exp_trace_identity_check(A, Complex(0.3, 0.1)).rel_discrepancy < 1e-12);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(matrix_det_p(Eigen::MatrixXd::Ones(2, 3), 1, 1.0), DomainError);
    CHECK_THROWS_AS(matrix_det_p(Eigen::MatrixXd::Identity(65, 65), 1, 1.0), DomainError);
    // spectral radius 1, so |t| rho = 1.5
    CHECK_THROWS_AS(exp_trace_identity_check(Eigen::Matrix2d::Identity(), Complex(1.5)), DomainError);
}

TEST_CASE("empty matrix has determinant 1") {
    CHECK(matrix_det_p(Eigen::MatrixXd(0, 0), 2, 1.0) == Complex(1.0));
}

}
