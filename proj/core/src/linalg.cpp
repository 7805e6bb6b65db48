#include "elsim/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace elsim {

CheckedLu::CheckedLu(const Mat& a, double pivot_rtol) : lu_(a) {
    const double scale = a.cwiseAbs().maxCoeff();
    const double threshold = pivot_rtol * std::max(scale, 1e-300);
    const Vec diag = lu_.matrixLU().diagonal();
    for (int i = 0; i < diag.size(); ++i) {
        if (std::abs(diag[i]) < threshold) {
            singular_ = true;
            // map back through the row permutation to name the original row
            deficient_row_ = static_cast<int>(lu_.permutationP().indices()[i]);
            break;
        }
    }
    if (a.size() == 0) singular_ = false;
}

Mat CheckedLu::solve(const Mat& b) const {
    if (singular_) {
        throw Error("CheckedLu: matrix is singular under the pivot threshold");
    }
    return lu_.solve(b);
}

double max_rel_diff(const Mat& a, const Mat& b, double floor) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_rel_diff: shape mismatch");
    }
    const double scale = std::max(b.cwiseAbs().maxCoeff(), floor);
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const double denom = std::max(std::abs(b(i, j)), 1e-14 * scale);
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / denom);
        }
    }
    return worst;
}

bool is_symmetric_psd(const Mat& m, double tol_scale) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1.0);
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol_scale * scale) return false;
    Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol_scale * scale;
}

double max_eigenvalue_real_part(const Mat& m) {
    Eigen::EigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
    return es.eigenvalues().real().maxCoeff();
}

Mat matrix_exponential(const Mat& a) { return a.exp(); }

std::pair<Mat, Mat> exact_discretization(const Mat& a, const Mat& b, double h) {
    const Eigen::Index n = a.rows();
    const Eigen::Index p = b.cols();
    Mat aug = Mat::Zero(n + p, n + p);
    aug.topLeftCorner(n, n) = a * h;
    aug.topRightCorner(n, p) = b * h;
    const Mat e = aug.exp();
    return {e.topLeftCorner(n, n), e.topRightCorner(n, p)};
}

}  // namespace elsim
