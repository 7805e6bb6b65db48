#pragma once

// Small dense-matrix helpers shared by the reduction engine and simulator.
// All matrices here are a handful of rows; Eigen dense is the backend.

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "elsim/types.hpp"

namespace elsim {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Partial-pivot LU with an explicit singularity rule:
/// a pivot smaller than 1e-12 times the largest matrix entry is treated as
/// singular rather than divided through.
class CheckedLu {
public:
    explicit CheckedLu(const Mat& a, double pivot_rtol = 1e-12);

    [[nodiscard]] bool singular() const { return singular_; }

    /// Row index (of the original matrix) whose pivot fell under the threshold;
    /// meaningful only when singular().
    [[nodiscard]] int deficient_row() const { return deficient_row_; }

    /// Solves A X = B. Throws Error when the factorization was singular.
    [[nodiscard]] Mat solve(const Mat& b) const;

private:
    Eigen::PartialPivLU<Mat> lu_;
    bool singular_ = false;
    int deficient_row_ = -1;
};

/// Max |a_ij - b_ij| / max(|b_ij|, floor); floor guards all-zero references.
double max_rel_diff(const Mat& a, const Mat& b, double floor = 1e-300);

/// Symmetric positive-semidefinite test via eigenvalues of the symmetric part.
bool is_symmetric_psd(const Mat& m, double tol_scale = 1e-9);

/// Largest real part over the eigenvalues of a (generally nonsymmetric) matrix.
double max_eigenvalue_real_part(const Mat& m);

/// Matrix exponential e^A (scaling-and-squaring Pade via Eigen unsupported).
Mat matrix_exponential(const Mat& a);

/// Discretization pair (Phi, Gamma) with Phi = e^{Ah}, Gamma = \int_0^h e^{As} ds B.
std::pair<Mat, Mat> exact_discretization(const Mat& a, const Mat& b, double h);

}  // namespace elsim
