#pragma once

#include <Eigen/Dense>

namespace zolo {

// Minimum-norm least squares min ||A x - b|| by complete orthogonal factorisation with
// column pivoting (LAPACK dgelsy). Columns with relative pivot size below rcond are
// dropped. A is overwritten.
Eigen::VectorXd lstsq(Eigen::MatrixXd& A, const Eigen::VectorXd& b, double rcond = 1e-14,
                      int* rank = nullptr);

}  // namespace zolo
