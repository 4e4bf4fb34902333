#include "zolo/lstsq.hpp"

#include <lapacke.h>

#include <algorithm>
#include <string>
#include <vector>

#include "zolo/errors.hpp"

namespace zolo {

Eigen::VectorXd lstsq(Eigen::MatrixXd& A, const Eigen::VectorXd& b, double rcond, int* rank) {
  const lapack_int m = static_cast<lapack_int>(A.rows()), n = static_cast<lapack_int>(A.cols());
  if (b.size() != m) throw InvalidInput("lstsq: dimension mismatch");
  const lapack_int ldb = std::max(m, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ldb);
  rhs.head(m) = b;
  std::vector<lapack_int> jpvt(n, 0);
  lapack_int r = 0;
  const lapack_int info = LAPACKE_dgelsy(LAPACK_COL_MAJOR, m, n, 1, A.data(), m, rhs.data(), ldb,
                                         jpvt.data(), rcond, &r);
  if (info != 0) throw NumericalFailure("lstsq: dgelsy failed with info " + std::to_string(info));
  if (rank) *rank = static_cast<int>(r);
  return rhs.head(n);
}

}  // namespace zolo
