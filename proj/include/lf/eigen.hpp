#pragma once

#include <Eigen/Dense>
#include <vector>

namespace lf {

using HermitianMatrix = Eigen::MatrixXcd;

// Throws Error(non_hermitian) unless m(i,j) == conj(m(j,i)) within 1e-14 * max|m|
// and the diagonal is real.
void check_hermitian(const HermitianMatrix& m);

// All eigenvalues of a Hermitian matrix, ascending, with multiplicity.
// Householder reduction to a real tridiagonal, then implicit QL.
std::vector<double> eigvalsh(const HermitianMatrix& m);

// Eigenvalues of a real symmetric tridiagonal matrix (diag d, off-diagonal e,
// e.size() == d.size() - 1), ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e);

}  // namespace lf
