#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rackrep {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// max_ij |m_ij|
double max_abs(const CMatrix &m);

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// |det| of `m` after scaling every row to unit Euclidean norm. Zero rows give 0.
double scaled_abs_det(const CMatrix &m);

bool is_invertible(const CMatrix &m, double eps_inv);

/// Orthonormal basis (columns) of the null space of a Hermitian positive
/// semidefinite matrix. Eigenvalues below rel_tol * max(1, largest) count as zero.
CMatrix psd_null_space(const CMatrix &gram, double rel_tol);

/// Gram matrix sum_i K_i^* K_i of the linear map T -> A_i T - T B_i acting on
/// column-major vec(T), T of shape rows(A) x rows(B). The null space of the
/// result is the space of solutions of A_i T = T B_i for all i.
CMatrix sylvester_gram(std::span<const CMatrix> lhs, std::span<const CMatrix> rhs);

/// Reshape a column-major vectorized matrix.
CMatrix unvec(const CVector &v, Eigen::Index rows, Eigen::Index cols);

/// Hermitian square root and its inverse of a positive definite matrix.
struct HermitianRoot {
  CMatrix root;
  CMatrix inverse_root;
};
HermitianRoot hermitian_sqrt(const CMatrix &positive_definite);

/// Deterministic complex Gaussian matrix.
CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng);

/// Random Hermitian matrix with Gaussian entries.
CMatrix random_hermitian(Eigen::Index dim, std::mt19937_64 &rng);

/// Block-diagonal direct sum.
CMatrix direct_sum(const CMatrix &a, const CMatrix &b);

} // namespace rackrep
