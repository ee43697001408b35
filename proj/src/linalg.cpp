#include "rackrep/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "rackrep/error.hpp"

namespace rackrep {

double max_abs(const CMatrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes differ");
  return max_abs(a - b);
}

double scaled_abs_det(const CMatrix &m) {
  if (m.rows() != m.cols())
    return 0.0;
  if (m.rows() == 0)
    return 1.0;
  CMatrix scaled = m;
  for (Eigen::Index r = 0; r < scaled.rows(); ++r) {
    const double n = scaled.row(r).norm();
    if (n == 0.0)
      return 0.0;
    scaled.row(r) /= n;
  }
  return std::abs(scaled.partialPivLu().determinant());
}

bool is_invertible(const CMatrix &m, double eps_inv) {
  return scaled_abs_det(m) > eps_inv;
}

CMatrix psd_null_space(const CMatrix &gram, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const auto &vals = es.eigenvalues(); // ascending
  const double top = vals.size() ? std::max(1.0, std::abs(vals(vals.size() - 1))) : 1.0;
  Eigen::Index count = 0;
  while (count < vals.size() && vals(count) < rel_tol * top)
    ++count;
  return es.eigenvectors().leftCols(count);
}

CMatrix sylvester_gram(std::span<const CMatrix> lhs, std::span<const CMatrix> rhs) {
  if (lhs.size() != rhs.size() || lhs.empty())
    throw DimensionMismatch("sylvester system needs matching nonempty families");
  const Eigen::Index m = lhs.front().rows();
  const Eigen::Index n = rhs.front().rows();
  const Eigen::Index dim = m * n;
  CMatrix gram = CMatrix::Zero(dim, dim);
  CMatrix k(dim, dim);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const CMatrix &a = lhs[i];
    const CMatrix &b = rhs[i];
    // vec(A T) = (I_n (x) A) vec T ; vec(T B) = (B^T (x) I_m) vec T
    k.setZero();
    for (Eigen::Index j = 0; j < n; ++j)
      k.block(j * m, j * m, m, m) += a;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q) {
        const Complex c = b(q, p); // (B^T)(p,q)
        if (c == Complex{})
          continue;
        for (Eigen::Index r = 0; r < m; ++r)
          k(p * m + r, q * m + r) -= c;
      }
    gram.noalias() += k.adjoint() * k;
  }
  return gram;
}

CMatrix unvec(const CVector &v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

HermitianRoot hermitian_sqrt(const CMatrix &positive_definite) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(positive_definite);
  const auto &vals = es.eigenvalues();
  if (vals.size() && vals(0) <= 0.0)
    throw InvalidInput("matrix is not positive definite");
  const CMatrix &v = es.eigenvectors();
  Eigen::VectorXd s = vals.cwiseSqrt();
  HermitianRoot out;
  out.root = v * s.cast<Complex>().asDiagonal() * v.adjoint();
  out.inverse_root = v * s.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint();
  return out;
}

CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = dist(rng);
      const double im = dist(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

CMatrix random_hermitian(Eigen::Index dim, std::mt19937_64 &rng) {
  CMatrix g = random_complex(dim, dim, rng);
  return (g + g.adjoint()) * 0.5;
}

CMatrix direct_sum(const CMatrix &a, const CMatrix &b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

} // namespace rackrep
