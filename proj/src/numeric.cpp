#include "etf/numeric.hpp"

namespace etf {

Eigen::Index CMatrix::rows() const {
  return visit([](const auto& m) { return m.rows(); });
}

Eigen::Index CMatrix::cols() const {
  return visit([](const auto& m) { return m.cols(); });
}

const MatrixXc& CMatrix::floating() const {
  if (backend() != Backend::kFloat) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is not on the float backend");
  }
  return std::get<MatrixXc>(data_);
}

const MatrixXcy& CMatrix::exact() const {
  if (backend() != Backend::kExact) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is not on the exact backend");
  }
  return std::get<MatrixXcy>(data_);
}

MatrixXc CMatrix::to_floating() const {
  if (backend() == Backend::kFloat) return std::get<MatrixXc>(data_);
  return etf::to_floating(std::get<MatrixXcy>(data_));
}

Complex CMatrix::at(Eigen::Index i, Eigen::Index j) const {
  if (backend() == Backend::kFloat) return std::get<MatrixXc>(data_)(i, j);
  return std::get<MatrixXcy>(data_)(i, j).to_complex();
}

MatrixXc to_floating(const MatrixXcy& m) {
  MatrixXc out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).to_complex();
  return out;
}

Complex cpow_int(Complex base, long long n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative Hadamard power");
  Complex result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

CMatrix hadamard_power(const CMatrix& a, long long n) {
  return a.visit([n](const auto& m) { return CMatrix(hadamard_power(m, n)); });
}

MatrixXcy adjoint_exact(const MatrixXcy& m) {
  MatrixXcy out(m.cols(), m.rows());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(j, i) = m(i, j).conjugate();
  return out;
}

bool is_hermitian(const MatrixXc& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

bool is_hermitian(const MatrixXcy& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if (m(i, j) != m(j, i).conjugate()) return false;
  return true;
}

}  // namespace etf
