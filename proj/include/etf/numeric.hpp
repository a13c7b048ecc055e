#ifndef ETF_NUMERIC_HPP
#define ETF_NUMERIC_HPP

#include "etf/cyclotomic.hpp"
#include "etf/errors.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <variant>

namespace etf {

using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXc = Matrix<Complex>;
using VectorXc = Vector<Complex>;
using MatrixXcy = Matrix<Cyclotomic>;
using VectorXcy = Vector<Cyclotomic>;

enum class Backend { kFloat, kExact };

inline const char* backend_name(Backend b) {
  return b == Backend::kFloat ? "float" : "exact";
}

/// Dense matrix carrying either double-precision complex or exact cyclotomic
/// entries. All entries share one backend.
class CMatrix {
 public:
  CMatrix() : data_(MatrixXc()) {}
  CMatrix(MatrixXc m) : data_(std::move(m)) {}    // NOLINT
  CMatrix(MatrixXcy m) : data_(std::move(m)) {}   // NOLINT

  Backend backend() const {
    return std::holds_alternative<MatrixXc>(data_) ? Backend::kFloat : Backend::kExact;
  }
  Eigen::Index rows() const;
  Eigen::Index cols() const;

  const MatrixXc& floating() const;  // requires float backend
  const MatrixXcy& exact() const;    // requires exact backend
  MatrixXc to_floating() const;      // converts when exact

  Complex at(Eigen::Index i, Eigen::Index j) const;

  template <typename Visitor>
  decltype(auto) visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), data_);
  }

 private:
  std::variant<MatrixXc, MatrixXcy> data_;
};

MatrixXc to_floating(const MatrixXcy& m);

// Integer power by repeated squaring; deterministic across libm versions.
Complex cpow_int(Complex base, long long n);

template <typename Scalar>
Matrix<Scalar> hadamard_power(const Matrix<Scalar>& a, long long n);

template <>
inline MatrixXc hadamard_power<Complex>(const MatrixXc& a, long long n) {
  return a.unaryExpr([n](Complex z) { return cpow_int(z, n); });
}

template <>
inline MatrixXcy hadamard_power<Cyclotomic>(const MatrixXcy& a, long long n) {
  return a.unaryExpr([n](const Cyclotomic& z) { return z.pow(n); });
}

CMatrix hadamard_power(const CMatrix& a, long long n);

// Conjugate transpose of an exact matrix. (Eigen's adjoint() works too; this
// keeps the exact path free of Eigen's complex-scalar internals.)
MatrixXcy adjoint_exact(const MatrixXcy& m);

bool is_hermitian(const MatrixXc& m, double tol);
bool is_hermitian(const MatrixXcy& m);

template <typename Scalar>
Matrix<Scalar> kronecker(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace etf

#endif  // ETF_NUMERIC_HPP
