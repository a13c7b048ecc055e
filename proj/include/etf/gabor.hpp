#ifndef ETF_GABOR_HPP
#define ETF_GABOR_HPP

#include "etf/frame.hpp"
#include "etf/numeric.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace etf {

/// Product of cyclic groups Z_{m_0} x ... x Z_{m_s} with every m_ell odd
/// and >= 3.
class GroupShape {
 public:
  explicit GroupShape(std::vector<long> moduli);
  static GroupShape parse(const std::string& comma_separated);

  const std::vector<long>& moduli() const { return moduli_; }
  int factors() const { return static_cast<int>(moduli_.size()); }
  long size() const { return size_; }          // |m|
  long lcm() const { return lcm_; }
  long etf_count() const { return size_ * size_; }                 // n
  long etf_dim() const { return size_ * (size_ - 1) / 2; }         // d
  std::string to_string() const;

 private:
  std::vector<long> moduli_;
  long size_ = 1;
  long lcm_ = 1;
};

/// Element of the group: one residue per factor.
struct GroupIndex {
  std::vector<long> digits;
};

// Lexicographic enumeration of the group, first factor most significant.
long rank_of(const GroupShape& shape, const GroupIndex& index);
GroupIndex index_at(const GroupShape& shape, long rank);

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static Complex root(long order, long long exponent) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(exponent) / static_cast<double>(order);
    return {std::cos(angle), std::sin(angle)};
  }
};

template <>
struct ScalarTraits<Cyclotomic> {
  static Cyclotomic root(long order, long long exponent) {
    return Cyclotomic::root_of_unity(order, exponent);
  }
};

// Cyclic shift acting as (T x)_j = x_{j-1 mod m} per factor, Kronecker
// product across factors.
template <typename Scalar>
Matrix<Scalar> translation_op(const GroupShape& shape, const GroupIndex& k);

// Kronecker product of diag(1, zeta, ..., zeta^{m-1})^{kappa_ell}.
template <typename Scalar>
Matrix<Scalar> modulation_op(const GroupShape& shape, const GroupIndex& kappa);

// pi(k, kappa) = I_{(|m|-1)/2} (x) (M^(kappa) T^(k)).
template <typename Scalar>
Matrix<Scalar> rep_pi(const GroupShape& shape, const GroupIndex& k, const GroupIndex& kappa);

// Block vector of the +1/-1 difference vectors phi_i over the first
// (|m|-1)/2 group elements; squared norm |m|-1.
template <typename Scalar>
Vector<Scalar> fiducial(const GroupShape& shape);

std::vector<GroupIndex> fiducial_index_set(const GroupShape& shape);

// d x n synthesis matrix of the orbit, columns pi(k,kappa) psi ordered
// lexicographically by (k, kappa).
template <typename Scalar>
Matrix<Scalar> orbit_synthesis(const GroupShape& shape);

Frame gabor_steiner(const GroupShape& shape);

MatrixXcy gram_exact(const GroupShape& shape);

// Closed-form Gram matrix: diagonal |m|-1 and entry at row (k~,kappa~),
// column (k,kappa) equal to -prod_ell zeta^{(kappa-kappa~)(k~+k-1)/2 mod m},
// the division by 2 meaning multiplication by (m_ell+1)/2.
MatrixXcy gram_closed_form(const GroupShape& shape);

// Scalar phase in M^kappa T^k = phase * T^k M^kappa.
Complex weyl_commutation_phase(const GroupShape& shape, const GroupIndex& k,
                               const GroupIndex& kappa);

namespace detail {

void check_index(const GroupShape& shape, const GroupIndex& index);
long inverse_of_two(long modulus);  // (m+1)/2 for odd m
long mod(long long value, long modulus);

}  // namespace detail

template <typename Scalar>
Matrix<Scalar> translation_op(const GroupShape& shape, const GroupIndex& k) {
  detail::check_index(shape, k);
  const long size = shape.size();
  Matrix<Scalar> out = Matrix<Scalar>::Constant(size, size, Scalar(0));
  for (long col = 0; col < size; ++col) {
    GroupIndex u = index_at(shape, col);
    for (int l = 0; l < shape.factors(); ++l) {
      u.digits[l] = detail::mod(u.digits[l] + k.digits[l], shape.moduli()[l]);
    }
    out(rank_of(shape, u), col) = Scalar(1);
  }
  return out;
}

template <typename Scalar>
Matrix<Scalar> modulation_op(const GroupShape& shape, const GroupIndex& kappa) {
  detail::check_index(shape, kappa);
  const long size = shape.size();
  Matrix<Scalar> out = Matrix<Scalar>::Constant(size, size, Scalar(0));
  for (long j = 0; j < size; ++j) {
    const GroupIndex u = index_at(shape, j);
    Scalar value(1);
    for (int l = 0; l < shape.factors(); ++l) {
      const long m = shape.moduli()[l];
      value = value * ScalarTraits<Scalar>::root(
                          m, detail::mod(kappa.digits[l] * u.digits[l], m));
    }
    out(j, j) = value;
  }
  return out;
}

template <typename Scalar>
Matrix<Scalar> rep_pi(const GroupShape& shape, const GroupIndex& k, const GroupIndex& kappa) {
  const long size = shape.size();
  const long blocks = (size - 1) / 2;
  const Matrix<Scalar> mt =
      modulation_op<Scalar>(shape, kappa) * translation_op<Scalar>(shape, k);
  Matrix<Scalar> out = Matrix<Scalar>::Constant(size * blocks, size * blocks, Scalar(0));
  for (long b = 0; b < blocks; ++b) {
    out.block(b * size, b * size, size, size) = mt;
  }
  return out;
}

template <typename Scalar>
Vector<Scalar> fiducial(const GroupShape& shape) {
  const long size = shape.size();
  const auto index_set = fiducial_index_set(shape);
  Vector<Scalar> psi = Vector<Scalar>::Constant(size * static_cast<long>(index_set.size()),
                                                Scalar(0));
  long block = 0;
  for (const GroupIndex& i : index_set) {
    GroupIndex partner = i;
    for (int l = 0; l < shape.factors(); ++l) {
      partner.digits[l] = detail::mod(shape.moduli()[l] - i.digits[l] - 1, shape.moduli()[l]);
    }
    psi(block * size + rank_of(shape, i)) = Scalar(1);
    psi(block * size + rank_of(shape, partner)) = Scalar(-1);
    ++block;
  }
  return psi;
}

template <typename Scalar>
Matrix<Scalar> orbit_synthesis(const GroupShape& shape) {
  const long size = shape.size();
  const long dim = shape.etf_dim();
  const long count = shape.etf_count();
  const Vector<Scalar> psi = fiducial<Scalar>(shape);
  const long blocks = (size - 1) / 2;

  Matrix<Scalar> out = Matrix<Scalar>::Constant(dim, count, Scalar(0));
  for (long a = 0; a < size; ++a) {
    const GroupIndex k = index_at(shape, a);
    const Matrix<Scalar> t = translation_op<Scalar>(shape, k);
    for (long b = 0; b < size; ++b) {
      const GroupIndex kappa = index_at(shape, b);
      const Matrix<Scalar> mt = modulation_op<Scalar>(shape, kappa) * t;
      const long col = a * size + b;
      for (long blk = 0; blk < blocks; ++blk) {
        out.col(col).segment(blk * size, size) = mt * psi.segment(blk * size, size);
      }
    }
  }
  return out;
}

}  // namespace etf

#endif  // ETF_GABOR_HPP
