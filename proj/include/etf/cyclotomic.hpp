#ifndef ETF_CYCLOTOMIC_HPP
#define ETF_CYCLOTOMIC_HPP

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace etf {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

namespace detail {

// Immutable per-order data; instances live forever in a process-wide cache.
struct CycloRing {
  long order = 1;
  int degree = 1;                 // deg of the order-th cyclotomic polynomial
  std::vector<long long> phi;     // monic, phi[j] = coefficient of x^j, size degree+1
};

const CycloRing* cyclo_ring(long order);

// Cyclotomic polynomial coefficients, computed by recursive exact division of
// x^r - 1 by the polynomials of the proper divisors.
std::vector<long long> cyclotomic_polynomial(long order);

}  // namespace detail

// An element of Q(zeta_r), zeta_r = exp(2*pi*i/r), stored as rational
// coefficients of 1, zeta, ..., zeta^{r-1} reduced modulo the r-th cyclotomic
// polynomial. Coefficients at index >= deg(Phi_r) are zero in canonical form.
// Mixed-order arithmetic lifts both operands into Q(zeta_lcm) first.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(0LL) {}
  Cyclotomic(long long value);  // NOLINT: implicit by design, scalar literals
  explicit Cyclotomic(const Rational& value);

  static Cyclotomic root_of_unity(long order, long long exponent);
  static Cyclotomic from_coeffs(long order, std::vector<Rational> coeffs);

  long order() const { return ring_->order; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic conjugate() const;     // zeta^j -> zeta^{r-j}
  Cyclotomic pow(long long n) const;  // n >= 0
  Cyclotomic lifted(long new_order) const;
  std::complex<double> to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }

  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) { return !(lhs == rhs); }

 private:
  Cyclotomic(const detail::CycloRing* ring, std::vector<Rational> coeffs)
      : ring_(ring), coeffs_(std::move(coeffs)) {}

  const detail::CycloRing* ring_;
  std::vector<Rational> coeffs_;  // size == order()
};

inline Cyclotomic conj(const Cyclotomic& z) { return z.conjugate(); }
Cyclotomic real(const Cyclotomic& z);
Cyclotomic imag(const Cyclotomic& z);
inline Cyclotomic abs2(const Cyclotomic& z) { return z * z.conjugate(); }
inline bool is_unimodular(const Cyclotomic& z) { return abs2(z) == Cyclotomic(1); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

}  // namespace etf

namespace Eigen {

template <typename T>
struct NumTraits;
template <typename A, typename B, typename Op>
struct ScalarBinaryOpTraits;

template <>
struct NumTraits<etf::Cyclotomic> {
  using Self = etf::Cyclotomic;
  using Real = etf::Cyclotomic;
  using NonInteger = etf::Cyclotomic;
  using Literal = long long;
  using Nested = etf::Cyclotomic;

  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };

  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static int digits10() { return 0; }
};

// Disambiguates the generic (T,T) and (complex T, real-of-T) partial
// specializations, which coincide here because Real is the scalar itself.
template <typename BinaryOp>
struct ScalarBinaryOpTraits<etf::Cyclotomic, etf::Cyclotomic, BinaryOp> {
  typedef etf::Cyclotomic ReturnType;
};

}  // namespace Eigen

#endif  // ETF_CYCLOTOMIC_HPP
