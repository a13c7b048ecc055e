#include "etf/cyclotomic.hpp"

#include "etf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

namespace etf {
namespace detail {
namespace {

constexpr long kMaxOrder = 100000;

// Exact division of integer polynomials, assuming the divisor is monic and
// the division is known to be exact.
std::vector<long long> divide_exact(const std::vector<long long>& num,
                                    const std::vector<long long>& den) {
  std::vector<long long> rem = num;
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<long long> quot(dn - dd + 1, 0);
  for (int t = dn; t >= dd; --t) {
    const long long c = rem[t];
    if (c == 0) continue;
    quot[t - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[t - dd + j] -= c * den[j];
  }
  for (long long c : rem) {
    if (c != 0) throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
  }
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(long order) {
  if (order == 1) return {-1, 1};  // x - 1
  // x^order - 1
  std::vector<long long> poly(order + 1, 0);
  poly[0] = -1;
  poly[order] = 1;
  for (long d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    poly = divide_exact(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

const CycloRing* cyclo_ring(long order) {
  if (order < 1 || order > kMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "cyclotomic order out of range: " + std::to_string(order));
  }
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<CycloRing>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) {
    auto ring = std::make_unique<CycloRing>();
    ring->order = order;
    ring->phi = cyclotomic_polynomial(order);
    ring->degree = static_cast<int>(ring->phi.size()) - 1;
    it = cache.emplace(order, std::move(ring)).first;
  }
  return it->second.get();
}

}  // namespace detail

namespace {

// In-place reduction modulo Phi_order; coeffs has size order.
void reduce(std::vector<Rational>& coeffs, const detail::CycloRing& ring) {
  const int deg = ring.degree;
  for (int t = static_cast<int>(coeffs.size()) - 1; t >= deg; --t) {
    if (coeffs[t].numerator() == 0) continue;
    const Rational c = coeffs[t];
    // subtract c * x^{t-deg} * Phi (Phi is monic, so this zeroes coeffs[t])
    for (int j = 0; j <= deg; ++j) {
      if (ring.phi[j] != 0) coeffs[t - deg + j] -= c * ring.phi[j];
    }
  }
}

}  // namespace

Cyclotomic::Cyclotomic(long long value)
    : ring_(detail::cyclo_ring(1)), coeffs_(1, Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value)
    : ring_(detail::cyclo_ring(1)), coeffs_(1, value) {}

Cyclotomic Cyclotomic::root_of_unity(long order, long long exponent) {
  const detail::CycloRing* ring = detail::cyclo_ring(order);
  long long e = exponent % order;
  if (e < 0) e += order;
  std::vector<Rational> coeffs(order, Rational(0));
  coeffs[static_cast<size_t>(e)] = Rational(1);
  reduce(coeffs, *ring);
  return Cyclotomic(ring, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_coeffs(long order, std::vector<Rational> coeffs) {
  const detail::CycloRing* ring = detail::cyclo_ring(order);
  if (static_cast<long>(coeffs.size()) > order) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient vector longer than the order");
  }
  coeffs.resize(order, Rational(0));
  reduce(coeffs, *ring);
  return Cyclotomic(ring, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.numerator() == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j].numerator() != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) {
    throw Error(ErrorCode::kInvalidArgument, "cyclotomic value is not rational");
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conjugate() const {
  const long r = order();
  std::vector<Rational> coeffs(r, Rational(0));
  for (long j = 0; j < r; ++j) {
    if (coeffs_[j].numerator() == 0) continue;
    coeffs[(r - j) % r] += coeffs_[j];
  }
  reduce(coeffs, *ring_);
  return Cyclotomic(ring_, std::move(coeffs));
}

Cyclotomic Cyclotomic::pow(long long n) const {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative cyclotomic power");
  Cyclotomic base = *this;
  Cyclotomic result(1);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::lifted(long new_order) const {
  const long r = order();
  if (new_order == r) return *this;
  if (new_order % r != 0) {
    throw Error(ErrorCode::kInvalidArgument, "lift target must be a multiple of the order");
  }
  const detail::CycloRing* ring = detail::cyclo_ring(new_order);
  const long step = new_order / r;
  std::vector<Rational> coeffs(new_order, Rational(0));
  for (long j = 0; j < r; ++j) {
    if (coeffs_[j].numerator() == 0) continue;
    coeffs[static_cast<size_t>(j * step)] = coeffs_[j];
  }
  reduce(coeffs, *ring);
  return Cyclotomic(ring, std::move(coeffs));
}

std::complex<double> Cyclotomic::to_complex() const {
  const long r = order();
  std::complex<double> acc(0.0, 0.0);
  for (long j = 0; j < r; ++j) {
    if (coeffs_[j].numerator() == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(r);
    acc += to_double(coeffs_[j]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (ring_ == rhs.ring_) {
    for (long j = 0; j < order(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
  }
  const long common = std::lcm(order(), rhs.order());
  *this = lifted(common);
  return *this += rhs.lifted(common);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (ring_ == rhs.ring_) {
    for (long j = 0; j < order(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
  }
  const long common = std::lcm(order(), rhs.order());
  *this = lifted(common);
  return *this -= rhs.lifted(common);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (ring_ != rhs.ring_) {
    const long common = std::lcm(order(), rhs.order());
    *this = lifted(common);
    return *this *= rhs.lifted(common);
  }
  const long r = order();
  std::vector<Rational> result(r, Rational(0));
  for (long i = 0; i < r; ++i) {
    if (coeffs_[i].numerator() == 0) continue;
    for (long j = 0; j < r; ++j) {
      if (rhs.coeffs_[j].numerator() == 0) continue;
      result[(i + j) % r] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  reduce(result, *ring_);
  coeffs_ = std::move(result);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic result = *this;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.ring_ == rhs.ring_) return lhs.coeffs_ == rhs.coeffs_;
  const long common = std::lcm(lhs.order(), rhs.order());
  return lhs.lifted(common).coeffs_ == rhs.lifted(common).coeffs_;
}

Cyclotomic real(const Cyclotomic& z) {
  const Cyclotomic sum = z + z.conjugate();
  std::vector<Rational> coeffs = sum.coeffs();
  for (auto& c : coeffs) c /= 2;
  return Cyclotomic::from_coeffs(sum.order(), std::move(coeffs));
}

Cyclotomic imag(const Cyclotomic& z) {
  // (z - conj z) / (2i), computed in an order divisible by 4 so that i exists.
  const long target = std::lcm(z.order(), 4L);
  const Cyclotomic diff = z.lifted(target) - z.conjugate().lifted(target);
  const Cyclotomic minus_i_half =
      Cyclotomic(Rational(-1, 2)) * Cyclotomic::root_of_unity(target, target / 4);
  return diff * minus_i_half;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) {
  bool first = true;
  const auto& c = z.coeffs();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j].numerator() == 0) continue;
    if (!first) os << " + ";
    os << c[j].numerator();
    if (c[j].denominator() != 1) os << "/" << c[j].denominator();
    if (j > 0) os << "*z" << z.order() << "^" << j;
    first = false;
  }
  if (first) os << "0";
  return os;
}

}  // namespace etf
