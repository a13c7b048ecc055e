#include "etf/cyclotomic.hpp"

#include "etf/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace etf;

namespace {

// independent float rendering of zeta_r^j
std::complex<double> polar_root(long r, long long j) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(r);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

TEST_CASE("cyclotomic polynomials match known coefficients") {
  CHECK(detail::cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(detail::cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(detail::cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
  CHECK(detail::cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(detail::cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(detail::cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("fourth root of unity is the imaginary unit") {
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  const std::complex<double> z = i.to_complex();
  CHECK(z.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(z.imag() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(i * i == Cyclotomic(-1));
}

TEST_CASE("zeroth power is one") {
  CHECK(Cyclotomic::root_of_unity(3, 0) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(7, 7) == Cyclotomic(1));
}

TEST_CASE("zeta3 + zeta3^2 = -1 by exact reduction") {
  const Cyclotomic z1 = Cyclotomic::root_of_unity(3, 1);
  const Cyclotomic z2 = Cyclotomic::root_of_unity(3, 2);
  CHECK(z1 + z2 == Cyclotomic(-1));
  CHECK((Cyclotomic(1) + z1 + z2).is_zero());
}

TEST_CASE("exponent arithmetic is canonical for random orders up to 30") {
  std::mt19937_64 rng(20240311);
  for (int trial = 0; trial < 400; ++trial) {
    const long r = 1 + static_cast<long>(rng() % 30);
    const long long j = static_cast<long long>(rng() % 97);
    const long long k = static_cast<long long>(rng() % 97);
    const Cyclotomic a = Cyclotomic::root_of_unity(r, j);
    const Cyclotomic b = Cyclotomic::root_of_unity(r, k);
    const Cyclotomic product = a * b;
    CHECK(product == Cyclotomic::root_of_unity(r, (j + k) % r));
    // float oracle
    const std::complex<double> expected = polar_root(r, j) * polar_root(r, k);
    CHECK(std::abs(product.to_complex() - expected) < 1e-9);
  }
}

TEST_CASE("conjugation reverses exponents") {
  for (long r : {3L, 5L, 8L, 12L}) {
    for (long long j = 0; j < r; ++j) {
      const Cyclotomic z = Cyclotomic::root_of_unity(r, j);
      CHECK(z.conjugate() == Cyclotomic::root_of_unity(r, r - j));
      CHECK(is_unimodular(z));
    }
  }
}

TEST_CASE("cross-order arithmetic lifts to the common ring") {
  CHECK(Cyclotomic::root_of_unity(6, 2) == Cyclotomic::root_of_unity(3, 1));
  CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(-1));
  const Cyclotomic mixed = Cyclotomic::root_of_unity(3, 1) * Cyclotomic::root_of_unity(5, 1);
  CHECK(mixed == Cyclotomic::root_of_unity(15, 8));
}

TEST_CASE("rational detection and extraction") {
  const Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
  const Cyclotomic sum = z + z.pow(2) + z.pow(3) + z.pow(4);
  CHECK(sum.is_rational());
  CHECK(sum.rational_value() == Rational(-1));
  CHECK_FALSE(z.is_rational());
  CHECK_THROWS_AS((void)z.rational_value(), Error);
}

TEST_CASE("pow matches repeated multiplication") {
  const Cyclotomic z = Cyclotomic::root_of_unity(9, 2);
  Cyclotomic acc(1);
  for (int e = 0; e <= 12; ++e) {
    CHECK(z.pow(e) == acc);
    acc *= z;
  }
}

TEST_CASE("real and imaginary parts") {
  const Cyclotomic z = Cyclotomic::root_of_unity(8, 1);
  const std::complex<double> zf = z.to_complex();
  CHECK(std::abs(real(z).to_complex().real() - zf.real()) < 1e-12);
  CHECK(std::abs(imag(z).to_complex().real() - zf.imag()) < 1e-12);
  CHECK(abs2(z) == Cyclotomic(1));
}
