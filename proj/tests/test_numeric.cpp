#include "etf/numeric.hpp"

#include "etf/signature.hpp"
#include "etf/spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace etf;

namespace {

MatrixXc j_minus_i(int n) {
  MatrixXc m = MatrixXc::Constant(n, n, Complex(1.0, 0.0));
  for (int i = 0; i < n; ++i) m(i, i) = Complex(0.0, 0.0);
  return m;
}

}  // namespace

TEST_CASE("hadamard power squares i to -1") {
  MatrixXc a(2, 2);
  a << Complex(0, 0), Complex(0, 1), Complex(0, -1), Complex(0, 0);
  const MatrixXc b = hadamard_power(a, 2);
  CHECK(std::abs(b(0, 1) - Complex(-1, 0)) < 1e-15);
  CHECK(std::abs(b(1, 0) - Complex(-1, 0)) < 1e-15);
  CHECK(std::abs(b(0, 0)) == 0.0);
}

TEST_CASE("hadamard power with N=1 is the identity map") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  MatrixXc a(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) a(i, j) = Complex(gauss(rng), gauss(rng));
  CHECK((hadamard_power(a, 1) - a).norm() == 0.0);
}

TEST_CASE("sixth hadamard power of the G(3) normalized signature is all ones off-diagonal") {
  const SignatureMatrix nsm = closed_form_normalized(GroupShape({3}));
  const MatrixXcy& m = nsm.entries.exact();

  // brute-force entrywise exponentiation oracle
  MatrixXcy expected = MatrixXcy::Constant(m.rows(), m.cols(), Cyclotomic(1));
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      Cyclotomic acc(1);
      for (int e = 0; e < 6; ++e) acc *= m(r, c);
      expected(r, c) = acc;
    }

  const MatrixXcy powered = hadamard_power(m, 6);
  const Cyclotomic one(1);
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      CHECK(powered(r, c) == expected(r, c));
      if (r != c) CHECK(powered(r, c) == one);
      if (r == c) CHECK(powered(r, c).is_zero());
    }
}

TEST_CASE("hadamard powers are additive in the exponent") {
  const SignatureMatrix nsm = closed_form_normalized(GroupShape({5}));
  const MatrixXcy& m = nsm.entries.exact();
  const MatrixXcy lhs = hadamard_power(m, 7);
  const MatrixXcy a = hadamard_power(m, 3);
  const MatrixXcy b = hadamard_power(m, 4);
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) CHECK(lhs(r, c) == a(r, c) * b(r, c));
}

TEST_CASE("two eigenvalue test on J - I") {
  const SpectrumReport report = two_eigenvalue_test_float(j_minus_i(9), 1e-8);
  REQUIRE(report.distinct_count == 2);
  CHECK(report.eigenvalues[0].value == doctest::Approx(8.0));
  CHECK(report.eigenvalues[0].multiplicity == 1);
  CHECK(report.eigenvalues[1].value == doctest::Approx(-1.0));
  CHECK(report.eigenvalues[1].multiplicity == 8);
}

TEST_CASE("two eigenvalue test on the G(3) signature, exact and float agree") {
  const SignatureMatrix nsm = closed_form_normalized(GroupShape({3}));

  const SpectrumReport exact = two_eigenvalue_test(nsm.entries);
  REQUIRE(exact.method == SpectrumMethod::kQuadraticIdentityExact);
  REQUIRE(exact.distinct_count == 2);
  CHECK(exact.eigenvalues[0].value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(exact.eigenvalues[0].multiplicity == 3);
  CHECK(exact.eigenvalues[1].value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(exact.eigenvalues[1].multiplicity == 6);

  // dense float eigensolve as the independent route
  const SpectrumReport dense = two_eigenvalue_test_float(nsm.entries.to_floating(), 1e-8);
  REQUIRE(dense.distinct_count == 2);
  CHECK(dense.eigenvalues[0].value == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(dense.eigenvalues[0].multiplicity == 3);
  CHECK(dense.eigenvalues[1].multiplicity == 6);
}

TEST_CASE("adversarial phase yields more than two eigenvalues") {
  MatrixXc s = j_minus_i(4);
  const Complex phase = std::polar(1.0, 1.0);  // e^{i}, not a root of unity
  s(0, 1) = phase;
  s(1, 0) = std::conj(phase);
  const SpectrumReport report = two_eigenvalue_test_float(s, 1e-8);
  CHECK(report.distinct_count > 2);
}

TEST_CASE("degenerate inputs report literal diagonal spectra") {
  MatrixXc one_by_one(1, 1);
  one_by_one(0, 0) = Complex(3.5, 0.0);
  const SpectrumReport r1 = two_eigenvalue_test_float(one_by_one, 1e-8);
  CHECK(r1.distinct_count == 1);
  CHECK(r1.eigenvalues[0].value == doctest::Approx(3.5));

  MatrixXc diag = MatrixXc::Zero(3, 3);
  diag(0, 0) = Complex(2.0, 0.0);
  diag(1, 1) = Complex(2.0, 0.0);
  diag(2, 2) = Complex(-1.0, 0.0);
  const SpectrumReport r2 = two_eigenvalue_test_float(diag, 1e-8);
  CHECK(r2.distinct_count == 2);
  CHECK(r2.eigenvalues[0].value == doctest::Approx(2.0));
  CHECK(r2.eigenvalues[0].multiplicity == 2);

  MatrixXcy exact_diag = MatrixXcy::Constant(2, 2, Cyclotomic(0));
  exact_diag(0, 0) = Cyclotomic(5);
  exact_diag(1, 1) = Cyclotomic(5);
  const SpectrumReport r3 = two_eigenvalue_test_exact(exact_diag);
  CHECK(r3.distinct_count == 1);
  CHECK(r3.eigenvalues[0].multiplicity == 2);
}

TEST_CASE("structure violations raise typed errors") {
  MatrixXc bad = j_minus_i(3);
  bad(0, 1) = Complex(2.0, 0.0);
  bad(1, 0) = Complex(2.0, 0.0);
  try {
    (void)two_eigenvalue_test_float(bad, 1e-8);
    FAIL("expected NonUnimodular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonUnimodular);
  }

  MatrixXc skew = j_minus_i(3);
  skew(0, 1) = Complex(0.0, 1.0);  // mate stays 1: not self-adjoint
  try {
    (void)two_eigenvalue_test_float(skew, 1e-8);
    FAIL("expected NonHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonHermitian);
  }
}

TEST_CASE("exact identity failure falls back to the float path") {
  // hermitian, zero diagonal, unimodular entries, but no two-eigenvalue
  // structure: the quadratic certificate must fail and defer to dense
  std::mt19937_64 rng(31337);
  const int n = 5;
  MatrixXcy m = MatrixXcy::Constant(n, n, Cyclotomic(0));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < c; ++r) {
      const Cyclotomic z = Cyclotomic::root_of_unity(5, static_cast<long long>(rng() % 5));
      m(r, c) = z;
      m(c, r) = z.conjugate();
    }
  const SpectrumReport report = two_eigenvalue_test_exact(m);
  CHECK(report.method == SpectrumMethod::kDenseEigFloat);
  CHECK(report.distinct_count > 2);
}

TEST_CASE("exact and float paths agree on hadamard powers of closed forms") {
  for (const auto& moduli :
       {std::vector<long>{3}, std::vector<long>{5}, std::vector<long>{3, 3}}) {
    const SignatureMatrix nsm = closed_form_normalized(GroupShape(moduli));
    const long r = 2 * GroupShape(moduli).lcm();
    for (long n_pow = 1; n_pow <= r; ++n_pow) {
      const MatrixXcy powered = hadamard_power(nsm.entries.exact(), n_pow);
      const SpectrumReport exact = two_eigenvalue_test_exact(powered);
      const SpectrumReport dense = two_eigenvalue_test_float(to_floating(powered), 1e-8);
      CHECK(exact.distinct_count == dense.distinct_count);
    }
  }
}
