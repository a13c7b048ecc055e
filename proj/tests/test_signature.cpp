#include "etf/signature.hpp"

#include "etf/gabor.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace etf;

namespace {

const GroupShape kZ3({3});
const GroupShape kZ5({5});
const GroupShape kZ3Z3({3, 3});

bool exactly_equal(const MatrixXcy& a, const MatrixXcy& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

SignatureMatrix minus_j_minus_i(int n) {
  MatrixXc m = MatrixXc::Constant(n, n, Complex(-1.0, 0.0));
  for (int i = 0; i < n; ++i) m(i, i) = Complex(0.0, 0.0);
  SignatureMatrix s;
  s.n = n;
  s.entries = CMatrix(std::move(m));
  return s;
}

}  // namespace

TEST_CASE("signature of a simplex is -(J - I)") {
  const SignatureMatrix s = signature_of(simplex(2));
  const MatrixXc& m = s.entries.floating();
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) {
      const Complex want = (r == c) ? Complex(0, 0) : Complex(-1, 0);
      CHECK(std::abs(m(r, c) - want) < 1e-12);
    }
}

TEST_CASE("signature of an orthogonal set is undefined") {
  try {
    (void)signature_of(onb(4));
    FAIL("expected OrthogonalSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOrthogonalSet);
  }
}

TEST_CASE("signature of unequal-norm input is rejected") {
  MatrixXc v(2, 3);
  v << Complex(1, 0), Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0), Complex(1, 0);
  const Frame f = make_frame(std::move(v), {}, NormConvention::kRaw);
  try {
    (void)signature_of(f);
    FAIL("expected NotEquiangular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotEquiangular);
  }
}

TEST_CASE("raw G(3) signature equals Gram minus (|m|-1) I") {
  const SignatureMatrix exact = signature_from_gram(CMatrix(gram_exact(kZ3)));
  const MatrixXcy closed = gram_closed_form(kZ3);
  const MatrixXcy& s = exact.entries.exact();
  for (Eigen::Index c = 0; c < s.cols(); ++c)
    for (Eigen::Index r = 0; r < s.rows(); ++r) {
      if (r == c) {
        CHECK(s(r, c).is_zero());
      } else {
        CHECK(s(r, c) == closed(r, c));
      }
    }

  // float route agrees
  const SignatureMatrix floating = signature_of(gabor_steiner(kZ3));
  const MatrixXc diff = floating.entries.floating() - to_floating(s);
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("normalize_signature leaves a normalized matrix unchanged") {
  const SignatureMatrix nsm = closed_form_normalized(kZ3);
  const auto [renormalized, diag] = normalize_signature(nsm);
  CHECK(exactly_equal(renormalized.entries.exact(), nsm.entries.exact()));
  const MatrixXcy& d = diag.exact();
  for (int j = 0; j < nsm.n; ++j) CHECK(d(j, 0) == Cyclotomic(1));
}

TEST_CASE("normalize_signature flips signs of -(J - I)") {
  const SignatureMatrix s = minus_j_minus_i(4);
  const auto [normalized, diag] = normalize_signature(s);
  const MatrixXc& m = normalized.entries.floating();
  for (int j = 1; j < 4; ++j) {
    CHECK(std::abs(m(0, j) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(m(j, 0) - Complex(1, 0)) < 1e-12);
  }
  // interior entries stay -1: D_j = -1 for j >= 1 conjugates pairwise
  for (int c = 1; c < 4; ++c)
    for (int r = 1; r < 4; ++r)
      if (r != c) CHECK(std::abs(m(r, c) - Complex(-1, 0)) < 1e-12);
  (void)diag;
}

TEST_CASE("normalization is a spectrum-preserving similarity") {
  const SignatureMatrix raw = signature_from_gram(CMatrix(gram_exact(kZ3)));
  const auto before = check_signature_axioms(raw, 3);
  const auto [normalized, diag] = normalize_signature(raw);
  const auto after = check_signature_axioms(normalized, 3);
  CHECK(before.all_pass());
  CHECK(after.all_pass());
  REQUIRE(before.spectrum.distinct_count == after.spectrum.distinct_count);
  for (int i = 0; i < before.spectrum.distinct_count; ++i) {
    CHECK(before.spectrum.eigenvalues[i].value ==
          doctest::Approx(after.spectrum.eigenvalues[i].value).epsilon(1e-12));
    CHECK(before.spectrum.eigenvalues[i].multiplicity ==
          after.spectrum.eigenvalues[i].multiplicity);
  }
  (void)diag;
}

TEST_CASE("closed-form normalized signature entries for Z_3") {
  const SignatureMatrix nsm = closed_form_normalized(kZ3);
  const MatrixXcy& m = nsm.entries.exact();
  const Cyclotomic zeta3 = Cyclotomic::root_of_unity(3, 1);

  // first row and column are one off the diagonal
  for (int j = 1; j < 9; ++j) {
    CHECK(m(0, j) == Cyclotomic(1));
    CHECK(m(j, 0) == Cyclotomic(1));
  }
  for (int j = 0; j < 9; ++j) CHECK(m(j, j).is_zero());

  // exponent (kappa k~ - kappa~ k)/2 at row (k~,kappa~)=(1;0), col (k,kappa)=(0;1):
  // (1*1 - 0*0) * 2 mod 3 = 2
  CHECK(m(3, 1) == -(zeta3 * zeta3));
  CHECK(m(1, 3) == -zeta3);  // conjugate position
}

TEST_CASE("closed form is self-adjoint, exactly") {
  for (const GroupShape& shape : {kZ3, kZ5, kZ3Z3}) {
    const SignatureMatrix nsm = closed_form_normalized(shape);
    CHECK(is_hermitian(nsm.entries.exact()));
  }
}

TEST_CASE("switching witness entries for Z_3") {
  const CMatrix witness = switching_witness(kZ3);
  const MatrixXcy& w = witness.exact();
  CHECK(w(0, 0) == Cyclotomic(-1));  // the extra sign on (0;0)
  // (k,kappa) = (1,1) -> zeta^{-1*(1-1)*2} = 1; pair rank 1*3+1 = 4
  CHECK(w(4, 0) == Cyclotomic(1));
  for (int j = 0; j < 9; ++j) CHECK(is_unimodular(w(j, 0)));
}

TEST_CASE("switching the raw signature yields the closed form, exactly") {
  for (const GroupShape& shape : {kZ3, kZ5, kZ3Z3}) {
    CAPTURE(shape.to_string());
    const SignatureMatrix raw = signature_from_gram(CMatrix(gram_exact(shape)));
    const SignatureMatrix switched = rephase(raw, switching_witness(shape));
    const SignatureMatrix closed = closed_form_normalized(shape);
    CHECK(exactly_equal(switched.entries.exact(), closed.entries.exact()));
  }
}

TEST_CASE("signature axioms hold with multiplicity d") {
  SUBCASE("G(3), d = 3") {
    const SignatureMatrix s = signature_from_gram(CMatrix(gram_exact(kZ3)));
    const auto report = check_signature_axioms(s, 3);
    CHECK(report.all_pass());
    CHECK(report.spectrum.eigenvalues[0].value == doctest::Approx(4.0));
    CHECK(report.spectrum.eigenvalues[0].multiplicity == 3);
    CHECK(report.spectrum.eigenvalues[1].value == doctest::Approx(-2.0));
    CHECK(report.spectrum.eigenvalues[1].multiplicity == 6);
  }
  SUBCASE("simplex signature -(J-I) at n = 4, d = 3") {
    const auto report = check_signature_axioms(minus_j_minus_i(4), 3);
    CHECK(report.all_pass());
    CHECK(report.spectrum.eigenvalues[0].value == doctest::Approx(1.0));
    CHECK(report.spectrum.eigenvalues[0].multiplicity == 3);
    CHECK(report.spectrum.eigenvalues[1].value == doctest::Approx(-3.0));
    CHECK(report.spectrum.eigenvalues[1].multiplicity == 1);
  }
  SUBCASE("random unimodular Hermitian zero-diagonal 5x5 fails axiom (iv)") {
    std::mt19937_64 rng(0xfeed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
    MatrixXc m = MatrixXc::Zero(5, 5);
    for (int c = 0; c < 5; ++c)
      for (int r = 0; r < c; ++r) {
        m(r, c) = std::polar(1.0, angle(rng));
        m(c, r) = std::conj(m(r, c));
      }
    SignatureMatrix s;
    s.n = 5;
    s.entries = CMatrix(std::move(m));
    const auto report = check_signature_axioms(s, std::nullopt);
    CHECK(report.hermitian);
    CHECK(report.zero_diagonal);
    CHECK(report.unimodular);
    CHECK_FALSE(report.two_eigenvalues);
    CHECK(report.spectrum.distinct_count > 2);
  }
}

TEST_CASE("frame_from_signature reconstructs an ETF with the same normalized signature") {
  const SignatureMatrix nsm = closed_form_normalized(kZ3);
  const Frame rebuilt = frame_from_signature(nsm);
  CHECK(rebuilt.dim == 3);
  CHECK(rebuilt.count == 9);
  const EtfVerdict v = verify_etf(rebuilt);
  CHECK(v.is_tight);
  CHECK(v.is_equiangular);
  CHECK(v.saturates_welch);

  const SignatureMatrix again = signature_of(rebuilt);
  const auto [renormalized, diag] = normalize_signature(again);
  const MatrixXc diff = renormalized.entries.floating() - nsm.entries.to_floating();
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-9);
  (void)diag;
}

TEST_CASE("zero first-row entry cannot be normalized") {
  MatrixXc m = MatrixXc::Zero(3, 3);
  m(1, 2) = Complex(1, 0);
  m(2, 1) = Complex(1, 0);
  SignatureMatrix s;
  s.n = 3;
  s.entries = CMatrix(std::move(m));
  try {
    (void)normalize_signature(s);
    FAIL("expected ZeroFirstRowEntry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroFirstRowEntry);
  }
}
