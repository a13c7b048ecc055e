#include "etf/signature.hpp"

#include <algorithm>
#include <cmath>

namespace etf {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kFromFrame: return "from-frame";
    case Provenance::kClosedForm: return "closed-form";
    case Provenance::kHadamardPower: return "hadamard-power";
  }
  return "unknown";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "from-frame") return Provenance::kFromFrame;
  if (name == "closed-form") return Provenance::kClosedForm;
  if (name == "hadamard-power") return Provenance::kHadamardPower;
  throw Error(ErrorCode::kInvalidArgument, "unknown provenance: " + name);
}

namespace {

// sqrt of a rational that is a perfect square, if any
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < Rational(0)) return std::nullopt;
  const auto isqrt = [](long long v) -> std::optional<long long> {
    const long long r = std::llround(std::sqrt(static_cast<double>(v)));
    for (long long c = std::max(0LL, r - 1); c <= r + 1; ++c) {
      if (c * c == v) return c;
    }
    return std::nullopt;
  };
  const auto num = isqrt(q.numerator());
  const auto den = isqrt(q.denominator());
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

SignatureMatrix signature_from_gram_float(const MatrixXc& g, double tol) {
  const Eigen::Index n = g.rows();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "signature needs at least two vectors");
  }
  if (!is_hermitian(g, std::max(tol, 1e-10))) {
    throw Error(ErrorCode::kNonHermitian, "Gram matrix is not self-adjoint");
  }
  double nu2_min = g(0, 0).real(), nu2_max = g(0, 0).real();
  for (Eigen::Index j = 1; j < n; ++j) {
    nu2_min = std::min(nu2_min, g(j, j).real());
    nu2_max = std::max(nu2_max, g(j, j).real());
  }
  const double nu2 = (nu2_min + nu2_max) / 2.0;
  if (nu2_max - nu2_min > tol * nu2) {
    throw Error(ErrorCode::kNotEquiangular, "vectors do not have equal norms");
  }
  double mag_min = std::numeric_limits<double>::infinity(), mag_max = 0.0, mag_sum = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c) continue;
      const double a = std::abs(g(r, c));
      mag_min = std::min(mag_min, a);
      mag_max = std::max(mag_max, a);
      mag_sum += a;
    }
  }
  if (mag_max - mag_min > tol * nu2) {
    throw Error(ErrorCode::kNotEquiangular, "off-diagonal magnitudes are not constant");
  }
  if (mag_max <= tol * nu2) {
    throw Error(ErrorCode::kOrthogonalSet, "signature undefined for an orthogonal set");
  }
  const double divisor = mag_sum / static_cast<double>(n * (n - 1));
  MatrixXc s = g / divisor;
  for (Eigen::Index j = 0; j < n; ++j) s(j, j) = Complex(0.0, 0.0);
  SignatureMatrix out;
  out.n = static_cast<int>(n);
  out.entries = CMatrix(std::move(s));
  out.normalized = false;
  out.provenance = Provenance::kFromFrame;
  return out;
}

SignatureMatrix signature_from_gram_exact(const MatrixXcy& g) {
  const Eigen::Index n = g.rows();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "signature needs at least two vectors");
  }
  if (!is_hermitian(g)) {
    throw Error(ErrorCode::kNonHermitian, "Gram matrix is not self-adjoint");
  }
  const Cyclotomic nu2 = g(0, 0);
  if (!nu2.is_rational()) {
    throw Error(ErrorCode::kNotEquiangular, "diagonal is not rational");
  }
  for (Eigen::Index j = 1; j < n; ++j) {
    if (g(j, j) != nu2) {
      throw Error(ErrorCode::kNotEquiangular, "vectors do not have equal norms");
    }
  }
  // common off-diagonal magnitude, as a rational square root of |g01|^2
  const Cyclotomic mag2_cyclo = abs2(g(0, 1));
  if (!mag2_cyclo.is_rational()) {
    throw Error(ErrorCode::kNotEquiangular, "off-diagonal magnitude is not rational");
  }
  const Rational mag2 = mag2_cyclo.rational_value();
  if (mag2.numerator() == 0) {
    throw Error(ErrorCode::kOrthogonalSet, "signature undefined for an orthogonal set");
  }
  const auto mag = rational_sqrt(mag2);
  if (!mag) {
    throw Error(ErrorCode::kNotEquiangular,
                "off-diagonal magnitude is not rational; use the float backend");
  }
  const Cyclotomic inv_mag{Rational(mag->denominator(), mag->numerator())};

  MatrixXcy s = MatrixXcy::Constant(n, n, Cyclotomic(0));
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c) continue;
      const Cyclotomic value = g(r, c) * inv_mag;
      if (abs2(value) != Cyclotomic(1)) {
        throw Error(ErrorCode::kNotEquiangular,
                    "off-diagonal magnitudes are not constant");
      }
      s(r, c) = value;
    }
  }
  SignatureMatrix out;
  out.n = static_cast<int>(n);
  out.entries = CMatrix(std::move(s));
  out.normalized = false;
  out.provenance = Provenance::kFromFrame;
  return out;
}

}  // namespace

SignatureMatrix signature_from_gram(const CMatrix& gram_matrix, double tol) {
  if (gram_matrix.backend() == Backend::kExact) {
    return signature_from_gram_exact(gram_matrix.exact());
  }
  return signature_from_gram_float(gram_matrix.floating(), tol);
}

SignatureMatrix signature_of(const Frame& f, double tol) {
  return signature_from_gram(CMatrix(gram(f)), tol);
}

SignatureMatrix rephase(const SignatureMatrix& s, const CMatrix& w) {
  if (w.rows() != s.n || w.cols() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "diagonal must be an n x 1 column");
  }
  SignatureMatrix out = s;
  if (s.entries.backend() == Backend::kExact && w.backend() == Backend::kExact) {
    const MatrixXcy& m = s.entries.exact();
    const MatrixXcy& d = w.exact();
    MatrixXcy r(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index rr = 0; rr < m.rows(); ++rr)
        r(rr, c) = d(rr, 0).conjugate() * m(rr, c) * d(c, 0);
    out.entries = CMatrix(std::move(r));
  } else {
    const MatrixXc m = s.entries.to_floating();
    const MatrixXc d = w.to_floating();
    MatrixXc r(m.rows(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index rr = 0; rr < m.rows(); ++rr)
        r(rr, c) = std::conj(d(rr, 0)) * m(rr, c) * d(c, 0);
    out.entries = CMatrix(std::move(r));
  }
  return out;
}

std::pair<SignatureMatrix, CMatrix> normalize_signature(const SignatureMatrix& s) {
  if (s.n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "nothing to normalize for n < 2");
  }
  if (s.entries.backend() == Backend::kExact) {
    const MatrixXcy& m = s.entries.exact();
    MatrixXcy d = MatrixXcy::Constant(s.n, 1, Cyclotomic(1));
    for (int j = 1; j < s.n; ++j) {
      if (m(0, j).is_zero()) {
        throw Error(ErrorCode::kZeroFirstRowEntry, "first-row entry is zero");
      }
      d(j, 0) = m(0, j);
    }
    // S_bar = D S D^*; equals rephase with w = conj(D)
    MatrixXcy w(s.n, 1);
    for (int j = 0; j < s.n; ++j) w(j, 0) = d(j, 0).conjugate();
    SignatureMatrix normalized = rephase(s, CMatrix(w));
    normalized.normalized = true;
    return {std::move(normalized), CMatrix(std::move(d))};
  }
  const MatrixXc m = s.entries.floating();
  MatrixXc d = MatrixXc::Constant(s.n, 1, Complex(1.0, 0.0));
  for (int j = 1; j < s.n; ++j) {
    const double mag = std::abs(m(0, j));
    if (mag < 0.5) {
      throw Error(ErrorCode::kZeroFirstRowEntry, "first-row entry is zero");
    }
    d(j, 0) = m(0, j) / mag;
  }
  MatrixXc w(s.n, 1);
  for (int j = 0; j < s.n; ++j) w(j, 0) = std::conj(d(j, 0));
  SignatureMatrix normalized = rephase(s, CMatrix(std::move(w)));
  normalized.normalized = true;
  return {std::move(normalized), CMatrix(std::move(d))};
}

SignatureMatrix closed_form_normalized(const GroupShape& shape, long root_power) {
  const long size = shape.size();
  const long count = shape.etf_count();
  MatrixXcy out = MatrixXcy::Constant(count, count, Cyclotomic(0));
  for (long row = 0; row < count; ++row) {
    const GroupIndex kt = index_at(shape, row / size);   // k~
    const GroupIndex qt = index_at(shape, row % size);   // kappa~
    for (long col = 0; col < count; ++col) {
      if (row == col) continue;
      if (row == 0 || col == 0) {
        out(row, col) = Cyclotomic(1);
        continue;
      }
      const GroupIndex k = index_at(shape, col / size);
      const GroupIndex q = index_at(shape, col % size);
      Cyclotomic value(-1);
      for (int l = 0; l < shape.factors(); ++l) {
        const long m = shape.moduli()[l];
        const long long exponent = static_cast<long long>(root_power) *
                                   (q.digits[l] * kt.digits[l] - qt.digits[l] * k.digits[l]) *
                                   detail::inverse_of_two(m);
        value *= Cyclotomic::root_of_unity(m, detail::mod(exponent, m));
      }
      out(row, col) = value;
    }
  }
  SignatureMatrix result;
  result.n = static_cast<int>(count);
  result.entries = CMatrix(std::move(out));
  result.normalized = true;
  result.provenance = Provenance::kClosedForm;
  result.shape = shape;
  return result;
}

CMatrix switching_witness(const GroupShape& shape) {
  const long size = shape.size();
  const long count = shape.etf_count();
  MatrixXcy w = MatrixXcy::Constant(count, 1, Cyclotomic(1));
  for (long j = 0; j < count; ++j) {
    const GroupIndex k = index_at(shape, j / size);
    const GroupIndex q = index_at(shape, j % size);
    Cyclotomic value(1);
    for (int l = 0; l < shape.factors(); ++l) {
      const long m = shape.moduli()[l];
      const long long exponent = -static_cast<long long>(q.digits[l]) *
                                 (k.digits[l] - 1) * detail::inverse_of_two(m);
      value *= Cyclotomic::root_of_unity(m, detail::mod(exponent, m));
    }
    if (j == 0) value = -value;
    w(j, 0) = value;
  }
  return CMatrix(std::move(w));
}

SignatureAxiomsReport check_signature_axioms(const SignatureMatrix& s,
                                             std::optional<int> dim, double tol) {
  SignatureAxiomsReport report;
  report.expected_dim = dim;

  if (s.entries.backend() == Backend::kExact) {
    const MatrixXcy& m = s.entries.exact();
    report.hermitian = is_hermitian(m);
    report.zero_diagonal = true;
    report.unimodular = true;
    const Cyclotomic one(1);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r == c) {
          if (!m(r, c).is_zero()) report.zero_diagonal = false;
        } else if (abs2(m(r, c)) != one) {
          report.unimodular = false;
        }
      }
    }
  } else {
    const MatrixXc& m = s.entries.floating();
    report.hermitian = is_hermitian(m, std::max(tol, 1e-10));
    report.zero_diagonal = true;
    report.unimodular = true;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r == c) {
          if (std::abs(m(r, c)) > tol) report.zero_diagonal = false;
        } else if (std::abs(std::abs(m(r, c)) - 1.0) > std::max(tol, 1e-8)) {
          report.unimodular = false;
        }
      }
    }
  }

  if (report.hermitian && report.zero_diagonal && report.unimodular) {
    report.spectrum = two_eigenvalue_test(s.entries, tol);
    report.two_eigenvalues = report.spectrum.distinct_count == 2;
    if (dim && report.two_eigenvalues) {
      report.multiplicity_matches = report.spectrum.largest_multiplicity() == *dim;
    } else if (dim) {
      report.multiplicity_matches = false;
    }
  } else {
    report.two_eigenvalues = false;
    if (dim) report.multiplicity_matches = false;
  }
  return report;
}

Frame frame_from_signature(const SignatureMatrix& s, double tol) {
  const MatrixXc m = s.entries.to_floating();
  const SpectrumReport spectrum = clustered_spectrum(m, tol);
  if (spectrum.distinct_count != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "signature matrix must have exactly two distinct eigenvalues");
  }
  const double hi = spectrum.eigenvalues[0].value;
  const double lo = spectrum.eigenvalues[1].value;
  const int d = spectrum.eigenvalues[0].multiplicity;
  if (lo >= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "smaller eigenvalue must be negative");
  }
  (void)hi;

  // G = I - S/lo is PSD with rank d and unit diagonal
  const Eigen::Index n = m.rows();
  const MatrixXc g = MatrixXc::Identity(n, n) - m / lo;
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(g);
  // top-d eigenpairs, descending eigenvalue then index
  MatrixXc vectors(d, n);
  for (int t = 0; t < d; ++t) {
    const Eigen::Index src = n - 1 - t;
    const double mu = solver.eigenvalues()(src);
    vectors.row(t) = std::sqrt(std::max(mu, 0.0)) * solver.eigenvectors().col(src).adjoint();
  }
  for (Eigen::Index j = 0; j < n; ++j) vectors.col(j) /= vectors.col(j).norm();
  return make_frame(std::move(vectors), {}, NormConvention::kUnit);
}

}  // namespace etf
