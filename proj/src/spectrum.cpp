#include "etf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace etf {
namespace {

SpectrumReport report_from_sorted_values(std::vector<double> values, double gap_threshold,
                                         SpectrumMethod method, std::optional<double> tol_used) {
  // values ascending; merge runs whose adjacent gap stays below the threshold
  SpectrumReport report;
  report.method = method;
  report.tolerance_used = tol_used;
  size_t start = 0;
  std::vector<EigenvalueCluster> clusters;
  for (size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > gap_threshold) {
      double mean = 0.0;
      for (size_t j = start; j < i; ++j) mean += values[j];
      mean /= static_cast<double>(i - start);
      clusters.push_back({mean, static_cast<int>(i - start)});
      start = i;
    }
  }
  std::reverse(clusters.begin(), clusters.end());  // strictly decreasing
  report.eigenvalues = std::move(clusters);
  report.distinct_count = static_cast<int>(report.eigenvalues.size());
  return report;
}

bool is_diagonal_only(const MatrixXc& s, double tol) {
  for (Eigen::Index j = 0; j < s.cols(); ++j)
    for (Eigen::Index i = 0; i < s.rows(); ++i)
      if (i != j && std::abs(s(i, j)) > tol) return false;
  return true;
}

bool is_diagonal_only(const MatrixXcy& s) {
  for (Eigen::Index j = 0; j < s.cols(); ++j)
    for (Eigen::Index i = 0; i < s.rows(); ++i)
      if (i != j && !s(i, j).is_zero()) return false;
  return true;
}

SpectrumReport diagonal_report(std::vector<double> diag, double gap_threshold,
                               SpectrumMethod method, std::optional<double> tol_used) {
  std::sort(diag.begin(), diag.end());
  return report_from_sorted_values(std::move(diag), gap_threshold, method, tol_used);
}

void require_signature_shape(const MatrixXc& s, double tol) {
  if (!is_hermitian(s, std::max(tol, 1e-10))) {
    throw Error(ErrorCode::kNonHermitian, "matrix is not self-adjoint");
  }
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
      if (i == j) continue;
      if (std::abs(std::abs(s(i, j)) - 1.0) > std::max(tol, 1e-10)) {
        throw Error(ErrorCode::kNonUnimodular, "off-diagonal entry is not unimodular");
      }
    }
  }
}

void require_signature_shape(const MatrixXcy& s) {
  if (!is_hermitian(s)) {
    throw Error(ErrorCode::kNonHermitian, "matrix is not self-adjoint");
  }
  const Cyclotomic one(1);
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
      if (i == j) {
        if (!s(i, j).is_zero()) {
          throw Error(ErrorCode::kInvalidArgument, "diagonal entry is not zero");
        }
        continue;
      }
      if (abs2(s(i, j)) != one) {
        throw Error(ErrorCode::kNonUnimodular, "off-diagonal entry is not unimodular");
      }
    }
  }
}

}  // namespace

SpectrumReport clustered_spectrum(const MatrixXc& hermitian, double tol) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(hermitian, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  const double radius = std::max(std::abs(values.front()), std::abs(values.back()));
  return report_from_sorted_values(std::move(values), tol * radius,
                                   SpectrumMethod::kDenseEigFloat, tol);
}

SpectrumReport two_eigenvalue_test_float(const MatrixXc& s, double tol) {
  const Eigen::Index n = s.rows();
  if (s.cols() != n) throw Error(ErrorCode::kInvalidArgument, "matrix must be square");
  if (n <= 1 || is_diagonal_only(s, std::max(tol, 1e-12))) {
    std::vector<double> diag(static_cast<size_t>(n), 0.0);
    for (Eigen::Index i = 0; i < n; ++i) diag[static_cast<size_t>(i)] = s(i, i).real();
    return diagonal_report(std::move(diag), tol, SpectrumMethod::kDenseEigFloat, tol);
  }
  require_signature_shape(s, tol);
  return clustered_spectrum(s, tol);
}

SpectrumReport two_eigenvalue_test_exact(const MatrixXcy& s) {
  const Eigen::Index n = s.rows();
  if (s.cols() != n) throw Error(ErrorCode::kInvalidArgument, "matrix must be square");
  if (n <= 1 || is_diagonal_only(s)) {
    std::vector<double> diag(static_cast<size_t>(n), 0.0);
    for (Eigen::Index i = 0; i < n; ++i) diag[static_cast<size_t>(i)] = s(i, i).to_complex().real();
    auto report = diagonal_report(std::move(diag), 0.0,
                                  SpectrumMethod::kQuadraticIdentityExact, std::nullopt);
    return report;
  }
  require_signature_shape(s);

  const MatrixXcy s2 = s * s;
  const Cyclotomic n_minus_1(static_cast<long long>(n - 1));

  bool identity_holds = true;
  for (Eigen::Index i = 0; i < n && identity_holds; ++i) {
    if (s2(i, i) != n_minus_1) identity_holds = false;
  }

  Rational alpha(0);
  if (identity_holds) {
    // alpha = (S^2)_{01} / S_{01}; the divisor is unimodular so its inverse
    // is its conjugate.
    const Cyclotomic candidate = s2(0, 1) * s(0, 1).conjugate();
    if (!candidate.is_rational()) {
      identity_holds = false;
    } else {
      alpha = candidate.rational_value();
      const Cyclotomic alpha_scalar{alpha};
      for (Eigen::Index j = 0; j < n && identity_holds; ++j) {
        for (Eigen::Index i = 0; i < n && identity_holds; ++i) {
          if (i == j) continue;
          if (s2(i, j) != alpha_scalar * s(i, j)) identity_holds = false;
        }
      }
    }
  }

  if (identity_holds) {
    const double a = to_double(alpha);
    const double disc = std::sqrt(a * a + 4.0 * static_cast<double>(n - 1));
    const double lo = (a - disc) / 2.0;
    const double hi = (a + disc) / 2.0;
    // multiplicities from trace(S) = 0
    const double hi_mult_real = -static_cast<double>(n) * lo / (hi - lo);
    const long hi_mult = std::lround(hi_mult_real);
    if (std::abs(hi_mult_real - static_cast<double>(hi_mult)) < 1e-6 && hi_mult >= 1 &&
        hi_mult <= n - 1) {
      SpectrumReport report;
      report.method = SpectrumMethod::kQuadraticIdentityExact;
      report.distinct_count = 2;
      report.eigenvalues = {{hi, static_cast<int>(hi_mult)},
                            {lo, static_cast<int>(n - hi_mult)}};
      return report;
    }
  }

  // The quadratic identity does not hold; count eigenvalues on the float path.
  return two_eigenvalue_test_float(to_floating(s), kDefaultClusterTol);
}

SpectrumReport two_eigenvalue_test(const CMatrix& s, std::optional<double> tol) {
  if (s.backend() == Backend::kExact) return two_eigenvalue_test_exact(s.exact());
  return two_eigenvalue_test_float(s.floating(), tol.value_or(kDefaultClusterTol));
}

}  // namespace etf
