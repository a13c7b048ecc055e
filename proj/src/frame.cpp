#include "etf/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace etf {

Frame make_frame(MatrixXc vectors, std::vector<std::string> labels,
                 NormConvention convention) {
  const int d = static_cast<int>(vectors.rows());
  const int n = static_cast<int>(vectors.cols());
  if (d < 1 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "frame must have positive dimensions");
  }
  if (labels.empty()) {
    labels.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) labels[static_cast<size_t>(j)] = "v" + std::to_string(j);
  }
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "label count must match vector count");
  }
  for (int j = 0; j < n; ++j) {
    const double norm = vectors.col(j).norm();
    if (norm == 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "frame contains a zero vector");
    }
    if (convention == NormConvention::kUnit && std::abs(norm - 1.0) > 1e-12) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unit-convention frame has a non-unit column");
    }
  }
  return Frame{d, n, std::move(vectors), std::move(labels), convention};
}

Frame unit_normalized(const Frame& f) {
  if (f.norm_convention == NormConvention::kUnit) return f;
  MatrixXc v = f.vectors;
  for (int j = 0; j < f.count; ++j) v.col(j) /= v.col(j).norm();
  return Frame{f.dim, f.count, std::move(v), f.labels, NormConvention::kUnit};
}

MatrixXc gram(const Frame& f) { return f.vectors.adjoint() * f.vectors; }

double welch_bound(int d, int n) {
  if (n <= d || n < 2) return 0.0;
  return std::sqrt(static_cast<double>(n - d) /
                   (static_cast<double>(d) * static_cast<double>(n - 1)));
}

EtfVerdict verify_etf(const Frame& f, double tol) {
  EtfVerdict verdict;
  verdict.tolerance = tol;

  // equal-norm is judged on the frame as given
  double min_norm = std::numeric_limits<double>::infinity();
  double max_norm = 0.0;
  for (int j = 0; j < f.count; ++j) {
    const double norm = f.vectors.col(j).norm();
    min_norm = std::min(min_norm, norm);
    max_norm = std::max(max_norm, norm);
  }
  const double mean_norm = (min_norm + max_norm) / 2.0;
  verdict.is_equal_norm = (max_norm - min_norm) <= tol * mean_norm;

  const Frame unit = unit_normalized(f);
  const int d = unit.dim;
  const int n = unit.count;

  const MatrixXc frame_op = unit.vectors * unit.vectors.adjoint();
  const double ratio = static_cast<double>(n) / static_cast<double>(d);
  verdict.is_tight =
      (frame_op - ratio * MatrixXc::Identity(d, d)).norm() <= tol * ratio;

  verdict.welch_bound = welch_bound(d, n);
  if (n < 2) {
    verdict.degenerate = true;
    verdict.is_equiangular = true;  // vacuous
    verdict.coherence = 0.0;
    verdict.saturates_welch = true;
    verdict.gerzon_ok = true;
    return verdict;
  }

  const MatrixXc g = gram(unit);
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      const double a = std::abs(g(j, k));
      min_abs = std::min(min_abs, a);
      max_abs = std::max(max_abs, a);
    }
  }
  verdict.coherence = max_abs;
  verdict.is_equiangular = (max_abs - min_abs) <= tol;
  verdict.saturates_welch = std::abs(verdict.coherence - verdict.welch_bound) <= tol;
  verdict.gerzon_ok =
      !(verdict.saturates_welch && static_cast<long long>(n) > static_cast<long long>(d) * d);
  return verdict;
}

Frame onb(int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  std::vector<std::string> labels(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) labels[static_cast<size_t>(j)] = "e" + std::to_string(j);
  return make_frame(MatrixXc::Identity(d, d), std::move(labels), NormConvention::kUnit);
}

Frame simplex(int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  const int n = d + 1;
  // mean-centered standard basis of C^{n}, expressed in an orthonormal basis
  // of the all-ones vector's orthogonal complement
  MatrixXc centered = MatrixXc::Identity(n, n);
  centered.array() -= 1.0 / static_cast<double>(n);

  MatrixXc ones(n, 1);
  ones.setConstant(Complex(1.0, 0.0));
  Eigen::HouseholderQR<MatrixXc> qr(ones);
  const MatrixXc q = qr.householderQ();
  const MatrixXc complement_basis = q.rightCols(d);  // n x d, orthonormal

  MatrixXc vectors = complement_basis.adjoint() * centered;  // d x n
  for (int j = 0; j < n; ++j) vectors.col(j) /= vectors.col(j).norm();

  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) labels[static_cast<size_t>(j)] = "s" + std::to_string(j);
  return make_frame(std::move(vectors), std::move(labels), NormConvention::kUnit);
}

Frame naimark_complement(const Frame& f) {
  const EtfVerdict verdict = verify_etf(f);
  if (!verdict.is_tight) {
    throw Error(ErrorCode::kNotTight, "Naimark complement requires a tight frame");
  }
  const Frame unit = unit_normalized(f);
  const int d = unit.dim;
  const int n = unit.count;
  if (n == d) {
    throw Error(ErrorCode::kFullDimension, "frame spans the whole space; complement is empty");
  }

  const double scale = std::sqrt(static_cast<double>(d) / n);
  const MatrixXc a = scale * unit.vectors;  // d x n, orthonormal rows

  // Orthonormal basis of the orthogonal complement of the row space,
  // Gram-Schmidt over the projector columns in index order.
  const MatrixXc projector = MatrixXc::Identity(n, n) - a.adjoint() * a;
  MatrixXc basis(n, n - d);
  int found = 0;
  for (int j = 0; j < n && found < n - d; ++j) {
    VectorXc candidate = projector.col(j);
    for (int t = 0; t < found; ++t) {
      candidate -= basis.col(t).dot(candidate) * basis.col(t);
    }
    const double norm = candidate.norm();
    if (norm > 1e-10) {
      basis.col(found++) = candidate / norm;
    }
  }
  if (found != n - d) {
    throw Error(ErrorCode::kInvalidArgument, "null-space basis extraction failed");
  }

  // rows of basis^* complete a to a unitary; its columns are the complement
  // vectors, scaled back to unit norm
  MatrixXc vectors = basis.adjoint();  // (n-d) x n
  const double rescale = std::sqrt(static_cast<double>(n) / (n - d));
  vectors *= rescale;
  for (int j = 0; j < n; ++j) vectors.col(j) /= vectors.col(j).norm();

  return make_frame(std::move(vectors), unit.labels, NormConvention::kUnit);
}

}  // namespace etf
