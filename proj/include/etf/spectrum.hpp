#ifndef ETF_SPECTRUM_HPP
#define ETF_SPECTRUM_HPP

#include "etf/numeric.hpp"

#include <optional>
#include <vector>

namespace etf {

struct EigenvalueCluster {
  double value = 0.0;
  int multiplicity = 0;
};

enum class SpectrumMethod { kQuadraticIdentityExact, kDenseEigFloat };

/// Distinct-eigenvalue summary of a self-adjoint matrix. Eigenvalues are
/// listed in strictly decreasing order; multiplicities sum to the dimension.
struct SpectrumReport {
  int distinct_count = 0;
  std::vector<EigenvalueCluster> eigenvalues;
  SpectrumMethod method = SpectrumMethod::kDenseEigFloat;
  std::optional<double> tolerance_used;

  double largest() const { return eigenvalues.front().value; }
  int largest_multiplicity() const { return eigenvalues.front().multiplicity; }
};

inline constexpr double kDefaultClusterTol = 1e-8;

// Decides whether a signature-style matrix (self-adjoint, zero diagonal,
// unimodular off-diagonal) has exactly two distinct eigenvalues.
//
// Exact backend: certifies via the quadratic identity S^2 = alpha*S + (n-1)I
// with alpha rational; if the identity fails, falls back to the dense float
// path on the converted matrix. Float backend: dense Hermitian
// eigendecomposition followed by gap clustering at tol * spectral radius.
SpectrumReport two_eigenvalue_test(const CMatrix& s, std::optional<double> tol = std::nullopt);

SpectrumReport two_eigenvalue_test_float(const MatrixXc& s, double tol = kDefaultClusterTol);
SpectrumReport two_eigenvalue_test_exact(const MatrixXcy& s);

// Clusters the eigenvalues of a Hermitian matrix; no structural preconditions.
SpectrumReport clustered_spectrum(const MatrixXc& hermitian, double tol = kDefaultClusterTol);

}  // namespace etf

#endif  // ETF_SPECTRUM_HPP
