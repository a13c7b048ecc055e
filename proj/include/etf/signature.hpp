#ifndef ETF_SIGNATURE_HPP
#define ETF_SIGNATURE_HPP

#include "etf/frame.hpp"
#include "etf/gabor.hpp"
#include "etf/spectrum.hpp"

#include <optional>
#include <utility>

namespace etf {

enum class Provenance { kFromFrame, kClosedForm, kHadamardPower };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

/// Seidel-style matrix of an equiangular set: zero diagonal, unimodular
/// off-diagonal, self-adjoint. `shape` is set when the matrix came from a
/// Gabor-Steiner construction and informs root-order search defaults.
struct SignatureMatrix {
  int n = 0;
  CMatrix entries;
  bool normalized = false;
  Provenance provenance = Provenance::kFromFrame;
  std::optional<GroupShape> shape;
};

// S = (G - nu^2 I) / (common off-diagonal magnitude of G). Float backend for
// general Gram matrices; exact backend requires the scaled off-diagonal
// magnitude to be rational.
SignatureMatrix signature_from_gram(const CMatrix& gram_matrix, double tol = 1e-10);

SignatureMatrix signature_of(const Frame& f, double tol = 1e-10);

// Signature of the rephased set {w_j phi_j}: entries conj(w_r) S(r,c) w_c.
// The diagonal unitary `w` must have unimodular entries.
SignatureMatrix rephase(const SignatureMatrix& s, const CMatrix& w);

// Switches S into normalized form via D = diag(1, S(0,1), S(0,2), ...):
// returns (D S D^*, D). First row and column of the result are one off the
// diagonal; the spectrum is unchanged.
std::pair<SignatureMatrix, CMatrix> normalize_signature(const SignatureMatrix& s);

// Normalized signature matrix of G(m) in closed form, exact backend: entry at
// row (k~,kappa~), column (k,kappa) is -prod_ell zeta^{t (kappa k~ - kappa~ k)/2}
// away from row/column zero, 1 - delta there. `root_power` t selects the
// primitive root zeta^t used per factor.
SignatureMatrix closed_form_normalized(const GroupShape& shape, long root_power = 1);

// Per-vector rephasing scalars that switch signature_of(gabor_steiner(shape))
// into closed_form_normalized(shape): w_{(k,kappa)} = prod_ell
// zeta^{-kappa (k-1)/2}, with an extra -1 on the (0,0) vector. Returned as an
// n x 1 exact column; apply with rephase().
CMatrix switching_witness(const GroupShape& shape);

struct SignatureAxiomsReport {
  bool hermitian = false;
  bool zero_diagonal = false;
  bool unimodular = false;
  bool two_eigenvalues = false;
  bool multiplicity_matches = true;  // trivially true when no dimension given
  std::optional<int> expected_dim;
  SpectrumReport spectrum;

  bool all_pass() const {
    return hermitian && zero_diagonal && unimodular && two_eigenvalues &&
           multiplicity_matches;
  }
};

SignatureAxiomsReport check_signature_axioms(const SignatureMatrix& s,
                                             std::optional<int> dim = std::nullopt,
                                             double tol = kDefaultClusterTol);

// Converse direction: builds an ETF whose signature matrix is s, via the
// projector onto the top eigenspace scaled to a unit-diagonal Gram matrix.
Frame frame_from_signature(const SignatureMatrix& s, double tol = kDefaultClusterTol);

}  // namespace etf

#endif  // ETF_SIGNATURE_HPP
