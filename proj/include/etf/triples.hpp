#ifndef ETF_TRIPLES_HPP
#define ETF_TRIPLES_HPP

#include "etf/frame.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace etf {

/// Triple products TP(j,k,l) = <phi_j,phi_k><phi_k,phi_l><phi_l,phi_j> of a
/// unit-normalized frame, backed by the Gram matrix. TP is conjugate
/// symmetric in its first two arguments and cyclically symmetric.
class TripleProductTensor {
 public:
  static TripleProductTensor from_frame(const Frame& f);

  int count() const { return n_; }

  Complex tp(int j, int k, int l) const {
    return gram_(k, j) * gram_(l, k) * gram_(j, l);
  }

  // TP / |TP|; throws ZeroTripleProduct when the magnitude vanishes.
  Complex phase(int j, int k, int l) const;

  double magnitude_class() const { return magnitude_class_; }
  const MatrixXc& unit_gram() const { return gram_; }

 private:
  TripleProductTensor(int n, MatrixXc gram, double magnitude_class)
      : n_(n), gram_(std::move(gram)), magnitude_class_(magnitude_class) {}

  int n_;
  MatrixXc gram_;
  double magnitude_class_;
};

TripleProductTensor triple_products(const Frame& f);

struct CheckReport {
  std::string name;
  bool pass = false;
  double max_violation = 0.0;
  std::string details;
  std::map<std::string, double> metrics;
};

// For every pair j != k of a tight frame:
// sum_l TP(j,k,l) = (n/d) |<phi_j,phi_k>|^2.
CheckReport sum_identity_check(const Frame& f, double tol = 1e-9);

struct CocycleOptions {
  long samples = 10000;       // used when n > 12; exhaustive otherwise
  std::uint64_t seed = 0x5eedc0de;
  double tol = 1e-9;
};

// Normalized triple products satisfy
// TP~(j,k,l) = TP~(m,j,k) TP~(m,k,l) TP~(m,l,j) for distinct j,k,l,m.
CheckReport cocycle_identity_check(const Frame& f, const CocycleOptions& options = {});

// True iff every distinct-index triple product is real and negative.
bool simplex_test(const Frame& f, double tol = 1e-9);

// Triple covariance forces all distinct-index triple products to coincide;
// checks that equality holds exactly when n <= d+1, coherence vanishes, or
// d = 1.
CheckReport triple_covariance_obstruction(const Frame& f, double tol = 1e-9);

// Necessary condition for double transitivity: every normalized triple
// product is a 2n-th root of unity.
CheckReport two_transitive_phase_test(const Frame& f, double tol = 1e-9);

}  // namespace etf

#endif  // ETF_TRIPLES_HPP
