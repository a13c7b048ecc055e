#ifndef ETF_SYMMETRY_HPP
#define ETF_SYMMETRY_HPP

#include "etf/frame.hpp"

#include <vector>

namespace etf {

using Permutation = std::vector<int>;

Permutation compose(const Permutation& outer, const Permutation& inner);  // outer(inner(x))
Permutation inverse(const Permutation& p);

/// Explicit permutation group on {0..degree-1}, elements sorted
/// lexicographically. `antiunitary_elements` holds triple-product-conjugating
/// permutations when they were requested; they are not part of the group
/// used for covariance verdicts.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> elements;
  std::vector<Permutation> antiunitary_elements;
  bool closure_verified = false;

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(const Permutation& p) const;
};

struct SearchLimits {
  int max_count = 100;
  long long max_nodes = 10'000'000;
  double tp_tol = 1e-8;
  bool include_antiunitary = false;
};

// All permutations of the frame indices preserving every ordered triple
// product, found by backtracking with per-index fingerprint pruning. The
// result is verified closed under composition and inverses.
PermGroup tp_automorphisms(const Frame& f, const SearchLimits& limits = {});

// True iff the orbit of one ordered k-tuple of distinct points has the full
// size n(n-1)...(n-k+1).
bool k_transitive(const PermGroup& group, int n, int k);

bool is_k_covariant(const Frame& f, int k, const SearchLimits& limits = {});

}  // namespace etf

#endif  // ETF_SYMMETRY_HPP
