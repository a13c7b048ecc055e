#include "etf/symmetry.hpp"

#include "etf/triples.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

namespace etf {

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[static_cast<size_t>(inner[i])];
  }
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

namespace {

struct TupleHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t seed = v.size();
    for (int x : v) seed = seed * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
    return seed;
  }
};

// Quantizes every ordered-distinct triple product into an integer cluster id
// so that the search compares values exactly. Clusters are formed by a
// single-link walk over lexicographically sorted values; the input must keep
// distinct values separated by much more than the tolerance, which is checked.
class TpIndex {
 public:
  TpIndex(const TripleProductTensor& t, double tol) : n_(t.count()) {
    std::vector<Complex> values;
    values.reserve(static_cast<size_t>(n_) * n_ * n_);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l)
          if (j != k && j != l && k != l) values.push_back(t.tp(j, k, l));

    std::vector<Complex> sorted = values;
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    double min_split = std::numeric_limits<double>::infinity();
    for (const Complex& v : sorted) {
      if (!centers_.empty()) {
        const Complex prev = centers_.back();
        const double dre = std::abs(v.real() - prev.real());
        const double dim = std::abs(v.imag() - prev.imag());
        if (dre <= tol && dim <= tol) continue;
        min_split = std::min(min_split, std::max(dre, dim));
      }
      centers_.push_back(v);
    }
    if (centers_.size() > 1 && min_split < 3 * tol) {
      throw Error(ErrorCode::kInvalidArgument,
                  "triple-product values are not separated at the comparison tolerance");
    }

    ids_.assign(static_cast<size_t>(n_) * n_ * n_, -1);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l)
          if (j != k && j != l && k != l) {
            ids_[flat(j, k, l)] = locate(t.tp(j, k, l), tol);
          }

    conj_of_.resize(centers_.size());
    for (size_t c = 0; c < centers_.size(); ++c) {
      conj_of_[c] = locate(std::conj(centers_[c]), tol);
    }
  }

  int id(int j, int k, int l) const { return ids_[flat(j, k, l)]; }
  int conj_id(int cluster) const { return conj_of_[static_cast<size_t>(cluster)]; }
  int cluster_count() const { return static_cast<int>(centers_.size()); }

 private:
  size_t flat(int j, int k, int l) const {
    return (static_cast<size_t>(j) * n_ + static_cast<size_t>(k)) * n_ + static_cast<size_t>(l);
  }

  int locate(Complex v, double tol) const {
    // centers are lex-sorted; binary search on the real part, then scan
    const auto lower = std::lower_bound(
        centers_.begin(), centers_.end(), v.real() - 2 * tol,
        [](const Complex& c, double bound) { return c.real() < bound; });
    for (auto it = lower; it != centers_.end() && it->real() <= v.real() + 2 * tol; ++it) {
      if (std::abs(it->real() - v.real()) <= tol && std::abs(it->imag() - v.imag()) <= tol) {
        return static_cast<int>(it - centers_.begin());
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "triple-product value missing from its own index");
  }

  int n_;
  std::vector<int> ids_;
  std::vector<Complex> centers_;
  std::vector<int> conj_of_;
};

// Sorted multiset of TP ids over ordered pairs (k,l); invariant under any
// triple-product-preserving relabeling.
std::vector<int> fingerprint(const TpIndex& index, int n, int j, bool conjugate) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>((n - 1) * (n - 2)));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == j || l == j || k == l) continue;
      const int id = index.id(j, k, l);
      out.push_back(conjugate ? index.conj_id(id) : id);
    }
  std::sort(out.begin(), out.end());
  return out;
}

class Search {
 public:
  Search(const TpIndex& index, int n, const SearchLimits& limits, bool conjugating)
      : index_(index), n_(n), limits_(limits), conjugating_(conjugating) {
    build_candidates();
    order_positions();
  }

  std::vector<Permutation> run() {
    assignment_.assign(static_cast<size_t>(n_), -1);
    used_.assign(static_cast<size_t>(n_), false);
    nodes_ = 0;
    found_.clear();
    descend(0);
    return std::move(found_);
  }

 private:
  int target(int j, int k, int l) const {
    const int id = index_.id(j, k, l);
    return conjugating_ ? index_.conj_id(id) : id;
  }

  void build_candidates() {
    std::vector<std::vector<int>> plain;
    plain.reserve(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) plain.push_back(fingerprint(index_, n_, j, false));
    candidates_.assign(static_cast<size_t>(n_), {});
    for (int j = 0; j < n_; ++j) {
      const std::vector<int> source =
          conjugating_ ? fingerprint(index_, n_, j, true) : plain[static_cast<size_t>(j)];
      for (int b = 0; b < n_; ++b) {
        if (source == plain[static_cast<size_t>(b)]) {
          candidates_[static_cast<size_t>(j)].push_back(b);
        }
      }
    }
  }

  void order_positions() {
    positions_.resize(static_cast<size_t>(n_));
    std::iota(positions_.begin(), positions_.end(), 0);
    std::stable_sort(positions_.begin(), positions_.end(), [&](int a, int b) {
      return candidates_[static_cast<size_t>(a)].size() <
             candidates_[static_cast<size_t>(b)].size();
    });
  }

  bool consistent(int a, int image) const {
    // triples formed by a with every previously assigned pair must map to
    // identical cluster ids
    for (size_t u = 0; u < depth_indices_.size(); ++u) {
      const int x = depth_indices_[u];
      const int sx = assignment_[static_cast<size_t>(x)];
      for (size_t v = u + 1; v < depth_indices_.size(); ++v) {
        const int y = depth_indices_[v];
        const int sy = assignment_[static_cast<size_t>(y)];
        if (target(a, x, y) != index_.id(image, sx, sy)) return false;
        if (target(a, y, x) != index_.id(image, sy, sx)) return false;
      }
    }
    return true;
  }

  void descend(int depth) {
    if (depth == n_) {
      found_.push_back(assignment_);
      return;
    }
    const int a = positions_[static_cast<size_t>(depth)];
    for (int image : candidates_[static_cast<size_t>(a)]) {
      if (used_[static_cast<size_t>(image)]) continue;
      if (++nodes_ > limits_.max_nodes) {
        throw Error(ErrorCode::kSearchBudgetExceeded,
                    "automorphism search exceeded the node budget");
      }
      if (!consistent(a, image)) continue;
      assignment_[static_cast<size_t>(a)] = image;
      used_[static_cast<size_t>(image)] = true;
      depth_indices_.push_back(a);
      descend(depth + 1);
      depth_indices_.pop_back();
      used_[static_cast<size_t>(image)] = false;
      assignment_[static_cast<size_t>(a)] = -1;
    }
  }

  const TpIndex& index_;
  int n_;
  SearchLimits limits_;
  bool conjugating_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> positions_;
  Permutation assignment_;
  std::vector<bool> used_;
  std::vector<int> depth_indices_;
  long long nodes_ = 0;
  std::vector<Permutation> found_;
};

void verify_group(PermGroup& group) {
  const auto& elems = group.elements;
  const auto member = [&](const Permutation& p) {
    return std::binary_search(elems.begin(), elems.end(), p);
  };

  Permutation identity(static_cast<size_t>(group.degree));
  std::iota(identity.begin(), identity.end(), 0);
  if (!member(identity)) {
    throw Error(ErrorCode::kInvalidArgument, "automorphism set misses the identity");
  }

  const size_t count = elems.size();
  bool ok = true;
  if (count <= 1500) {
    for (size_t i = 0; i < count && ok; ++i) {
      if (!member(inverse(elems[i]))) ok = false;
      for (size_t j = 0; j < count && ok; ++j) {
        if (!member(compose(elems[i], elems[j]))) ok = false;
      }
    }
  } else {
    std::mt19937_64 rng(0xc105u);
    std::uniform_int_distribution<size_t> pick(0, count - 1);
    for (int trial = 0; trial < 20000 && ok; ++trial) {
      const auto& a = elems[pick(rng)];
      const auto& b = elems[pick(rng)];
      if (!member(compose(a, b)) || !member(inverse(a))) ok = false;
    }
  }
  if (!ok) {
    throw Error(ErrorCode::kInvalidArgument,
                "automorphism set is not closed; tolerance too loose for this frame");
  }
  group.closure_verified = true;
}

}  // namespace

PermGroup tp_automorphisms(const Frame& f, const SearchLimits& limits) {
  const EtfVerdict verdict = verify_etf(f);
  if (!verdict.is_etf()) {
    throw Error(ErrorCode::kNotEtf, "symmetry search requires an ETF input");
  }
  if (f.count > limits.max_count) {
    throw Error(ErrorCode::kTooLarge, "frame exceeds the symmetry search size limit");
  }

  const TripleProductTensor t = triple_products(f);
  const TpIndex index(t, limits.tp_tol);

  PermGroup group;
  group.degree = f.count;
  group.elements = Search(index, f.count, limits, /*conjugating=*/false).run();
  std::sort(group.elements.begin(), group.elements.end());
  verify_group(group);

  if (limits.include_antiunitary) {
    std::vector<Permutation> conjugating =
        Search(index, f.count, limits, /*conjugating=*/true).run();
    std::sort(conjugating.begin(), conjugating.end());
    for (const auto& p : conjugating) {
      if (!group.contains(p)) group.antiunitary_elements.push_back(p);
    }
  }
  return group;
}

bool k_transitive(const PermGroup& group, int n, int k) {
  if (n != group.degree) {
    throw Error(ErrorCode::kInvalidArgument, "degree mismatch in k_transitive");
  }
  if (k < 0 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "k must satisfy 0 <= k <= n");
  }
  if (k == 0) return true;

  unsigned long long full_orbit = 1;
  for (int i = 0; i < k; ++i) full_orbit *= static_cast<unsigned long long>(n - i);

  std::unordered_set<std::vector<int>, TupleHash> orbit;
  std::vector<int> image(static_cast<size_t>(k));
  for (const auto& g : group.elements) {
    for (int i = 0; i < k; ++i) image[static_cast<size_t>(i)] = g[static_cast<size_t>(i)];
    orbit.insert(image);
    if (orbit.size() == full_orbit) return true;
  }
  return orbit.size() == full_orbit;
}

bool is_k_covariant(const Frame& f, int k, const SearchLimits& limits) {
  const PermGroup group = tp_automorphisms(f, limits);
  return k_transitive(group, f.count, k);
}

}  // namespace etf
