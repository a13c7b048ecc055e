#ifndef ETF_FRAME_HPP
#define ETF_FRAME_HPP

#include "etf/numeric.hpp"

#include <string>
#include <vector>

namespace etf {

enum class NormConvention { kUnit, kRaw };

/// A finite frame for C^d: columns of `vectors` are the frame vectors.
struct Frame {
  int dim = 0;
  int count = 0;
  MatrixXc vectors;  // dim x count
  std::vector<std::string> labels;
  NormConvention norm_convention = NormConvention::kUnit;
};

// Validates shape, labels and the norm convention (unit frames must have
// unit columns within 1e-12; no zero columns either way).
Frame make_frame(MatrixXc vectors, std::vector<std::string> labels,
                 NormConvention convention);

Frame unit_normalized(const Frame& f);

// Gram matrix G(j,k) = <phi_k, phi_j>, with <x,y> linear in x and
// conjugate-linear in y; equals Phi^* Phi.
MatrixXc gram(const Frame& f);

struct EtfVerdict {
  bool is_tight = false;
  bool is_equal_norm = false;
  bool is_equiangular = false;
  double coherence = 0.0;
  double welch_bound = 0.0;
  bool saturates_welch = false;
  bool gerzon_ok = true;
  double tolerance = 0.0;
  bool degenerate = false;  // n < 2: equiangularity holds vacuously

  bool is_etf() const { return is_tight && is_equal_norm && is_equiangular; }
};

double welch_bound(int d, int n);

EtfVerdict verify_etf(const Frame& f, double tol = 1e-9);

Frame onb(int d);

// d+1 unit vectors in C^d with all pairwise inner products equal to -1/d.
Frame simplex(int d);

// Completes the scaled analysis operator of a tight frame to a unitary and
// returns the n vectors the new rows induce in dimension n-d, column
// normalized. Canonical up to a unitary; contracts are on Gram magnitudes.
Frame naimark_complement(const Frame& f);

}  // namespace etf

#endif  // ETF_FRAME_HPP
