#ifndef ETF_ROUX_HPP
#define ETF_ROUX_HPP

#include "etf/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace etf {

struct PowerRow {
  long power = 0;
  int distinct_eigenvalues = 0;
  bool pass = false;
};

/// Outcome of the roux-lines detector: root-of-unity entries plus exactly two
/// eigenvalues in every Hadamard power.
struct RouxReport {
  bool is_roux = false;
  std::optional<long> root_order;
  std::vector<PowerRow> per_power;
  std::optional<std::string> failure_reason;
};

struct RouxOptions {
  std::optional<long> r_max;  // default: 2*lcm(shape) when known, 360 otherwise
  double tol = 1e-8;
};

RouxReport roux_detect(const SignatureMatrix& normalized_signature,
                       const RouxOptions& options = {});

/// Detector run on the closed-form normalized signature of G(p,...,p) plus
/// the entrywise pattern checks: powers coprime to p reproduce a closed form
/// built from zeta_p^N (up to the (-1)^N parity of the leading sign), and
/// powers divisible by p flatten to (-1)^N off the first row and column.
struct RouxHarnessReport {
  RouxReport detector;
  bool patterns_ok = false;
  std::vector<std::string> notes;

  bool pass() const { return detector.is_roux && patterns_ok; }
};

RouxHarnessReport roux_theorem_harness(long p, int s, Backend backend,
                                       long max_count = 10000);

}  // namespace etf

#endif  // ETF_ROUX_HPP
