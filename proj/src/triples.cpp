#include "etf/triples.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace etf {
namespace {

constexpr double kZeroMagnitude = 1e-12;

EtfVerdict require_etf(const Frame& f, const char* who) {
  const EtfVerdict verdict = verify_etf(f);
  if (!verdict.is_etf()) {
    throw Error(ErrorCode::kNotEtf, std::string(who) + " requires an ETF input");
  }
  return verdict;
}

}  // namespace

TripleProductTensor TripleProductTensor::from_frame(const Frame& f) {
  const Frame unit = unit_normalized(f);
  MatrixXc g = gram(unit);
  const int n = unit.count;
  double mag_sum = 0.0;
  long pairs = 0;
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      mag_sum += std::abs(g(r, c));
      ++pairs;
    }
  }
  const double mean_mag = pairs > 0 ? mag_sum / static_cast<double>(pairs) : 0.0;
  return TripleProductTensor(n, std::move(g), mean_mag * mean_mag * mean_mag);
}

Complex TripleProductTensor::phase(int j, int k, int l) const {
  const Complex value = tp(j, k, l);
  const double mag = std::abs(value);
  if (mag < kZeroMagnitude) {
    throw Error(ErrorCode::kZeroTripleProduct, "triple product vanishes");
  }
  return value / mag;
}

TripleProductTensor triple_products(const Frame& f) {
  return TripleProductTensor::from_frame(f);
}

CheckReport sum_identity_check(const Frame& f, double tol) {
  const EtfVerdict verdict = verify_etf(f);
  if (!verdict.is_tight) {
    throw Error(ErrorCode::kNotTight, "sum identity holds for tight frames only");
  }
  const TripleProductTensor t = triple_products(f);
  const int n = t.count();
  const Frame unit = unit_normalized(f);
  const double ratio = static_cast<double>(n) / static_cast<double>(unit.dim);

  double max_violation = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      Complex sum(0.0, 0.0);
      for (int l = 0; l < n; ++l) sum += t.tp(j, k, l);
      const double target = ratio * std::norm(t.unit_gram()(k, j));
      max_violation = std::max(max_violation, std::abs(sum - target));
    }
  }
  CheckReport report;
  report.name = "sum-identity";
  report.max_violation = max_violation;
  report.pass = max_violation <= tol;
  report.metrics["pairs"] = static_cast<double>(n) * (n - 1);
  report.details = "sum_l TP(j,k,l) vs (n/d)|<j,k>|^2 over all ordered pairs";
  return report;
}

CheckReport cocycle_identity_check(const Frame& f, const CocycleOptions& options) {
  const TripleProductTensor t = triple_products(f);
  const int n = t.count();
  CheckReport report;
  report.name = "cocycle-identity";

  long checked = 0;
  long zero_skipped = 0;
  double max_violation = 0.0;

  long zero_triples = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (j == k || j == l || k == l) continue;
        if (std::abs(t.tp(j, k, l)) < kZeroMagnitude) ++zero_triples;
      }

  const auto eval = [&](int j, int k, int l, int m) {
    const Complex tjkl = t.tp(j, k, l);
    const Complex tmjk = t.tp(m, j, k);
    const Complex tmkl = t.tp(m, k, l);
    const Complex tmlj = t.tp(m, l, j);
    if (std::abs(tjkl) < kZeroMagnitude || std::abs(tmjk) < kZeroMagnitude ||
        std::abs(tmkl) < kZeroMagnitude || std::abs(tmlj) < kZeroMagnitude) {
      ++zero_skipped;
      return;
    }
    const Complex lhs = tjkl / std::abs(tjkl);
    const Complex rhs =
        (tmjk / std::abs(tmjk)) * (tmkl / std::abs(tmkl)) * (tmlj / std::abs(tmlj));
    max_violation = std::max(max_violation, std::abs(lhs - rhs));
    ++checked;
  };

  if (n <= 12) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            if (j == k || j == l || j == m || k == l || k == m || l == m) continue;
            eval(j, k, l, m);
          }
    report.details = "exhaustive over ordered distinct 4-tuples";
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long s = 0; s < options.samples; ++s) {
      int j = pick(rng), k = pick(rng), l = pick(rng), m = pick(rng);
      if (j == k || j == l || j == m || k == l || k == m || l == m) {
        --s;  // resample; tuple must have distinct entries
        continue;
      }
      eval(j, k, l, m);
    }
    report.details = "uniform seeded samples of distinct 4-tuples";
    report.metrics["seed"] = static_cast<double>(options.seed);
  }

  report.max_violation = max_violation;
  report.pass = max_violation <= options.tol;
  report.metrics["tuples_checked"] = static_cast<double>(checked);
  if (zero_skipped > 0) report.metrics["tuples_skipped"] = static_cast<double>(zero_skipped);
  if (zero_triples > 0) {
    report.metrics["zero_triple_products"] = static_cast<double>(zero_triples);
    report.details += "; ZeroTripleProduct: " + std::to_string(zero_triples) +
                      " distinct triples vanish (identity undefined there)";
  }
  return report;
}

bool simplex_test(const Frame& f, double tol) {
  const TripleProductTensor t = triple_products(f);
  const int n = t.count();
  if (n < 3) return true;  // no distinct triples; condition holds vacuously
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      for (int l = k + 1; l < n; ++l) {
        // conjugate/cyclic symmetry: checking one ordering of {j,k,l} plus
        // realness covers all six
        const Complex value = t.tp(j, k, l);
        if (std::abs(value.imag()) > tol) return false;
        if (value.real() > -tol) return false;
      }
  return true;
}

CheckReport triple_covariance_obstruction(const Frame& f, double tol) {
  const EtfVerdict verdict = require_etf(f, "triple_covariance_obstruction");
  const TripleProductTensor t = triple_products(f);
  const int n = t.count();
  const Frame unit = unit_normalized(f);
  const int d = unit.dim;

  CheckReport report;
  report.name = "triple-covariance-obstruction";
  if (n < 3) {
    report.pass = true;
    report.details = "fewer than three vectors; no distinct triples";
    return report;
  }

  const Complex reference = t.tp(0, 1, 2);
  double max_deviation = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (j == k || j == l || k == l) continue;
        max_deviation = std::max(max_deviation, std::abs(t.tp(j, k, l) - reference));
      }

  const bool all_equal = max_deviation <= tol;
  const bool expected_equal = (n <= d + 1) || verdict.coherence <= tol || d == 1;
  report.pass = all_equal == expected_equal;
  report.max_violation = max_deviation;
  report.metrics["all_equal"] = all_equal ? 1.0 : 0.0;
  report.metrics["expected_equal"] = expected_equal ? 1.0 : 0.0;
  std::ostringstream os;
  os << (all_equal ? "all triple products coincide" : "triple products differ")
     << "; theorem expects " << (expected_equal ? "equality" : "inequality")
     << " for n=" << n << ", d=" << d;
  report.details = os.str();
  return report;
}

CheckReport two_transitive_phase_test(const Frame& f, double tol) {
  const EtfVerdict verdict = require_etf(f, "two_transitive_phase_test");
  const Frame unit = unit_normalized(f);
  if (unit.count <= unit.dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "phase test requires n > d (redundant ETF)");
  }
  (void)verdict;
  const TripleProductTensor t = triple_products(f);
  const int n = t.count();

  CheckReport report;
  report.name = "two-transitive-phase";
  double max_violation = 0.0;
  std::map<long, long> order_histogram;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (j == k || j == l || k == l) continue;
        const Complex z = t.phase(j, k, l);
        Complex w = z;
        long minimal = 0;
        for (long e = 1; e <= 2 * n; ++e) {
          if (std::abs(w - Complex(1.0, 0.0)) <= tol && minimal == 0) minimal = e;
          if (e < 2 * n) w *= z;
        }
        max_violation = std::max(max_violation, std::abs(cpow_int(z, 2 * n) - Complex(1.0, 0.0)));
        ++order_histogram[minimal == 0 ? -1 : minimal];
      }

  report.max_violation = max_violation;
  report.pass = max_violation <= tol;
  std::ostringstream os;
  os << "minimal phase orders {";
  bool first = true;
  for (const auto& [order, count] : order_histogram) {
    if (!first) os << ", ";
    if (order < 0) {
      os << "none<=2n: " << count;
    } else {
      os << order << ": " << count;
    }
    first = false;
    report.metrics["order_" + (order < 0 ? std::string("none") : std::to_string(order))] =
        static_cast<double>(count);
  }
  os << "}";
  report.details = os.str();
  return report;
}

}  // namespace etf
