#include "etf/roux.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace etf {
namespace {

void require_normalized(const SignatureMatrix& s, double tol) {
  if (!s.normalized) {
    throw Error(ErrorCode::kNotNormalized, "roux detector expects a normalized signature");
  }
  const Eigen::Index n = s.entries.rows();
  if (s.entries.backend() == Backend::kExact) {
    const MatrixXcy& m = s.entries.exact();
    const Cyclotomic one(1);
    for (Eigen::Index j = 1; j < n; ++j) {
      if (m(0, j) != one || m(j, 0) != one) {
        throw Error(ErrorCode::kNotNormalized, "first row/column is not all ones");
      }
    }
  } else {
    const MatrixXc& m = s.entries.floating();
    for (Eigen::Index j = 1; j < n; ++j) {
      if (std::abs(m(0, j) - Complex(1.0, 0.0)) > tol ||
          std::abs(m(j, 0) - Complex(1.0, 0.0)) > tol) {
        throw Error(ErrorCode::kNotNormalized, "first row/column is not all ones");
      }
    }
  }
}

// minimal t <= r_max with z^t == 1, or nullopt
std::optional<long> root_order_exact(const Cyclotomic& z, long r_max) {
  Cyclotomic w = z;
  const Cyclotomic one(1);
  for (long t = 1; t <= r_max; ++t) {
    if (w == one) return t;
    w *= z;
  }
  return std::nullopt;
}

std::optional<long> root_order_float(Complex z, long r_max, double tol) {
  if (std::abs(std::abs(z) - 1.0) > tol) return std::nullopt;
  Complex w = z;
  for (long t = 1; t <= r_max; ++t) {
    if (std::abs(w - Complex(1.0, 0.0)) <= tol) return t;
    w *= z;
  }
  return std::nullopt;
}

std::optional<long> common_root_order(const SignatureMatrix& s, long r_max, double tol) {
  long combined = 1;
  const Eigen::Index n = s.entries.rows();
  if (s.entries.backend() == Backend::kExact) {
    const MatrixXcy& m = s.entries.exact();
    std::vector<Cyclotomic> seen;
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) {
        if (r == c) continue;
        const Cyclotomic& z = m(r, c);
        if (std::find(seen.begin(), seen.end(), z) != seen.end()) continue;
        seen.push_back(z);
        const auto order = root_order_exact(z, r_max);
        if (!order) return std::nullopt;
        combined = std::lcm(combined, *order);
        if (combined > r_max) return std::nullopt;
      }
    }
  } else {
    const MatrixXc& m = s.entries.floating();
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) {
        if (r == c) continue;
        const auto order = root_order_float(m(r, c), r_max, tol);
        if (!order) return std::nullopt;
        combined = std::lcm(combined, *order);
        if (combined > r_max) return std::nullopt;
      }
    }
  }
  return combined;
}

}  // namespace

RouxReport roux_detect(const SignatureMatrix& s, const RouxOptions& options) {
  require_normalized(s, std::max(options.tol, 1e-8));

  RouxReport report;
  long r_max = 360;
  if (options.r_max) {
    r_max = *options.r_max;
  } else if (s.shape) {
    r_max = 2 * s.shape->lcm();
  }

  const auto order = common_root_order(s, r_max, options.tol);
  if (!order) {
    report.is_roux = false;
    report.failure_reason =
        "RootOrderNotFound: some entry is not a root of unity of order <= " +
        std::to_string(r_max);
    return report;
  }
  report.root_order = *order;

  // Hadamard powers are periodic with period root_order, so N = 1..r is a
  // complete check; N = r is the all-ones off-diagonal sanity row.
  bool all_pass = true;
  for (long n_pow = 1; n_pow <= *order; ++n_pow) {
    const CMatrix powered = hadamard_power(s.entries, n_pow);
    const SpectrumReport spectrum = two_eigenvalue_test(powered, options.tol);
    PowerRow row;
    row.power = n_pow;
    row.distinct_eigenvalues = spectrum.distinct_count;
    row.pass = spectrum.distinct_count == 2;
    all_pass = all_pass && row.pass;
    report.per_power.push_back(row);
  }
  report.is_roux = all_pass;
  if (!all_pass) report.failure_reason = "some Hadamard power has more than two eigenvalues";
  return report;
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

bool check_power_pattern_exact(const MatrixXcy& powered, const SignatureMatrix& expected_form,
                               long n_pow, bool p_divides, std::string* note) {
  const Eigen::Index n = powered.rows();
  const Cyclotomic one(1);
  const Cyclotomic sign((n_pow % 2 == 0) ? 1 : -1);  // (-1)^N
  const MatrixXcy* closed = p_divides ? nullptr : &expected_form.entries.exact();
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      Cyclotomic want(0);
      if (r == c) {
        want = Cyclotomic(0);
      } else if (r == 0 || c == 0) {
        want = one;
      } else if (p_divides) {
        want = sign;
      } else {
        // (-zeta^e)^N = (-1)^N zeta^{Ne}; the closed form built from zeta^N
        // carries a fixed leading -1, so even powers flip its interior sign.
        want = (n_pow % 2 == 0) ? -(*closed)(r, c) : (*closed)(r, c);
      }
      if (powered(r, c) != want) {
        std::ostringstream os;
        os << "power " << n_pow << ": entry (" << r << "," << c << ") deviates from pattern";
        *note = os.str();
        return false;
      }
    }
  }
  return true;
}

bool check_power_pattern_float(const MatrixXc& powered, const SignatureMatrix& expected_form,
                               long n_pow, bool p_divides, std::string* note) {
  const Eigen::Index n = powered.rows();
  const double tol = 1e-10;
  MatrixXc closed;
  if (!p_divides) closed = expected_form.entries.to_floating();
  const Complex sign((n_pow % 2 == 0) ? 1.0 : -1.0, 0.0);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      Complex want;
      if (r == c) {
        want = Complex(0.0, 0.0);
      } else if (r == 0 || c == 0) {
        want = Complex(1.0, 0.0);
      } else if (p_divides) {
        want = sign;
      } else {
        want = (n_pow % 2 == 0) ? -closed(r, c) : closed(r, c);
      }
      if (std::abs(powered(r, c) - want) > tol) {
        std::ostringstream os;
        os << "power " << n_pow << ": entry (" << r << "," << c << ") deviates from pattern";
        *note = os.str();
        return false;
      }
    }
  }
  return true;
}

}  // namespace

RouxHarnessReport roux_theorem_harness(long p, int s, Backend backend, long max_count) {
  if (!is_prime(p) || p < 3) {
    throw Error(ErrorCode::kInvalidArgument, "p must be an odd prime");
  }
  if (s < 0) {
    throw Error(ErrorCode::kInvalidArgument, "s must be nonnegative");
  }
  const GroupShape shape(std::vector<long>(static_cast<size_t>(s) + 1, p));
  if (shape.etf_count() > max_count) {
    throw Error(ErrorCode::kSizeBudget, "G(p,...,p) exceeds the size budget");
  }

  SignatureMatrix nsm = closed_form_normalized(shape);
  if (backend == Backend::kFloat) {
    nsm.entries = CMatrix(nsm.entries.to_floating());
  }

  RouxHarnessReport report;
  RouxOptions options;
  options.r_max = 2 * p;
  report.detector = roux_detect(nsm, options);

  report.patterns_ok = true;
  for (long n_pow = 1; n_pow <= 2 * p; ++n_pow) {
    const bool p_divides = (n_pow % p == 0);
    SignatureMatrix expected;
    if (!p_divides) expected = closed_form_normalized(shape, n_pow % p);
    std::string note;
    bool ok = false;
    if (backend == Backend::kExact) {
      const MatrixXcy powered = hadamard_power(nsm.entries.exact(), n_pow);
      ok = check_power_pattern_exact(powered, expected, n_pow, p_divides, &note);
    } else {
      const MatrixXc powered = hadamard_power(nsm.entries.floating(), n_pow);
      if (!p_divides) expected.entries = CMatrix(expected.entries.to_floating());
      ok = check_power_pattern_float(powered, expected, n_pow, p_divides, &note);
    }
    if (!ok) {
      report.patterns_ok = false;
      report.notes.push_back(note);
    }
  }
  return report;
}

}  // namespace etf
