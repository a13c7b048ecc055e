#include "etf/triples.hpp"

#include "etf/gabor.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace etf;

namespace {

const GroupShape kZ3({3});

Frame random_unit_frame(int d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  MatrixXc m(d, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < d; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
    m.col(j) /= m.col(j).norm();
  }
  return make_frame(std::move(m), {}, NormConvention::kUnit);
}

// two orthonormal bases glued together: unit-norm tight, not equiangular
Frame two_onb_union(int d) {
  MatrixXc m(d, 2 * d);
  m.leftCols(d) = MatrixXc::Identity(d, d);
  MatrixXc f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r)
      f(r, c) = scale * std::polar(1.0, 2.0 * 3.141592653589793 * r * c / d);
  m.rightCols(d) = f;
  return make_frame(std::move(m), {}, NormConvention::kUnit);
}

}  // namespace

TEST_CASE("triple products of reference frames") {
  SUBCASE("onb(3): all zero") {
    const TripleProductTensor t = triple_products(onb(3));
    CHECK(std::abs(t.tp(0, 1, 2)) == 0.0);
    CHECK(std::abs(t.tp(2, 0, 1)) == 0.0);
  }
  SUBCASE("simplex(2): all -1/8") {
    const TripleProductTensor t = triple_products(simplex(2));
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          if (j == k || j == l || k == l) continue;
          CHECK(std::abs(t.tp(j, k, l) - Complex(-0.125, 0.0)) < 1e-12);
        }
  }
  SUBCASE("G(3): common magnitude 1/8") {
    const TripleProductTensor t = triple_products(gabor_steiner(kZ3));
    for (int j = 0; j < 9; ++j)
      for (int k = 0; k < 9; ++k)
        for (int l = 0; l < 9; ++l) {
          if (j == k || j == l || k == l) continue;
          CHECK(std::abs(t.tp(j, k, l)) == doctest::Approx(0.125).epsilon(1e-12));
        }
    CHECK(t.magnitude_class() == doctest::Approx(0.125).epsilon(1e-10));
  }
}

TEST_CASE("conjugate and cyclic symmetry hold for arbitrary frames") {
  const Frame f = random_unit_frame(4, 7, 0x7777);
  const TripleProductTensor t = triple_products(f);
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 7; ++k)
      for (int l = 0; l < 7; ++l) {
        if (j == k || j == l || k == l) continue;
        CHECK(std::abs(t.tp(j, k, l) - std::conj(t.tp(k, j, l))) < 1e-14);
        CHECK(std::abs(t.tp(j, k, l) - t.tp(k, l, j)) < 1e-14);
      }
}

TEST_CASE("triple products are invariant under unimodular column rephasing") {
  Frame f = unit_normalized(gabor_steiner(kZ3));
  const TripleProductTensor before = triple_products(f);
  f.vectors.col(2) *= std::polar(1.0, 0.7381);
  const TripleProductTensor after = triple_products(f);
  for (int j = 0; j < 9; ++j)
    for (int k = 0; k < 9; ++k)
      for (int l = 0; l < 9; ++l) {
        if (j == k || j == l || k == l) continue;
        CHECK(std::abs(before.tp(j, k, l) - after.tp(j, k, l)) < 1e-13);
      }
}

TEST_CASE("sum identity on tight frames") {
  SUBCASE("G(3): every pair sums to 3/4") {
    const Frame f = gabor_steiner(kZ3);
    const TripleProductTensor t = triple_products(f);
    Complex sum(0, 0);
    for (int l = 0; l < 9; ++l) sum += t.tp(0, 1, l);
    CHECK(std::abs(sum - Complex(0.75, 0.0)) < 1e-10);
    const CheckReport report = sum_identity_check(f, 1e-10);
    CHECK(report.pass);
    CHECK(report.max_violation < 1e-10);
  }
  SUBCASE("simplex(2): every pair sums to 3/8") {
    const Frame f = simplex(2);
    const TripleProductTensor t = triple_products(f);
    Complex sum(0, 0);
    for (int l = 0; l < 3; ++l) sum += t.tp(0, 1, l);
    CHECK(std::abs(sum - Complex(0.375, 0.0)) < 1e-12);
    CHECK(sum_identity_check(f).pass);
  }
  SUBCASE("onb: every pair sums to 0") {
    const Frame f = onb(4);
    const TripleProductTensor t = triple_products(f);
    Complex sum(0, 0);
    for (int l = 0; l < 4; ++l) sum += t.tp(0, 1, l);
    CHECK(std::abs(sum) < 1e-15);
    CHECK(sum_identity_check(f).pass);
  }
  SUBCASE("tight but not equiangular frames satisfy the identity too") {
    const CheckReport report = sum_identity_check(two_onb_union(3), 1e-10);
    CHECK(report.pass);
  }
  SUBCASE("non-tight input is rejected") {
    try {
      (void)sum_identity_check(random_unit_frame(3, 7, 42));
      FAIL("expected NotTight");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotTight);
    }
  }
}

TEST_CASE("cocycle identity") {
  SUBCASE("G(3), exhaustive over all 3024 tuples") {
    const CheckReport report = cocycle_identity_check(gabor_steiner(kZ3));
    CHECK(report.pass);
    CHECK(report.max_violation <= 1e-10);
    CHECK(report.metrics.at("tuples_checked") == doctest::Approx(3024.0));
  }
  SUBCASE("simplex(3): all phases -1") {
    const CheckReport report = cocycle_identity_check(simplex(3));
    CHECK(report.pass);
    const TripleProductTensor t = triple_products(simplex(3));
    CHECK(std::abs(t.phase(0, 1, 2) - Complex(-1, 0)) < 1e-12);
  }
  SUBCASE("onb(3): ZeroTripleProduct reported, not fatal") {
    const CheckReport report = cocycle_identity_check(onb(3));
    CHECK(report.metrics.count("zero_triple_products") == 1);
    CHECK(report.pass);  // vacuous
  }
  SUBCASE("sampled path is seeded and deterministic") {
    const Frame f = gabor_steiner(GroupShape({5}));  // n = 25 > 12
    CocycleOptions options;
    options.samples = 2000;
    const CheckReport a = cocycle_identity_check(f, options);
    const CheckReport b = cocycle_identity_check(f, options);
    CHECK(a.pass);
    CHECK(a.max_violation == b.max_violation);
    CHECK(a.metrics.at("seed") == b.metrics.at("seed"));
  }
}

TEST_CASE("simplex detection") {
  CHECK(simplex_test(simplex(5)));
  CHECK(simplex_test(simplex(2)));
  CHECK_FALSE(simplex_test(gabor_steiner(kZ3)));  // phases include non-real roots
  CHECK_FALSE(simplex_test(onb(3)));              // zero is not negative
}

TEST_CASE("triple covariance obstruction") {
  SUBCASE("simplex(4): all equal to -1/64") {
    const CheckReport report = triple_covariance_obstruction(simplex(4));
    CHECK(report.pass);
    CHECK(report.metrics.at("all_equal") == 1.0);
    const TripleProductTensor t = triple_products(simplex(4));
    CHECK(std::abs(t.tp(0, 1, 2) - Complex(-1.0 / 64.0, 0.0)) < 1e-12);
  }
  SUBCASE("G(3): unequal, consistent with n > d+1") {
    const CheckReport report = triple_covariance_obstruction(gabor_steiner(kZ3));
    CHECK(report.pass);
    CHECK(report.metrics.at("all_equal") == 0.0);
    CHECK(report.metrics.at("expected_equal") == 0.0);
  }
  SUBCASE("onb(5): all equal (all zero)") {
    const CheckReport report = triple_covariance_obstruction(onb(5));
    CHECK(report.pass);
    CHECK(report.metrics.at("all_equal") == 1.0);
  }
  SUBCASE("non-ETF input is rejected") {
    try {
      (void)triple_covariance_obstruction(random_unit_frame(3, 9, 7));
      FAIL("expected NotEtf");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotEtf);
    }
  }
}

TEST_CASE("two-transitive phase test") {
  SUBCASE("G(3): all phases are 18th roots of unity") {
    const CheckReport report = two_transitive_phase_test(gabor_steiner(kZ3));
    CHECK(report.pass);
    CHECK(report.max_violation <= 1e-9);
  }
  SUBCASE("simplex(3): phases -1, order 2 divides 2n = 8") {
    const CheckReport report = two_transitive_phase_test(simplex(3));
    CHECK(report.pass);
    CHECK(report.metrics.count("order_2") == 1);
  }
  SUBCASE("random non-ETF is rejected") {
    try {
      (void)two_transitive_phase_test(random_unit_frame(3, 9, 11));
      FAIL("expected NotEtf");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotEtf);
    }
  }
}
