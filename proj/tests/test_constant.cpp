#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fareylab/constant.hpp"
#include "fareylab/farey.hpp"
#include "fareylab/index.hpp"

using namespace fareylab;

TEST_CASE("max_gap_run stays under the cubic bound") {
  for (std::int64_t Q : {10, 100, 400}) {
    for (std::int64_t d : {2, 3, 4, 6, 10, 12}) {
      const RunLengthReport r = max_gap_run(Q, d);
      CAPTURE(Q);
      CAPTURE(d);
      CHECK(r.bound == 4 * d * d * d);
      CHECK(r.max_run < r.bound);
    }
    // d = 2: odd denominators are never adjacent in F_Q for Q >= 2.
    CHECK(max_gap_run(Q, 2).max_run == 1);
  }
  // Prime d skips exactly runs of multiples; d = 3 also has short runs.
  CHECK(max_gap_run(200, 3).max_run == 1);
  CHECK(max_gap_run(200, 6).max_run >= 3);
}

TEST_CASE("admissible tuples: small closed forms") {
  // ell = 1: empty tuple iff k = 1.
  CHECK(admissible_tuples(1, 1, 10).tuples ==
        std::vector<std::vector<std::int64_t>>{{}});
  CHECK(admissible_tuples(1, 2, 10).tuples.empty());
  // ell = 2: single entry equal to k.
  CHECK(admissible_tuples(2, 3, 10).tuples ==
        std::vector<std::vector<std::int64_t>>{{3}});
  // ell = 3: value x1 x2 - 1 = k with positive-area pullback.
  const auto t3 = admissible_tuples(3, 4, 10);
  const std::set<std::vector<std::int64_t>> got(t3.tuples.begin(), t3.tuples.end());
  CHECK(got.count({1, 5}) == 1);
  CHECK(got.count({5, 1}) == 1);
  CHECK(got.count({1, 1}) == 0);  // value 0, not 4
  for (const auto& xs : t3.tuples)
    CHECK(xs[0] * xs[1] - 1 == 4);
}

TEST_CASE("admissible tuples report boundary contact") {
  CHECK(!admissible_tuples(2, 1, 5).boundary_touched);
  CHECK(admissible_tuples(2, 5, 5).boundary_touched);
}

TEST_CASE("every tuple value matches the identity evaluator") {
  for (std::int64_t ell = 2; ell <= 5; ++ell)
    for (std::int64_t k = 1; k <= 4; ++k)
      for (const auto& xs : admissible_tuples(ell, k, 9).tuples) {
        CHECK(index_from_two_index_tuple(xs) == k);
        CHECK(pullback_region(xs).area() > 0);
      }
}

TEST_CASE("residue pair recurrences") {
  // Empty tuple: both coprime.
  CHECK(residue_pairs({}, 2).pairs ==
        std::set<std::pair<std::int64_t, std::int64_t>>{{1, 1}});
  // xs = (2), d = 4: a odd, middle b even, endpoint 2b - a automatically odd.
  CHECK(residue_pairs({2}, 4).pairs ==
        std::set<std::pair<std::int64_t, std::int64_t>>{
            {1, 0}, {1, 2}, {3, 0}, {3, 2}});
  // xs = (1), d = 2: r2 = b - a even with a odd makes b odd; but the middle
  // (here r1 = b) must be even and the endpoint r2 coprime: b even, a odd,
  // r2 = b - a odd: all (1, 0) mod 2.
  CHECK(residue_pairs({1}, 2).pairs ==
        std::set<std::pair<std::int64_t, std::int64_t>>{{1, 0}});
  // d = 1: everything degenerates to the single pair for ell = 1 and to
  // nothing for longer tuples (no residue can be non-coprime to 1).
  CHECK(residue_pairs({}, 1).size() == 1);
  CHECK(residue_pairs({3}, 1).size() == 0);

  // Definition check against a direct scan for a non-trivial case.
  const std::vector<std::int64_t> xs = {2, 3};
  const std::int64_t d = 6;
  const ResiduePairSet S = residue_pairs(xs, d);
  for (std::int64_t a = 0; a < d; ++a)
    for (std::int64_t b = 0; b < d; ++b) {
      std::int64_t r0 = a, r1 = b;
      bool ok = std::gcd(a, d) == 1;
      for (const std::int64_t x : xs) {
        ok = ok && std::gcd(r1, d) > 1;
        const std::int64_t r2 = (((x * r1 - r0) % d) + d) % d;
        r0 = r1;
        r1 = r2;
      }
      ok = ok && std::gcd(r1, d) == 1;
      CHECK(S.contains(a, b) == ok);
    }
}

TEST_CASE("constant: exact baselines") {
  const ConstantReport c11 = compute_constant(1, 1);
  CHECK(c11.exact_factor == Rational(3));
  CHECK(c11.c_value == doctest::Approx(3.0 / (M_PI * M_PI)).epsilon(1e-14));
  CHECK(c11.breakdown.size() == 1);
  CHECK(c11.breakdown[0].ell == 1);

  const ConstantReport c21 = compute_constant(2, 1);
  CHECK(c21.exact_factor == Rational(4, 3));

  const ConstantReport c41 = compute_constant(4, 1);
  CHECK(c41.exact_factor == Rational(4, 3));

  const ConstantReport c61 = compute_constant(6, 1);
  CHECK(c61.exact_factor == Rational(11, 15));

  // k > 1 with d = 1 is impossible: gaps in the full sequence are always 1.
  CHECK(compute_constant(1, 3).exact_factor == Rational(0));
}

TEST_CASE("constant report is internally consistent") {
  const ConstantReport r = compute_constant(6, 2);
  double sum = 0;
  Rational exact = 0;
  for (const TupleRecord& rec : r.breakdown) {
    CHECK(rec.area > 0);
    CHECK(rec.pair_set.size() > 0);
    sum += rec.contribution;
    exact += Rational(rec.pair_set.size()) * rec.area;
  }
  exact = exact * 6 / (r.d * r.d) * euler_factor(r.d);
  CHECK(exact == r.exact_factor);
  CHECK(sum == doctest::Approx(r.c_value).epsilon(1e-12));
  CHECK(!r.k_max_warning);
  CHECK(r.L_used <= 4 * 6 * 6 * 6);
}

TEST_CASE("forcing a too-small K_max raises the warning flag") {
  ConstantOptions opts;
  opts.K_max = 3;
  const ConstantReport r = compute_constant(2, 3, opts);
  CHECK(r.K_max_used == 3);
  CHECK(r.k_max_warning);
}

TEST_CASE("convergence report approaches the constant") {
  const auto rows = convergence_report(2, 1, {200, 400, 800}, 2);
  REQUIRE(rows.size() == 3);
  const double c = compute_constant(2, 1).c_value;
  for (const auto& r : rows) {
    CHECK(r.c == doctest::Approx(c).epsilon(1e-12));
    CHECK(r.density == doctest::Approx(c).epsilon(0.15));
    CHECK(std::abs(r.residual - (r.count - c * r.Q * r.Q)) < 1e-6);
  }
  // Empirical counts match the histogram definition.
  const GapHistogram h = gap_numerator_counts(400, 2);
  CHECK(rows[1].count == h.counts.at(1));
}

TEST_CASE("cross-validation covers everything observed at modest orders") {
  for (std::int64_t d : {2, 3, 6}) {
    for (std::int64_t k : {1, 2}) {
      const CrossValidationReport r = tuple_cross_validation(d, k, 300);
      CAPTURE(d);
      CAPTURE(k);
      CHECK(r.covered());
      const GapHistogram h = gap_numerator_counts(300, d);
      const auto it = h.counts.find(k);
      const std::int64_t expected = it == h.counts.end() ? 0 : it->second;
      CHECK(r.gaps_with_value_k == expected);
      std::int64_t classified = 0;
      for (const auto& t : r.per_tuple) classified += t.observed;
      CHECK(classified == r.gaps_with_value_k);
    }
  }
}
