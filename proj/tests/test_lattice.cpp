#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fareylab/farey.hpp"
#include "fareylab/lattice.hpp"
#include "test_util.hpp"

using namespace fareylab;

namespace {
ConvexPolygon axis_box(std::int64_t x0, std::int64_t y0, std::int64_t x1,
                       std::int64_t y1) {
  std::vector<ExactPoint> verts = {{Rational(x0), Rational(y0)},
                                   {Rational(x1), Rational(y0)},
                                   {Rational(x1), Rational(y1)},
                                   {Rational(x0), Rational(y1)}};
  std::vector<HalfPlane> planes = {
      {Rational(1), Rational(0), Rational(-x0), false},
      {Rational(-1), Rational(0), Rational(x1), false},
      {Rational(0), Rational(1), Rational(-y0), false},
      {Rational(0), Rational(-1), Rational(y1), false}};
  return ConvexPolygon(verts, planes);
}
}  // namespace

TEST_CASE("residue pair sets") {
  const ResiduePairSet all1 = coprime_pairs(1);
  CHECK(all1.size() == 1);
  CHECK(all1.contains(17, -5));

  const ResiduePairSet c6 = coprime_pairs(6);
  CHECK(c6.size() == 4);  // phi(6)^2
  CHECK(c6.contains(1, 5));
  CHECK(!c6.contains(2, 1));
  CHECK(c6.is_product());

  ResiduePairSet odd_even{2, {{1, 0}}};
  CHECK(odd_even.contains(3, 4));
  CHECK(!odd_even.contains(4, 3));

  ResiduePairSet diag{3, {{1, 1}, {2, 2}}};
  CHECK(!diag.is_product());
}

TEST_CASE("visible_count hand value") {
  // [1,4]^2, d = 2, S = {(1, 0)}: odd x, even y, coprime:
  // (1,2), (1,4), (3,2), (3,4).
  CHECK(visible_count(axis_box(1, 1, 4, 4), ResiduePairSet{2, {{1, 0}}}) == 4);
  CHECK(visible_count(axis_box(1, 1, 4, 4), ResiduePairSet{2, {}}) == 0);
}

TEST_CASE("consecutive-denominator pairs of F_Q fill the scaled triangle") {
  for (std::int64_t Q : {10, 50, 137}) {
    const ConvexPolygon QT = farey_triangle().scaled(Q);
    CHECK(visible_count(QT, coprime_pairs(1)) == totient_sum(Q));
  }
}

TEST_CASE("strictness changes the count only on the boundary") {
  // Box [0,6]^2 closed vs the same box with x <= 6 strict.
  const ConvexPolygon closed = axis_box(0, 0, 6, 6);
  std::vector<HalfPlane> planes = closed.planes();
  planes[1].strict = true;  // -x + 6 > 0
  const ConvexPolygon open_right(closed.vertices(), planes);
  std::int64_t boundary = 0;
  for (std::int64_t y = 0; y <= 6; ++y)
    if (std::gcd(std::int64_t{6}, y) == 1) ++boundary;
  CHECK(visible_count(closed, coprime_pairs(1)) -
            visible_count(open_right, coprime_pairs(1)) ==
        boundary);
}

TEST_CASE("visible_count agrees with the naive scan on random polygons") {
  std::mt19937 rng(2026);
  int nonempty = 0;
  while (nonempty < 25) {
    const ConvexPolygon poly = testutil::random_convex_polygon(rng, 100);
    if (poly.empty()) continue;
    ++nonempty;
    for (std::int64_t d : {1, 2, 4, 6}) {
      const ResiduePairSet S = coprime_pairs(d);
      CHECK(visible_count(poly, S) == testutil::naive_visible_count(poly, S));
    }
    // Also a non-product set.
    const ResiduePairSet mixed{4, {{1, 0}, {3, 2}, {1, 1}}};
    CHECK(visible_count(poly, mixed) == testutil::naive_visible_count(poly, mixed));
  }
}

TEST_CASE("euler factor and main term") {
  CHECK(euler_factor(1) == Rational(1));
  CHECK(euler_factor(2) == Rational(4, 3));
  CHECK(euler_factor(6) == Rational(4, 3) * Rational(9, 8));
  CHECK(euler_factor(12) == euler_factor(6));  // same prime support

  // d = 1: area * 6/pi^2.
  const double m = main_term(axis_box(0, 0, 10, 10), coprime_pairs(1));
  CHECK(m == doctest::Approx(600.0 / (M_PI * M_PI)).epsilon(1e-12));

  // Exact factor is rational and scales linearly in |S|.
  const Rational f1 = main_term_exact_factor(Rational(1, 2), coprime_pairs(2));
  CHECK(f1 == Rational(1, 2) * Rational(1, 4) * Rational(4, 3));
}

TEST_CASE("main term approximates the count to a few percent at Q = 600") {
  const std::int64_t Q = 600;
  for (std::int64_t d : {1, 2, 6}) {
    const ResiduePairSet S = coprime_pairs(d);
    const ConvexPolygon box = axis_box(0, 0, 1, 1).scaled(Q);
    const double predicted = main_term(box, S) ;
    const auto exact = static_cast<double>(visible_count(box, S));
    CAPTURE(d);
    CHECK(std::abs(exact - predicted) / predicted < 0.02);
  }
}

TEST_CASE("residual sweep emits bounded normalized residuals") {
  const std::vector<ConvexPolygon> shapes = {farey_triangle(), axis_box(0, 0, 1, 1)};
  const auto rows = lemma2_residual_sweep(shapes, coprime_pairs(2),
                                          {50, 100, 200, 400});
  REQUIRE(rows.size() == 8);
  for (const auto& r : rows) {
    CHECK(r.exact > 0);
    CHECK(r.normalized_residual >= 0);
    CHECK(r.normalized_residual < 10.0);
    CHECK(std::abs(r.residual - (r.exact - r.main)) < 1e-9);
  }
}

TEST_CASE("empty region counts zero") {
  CHECK(visible_count(ConvexPolygon{}, coprime_pairs(2)) == 0);
}
