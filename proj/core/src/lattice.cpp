#include "fareylab/lattice.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fareylab {

bool ResiduePairSet::is_product() const {
  std::set<std::int64_t> as, bs;
  for (const auto& [a, b] : pairs) {
    as.insert(a);
    bs.insert(b);
  }
  return pairs.size() == as.size() * bs.size();
}

ResiduePairSet coprime_pairs(std::int64_t d) {
  ResiduePairSet s;
  s.d = d;
  for (std::int64_t a = 0; a < d; ++a) {
    if (std::gcd(a == 0 ? d : a, d) != 1) continue;
    for (std::int64_t b = 0; b < d; ++b)
      if (std::gcd(b == 0 ? d : b, d) == 1) s.pairs.insert({a, b});
  }
  return s;
}

namespace {

// Integer x-range of a polygon row at height y, honoring strictness.
// Returns false when the row is excluded entirely.
bool row_range(const std::vector<HalfPlane>& planes, std::int64_t y,
               std::int64_t lo_hint, std::int64_t hi_hint, std::int64_t* lo,
               std::int64_t* hi) {
  *lo = lo_hint;
  *hi = hi_hint;
  const Rational ry(y);
  for (const auto& hp : planes) {
    const Rational rhs = -(hp.b * ry + hp.c);
    if (hp.a == 0) {
      const Rational v = hp.b * ry + hp.c;
      if (hp.strict ? v <= 0 : v < 0) return false;
      continue;
    }
    const Rational bound = rhs / hp.a;
    if (hp.a > 0) {
      // x >= bound (or > bound when strict)
      const std::int64_t b = hp.strict ? to_int64(rational_floor(bound)) + 1
                                       : to_int64(rational_ceil(bound));
      if (b > *lo) *lo = b;
    } else {
      const std::int64_t b = hp.strict ? to_int64(rational_ceil(bound)) - 1
                                       : to_int64(rational_floor(bound));
      if (b < *hi) *hi = b;
    }
  }
  return *lo <= *hi;
}

}  // namespace

std::int64_t visible_count(const ConvexPolygon& scaled_region,
                           const ResiduePairSet& S) {
  if (scaled_region.empty() || S.pairs.empty()) return 0;
  Rational ymin = scaled_region.vertices()[0].y;
  Rational ymax = ymin;
  Rational xmin = scaled_region.vertices()[0].x;
  Rational xmax = xmin;
  for (const auto& v : scaled_region.vertices()) {
    if (v.y < ymin) ymin = v.y;
    if (v.y > ymax) ymax = v.y;
    if (v.x < xmin) xmin = v.x;
    if (v.x > xmax) xmax = v.x;
  }
  const std::int64_t y0 = to_int64(rational_ceil(ymin));
  const std::int64_t y1 = to_int64(rational_floor(ymax));
  const std::int64_t x0 = to_int64(rational_ceil(xmin));
  const std::int64_t x1 = to_int64(rational_floor(xmax));
  const std::int64_t d = S.d;

  std::int64_t count = 0;
  for (std::int64_t y = y0; y <= y1; ++y) {
    std::int64_t lo, hi;
    if (!row_range(scaled_region.planes(), y, x0, x1, &lo, &hi)) continue;
    const std::int64_t yr = ((y % d) + d) % d;
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (std::gcd(x, y) != 1) continue;
      if (S.pairs.count({((x % d) + d) % d, yr})) ++count;
    }
  }
  return count;
}

Rational euler_factor(std::int64_t d) {
  Rational f = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      f *= Rational(p * p, p * p - 1);
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) f *= Rational(d * d, d * d - 1);
  return f;
}

Rational main_term_exact_factor(const Rational& area, const ResiduePairSet& S) {
  return area * S.size() / (Rational(S.d) * S.d) * euler_factor(S.d);
}

double main_term(const ConvexPolygon& region, const ResiduePairSet& S) {
  static const double pi = 3.14159265358979323846;
  const Rational exact = main_term_exact_factor(region.area(), S);
  return 6.0 / (pi * pi) * exact.convert_to<double>();
}

std::vector<CountReport> lemma2_residual_sweep(
    const std::vector<ConvexPolygon>& shapes, const ResiduePairSet& S,
    const std::vector<std::int64_t>& Q_list) {
  std::vector<CountReport> reports;
  for (const auto& shape : shapes) {
    for (const std::int64_t Q : Q_list) {
      const ConvexPolygon scaled = shape.scaled(Q);
      CountReport r;
      r.Q = Q;
      r.d = S.d;
      r.exact = visible_count(scaled, S);
      r.main = main_term(scaled, S);
      r.area = scaled.area();
      r.perimeter = scaled.perimeter_l1();
      r.residual = static_cast<double>(r.exact) - r.main;
      const double denom = r.area.convert_to<double>() / static_cast<double>(Q) +
                           r.perimeter.convert_to<double>() *
                               std::log(static_cast<double>(std::max<std::int64_t>(Q, 2)));
      r.normalized_residual = denom > 0 ? std::abs(r.residual) / denom : 0.0;
      reports.push_back(r);
    }
  }
  return reports;
}

}  // namespace fareylab
