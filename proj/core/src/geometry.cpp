#include "fareylab/geometry.hpp"

#include <stdexcept>

namespace fareylab {

ConvexPolygon::ConvexPolygon(std::vector<ExactPoint> closure_vertices,
                             std::vector<HalfPlane> planes)
    : vertices_(std::move(closure_vertices)), planes_(std::move(planes)) {
  // Drop consecutive duplicates produced by clipping.
  std::vector<ExactPoint> cleaned;
  for (const auto& v : vertices_) {
    if (cleaned.empty() || !(cleaned.back() == v)) cleaned.push_back(v);
  }
  if (cleaned.size() > 1 && cleaned.front() == cleaned.back()) cleaned.pop_back();
  vertices_ = std::move(cleaned);
  if (vertices_.size() < 3) {
    vertices_.clear();
    return;
  }
  // A closure with zero area is a segment or point; the region is empty of
  // interior and treated as the empty polygon.
  Rational twice_area = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    twice_area += p.x * q.y - q.x * p.y;
  }
  if (twice_area == 0) vertices_.clear();
}

bool ConvexPolygon::contains(const ExactPoint& p) const {
  for (const auto& hp : planes_)
    if (!hp.contains(p)) return false;
  return true;
}

Rational ConvexPolygon::area() const {
  if (vertices_.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  if (twice < 0) twice = -twice;
  return twice / 2;
}

Rational ConvexPolygon::perimeter_l1() const {
  Rational len = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    Rational dx = q.x - p.x;
    Rational dy = q.y - p.y;
    if (dx < 0) dx = -dx;
    if (dy < 0) dy = -dy;
    len += dx + dy;
  }
  return len;
}

ConvexPolygon ConvexPolygon::scaled(std::int64_t Q) const {
  std::vector<ExactPoint> verts;
  verts.reserve(vertices_.size());
  for (const auto& v : vertices_)
    verts.push_back({v.x * Q, v.y * Q});
  std::vector<HalfPlane> planes;
  planes.reserve(planes_.size());
  for (const auto& hp : planes_)
    planes.push_back({hp.a, hp.b, hp.c * Q, hp.strict});
  ConvexPolygon out;
  out.vertices_ = std::move(verts);
  out.planes_ = std::move(planes);
  return out;
}

std::vector<ExactPoint> clip_closure(const std::vector<ExactPoint>& vertices,
                                     const HalfPlane& hp) {
  std::vector<ExactPoint> out;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ExactPoint& cur = vertices[i];
    const ExactPoint& nxt = vertices[(i + 1) % n];
    const Rational vc = hp.eval(cur);
    const Rational vn = hp.eval(nxt);
    if (vc >= 0) out.push_back(cur);
    if ((vc > 0 && vn < 0) || (vc < 0 && vn > 0)) {
      const Rational t = vc / (vc - vn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return out;
}

namespace {

const std::vector<HalfPlane>& unit_square_planes() {
  static const std::vector<HalfPlane> planes = {
      {1, 0, 0, false},    // x >= 0
      {0, 1, 0, false},    // y >= 0
      {-1, 0, 1, false},   // x <= 1
      {0, -1, 1, false}};  // y <= 1
  return planes;
}

std::vector<ExactPoint> unit_square_vertices() {
  return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

// Constraints of T_k in its own coordinates, excluding the unit square.
std::vector<HalfPlane> piece_constraints(std::int64_t k) {
  return {
      {1, 1, -1, true},            // x + y > 1
      {1, Rational(-k), 1, false},  // ky <= 1 + x
      {-1, Rational(k + 1), -1, true}};  // 1 + x < (k+1)y
}

}  // namespace

ConvexPolygon intersect_in_unit_square(const std::vector<HalfPlane>& planes) {
  std::vector<ExactPoint> verts = unit_square_vertices();
  std::vector<HalfPlane> all = unit_square_planes();
  for (const auto& hp : planes) {
    if (!verts.empty()) verts = clip_closure(verts, hp);
    all.push_back(hp);
  }
  return ConvexPolygon(std::move(verts), std::move(all));
}

ConvexPolygon farey_triangle() {
  return intersect_in_unit_square({{1, 1, -1, true}});
}

ExactPoint farey_map(const ExactPoint& p) {
  const std::int64_t k = region_index(p);
  return {p.y, Rational(k) * p.y - p.x};
}

std::int64_t region_index(const ExactPoint& p) {
  if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1 || p.x + p.y <= 1)
    throw std::domain_error("region_index: point outside the Farey triangle");
  return to_int64(rational_floor((1 + p.x) / p.y));
}

ConvexPolygon piece_polygon(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("piece_polygon: k must be >= 1");
  return intersect_in_unit_square(piece_constraints(k));
}

ConvexPolygon pullback_region(const std::vector<std::int64_t>& xs) {
  if (xs.empty()) return farey_triangle();
  for (const std::int64_t x : xs)
    if (x < 1) throw std::invalid_argument("pullback_region: entries must be >= 1");

  // Composed piece-map matrix acting on the starting point; constraints of
  // the j-th piece are pulled back through it with integer coefficients.
  BigInt a00 = 1, a01 = 0, a10 = 0, a11 = 1;
  std::vector<HalfPlane> planes;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    std::vector<HalfPlane> local = piece_constraints(xs[j]);
    for (auto& hp : local)
      planes.push_back({hp.a * Rational(a00) + hp.b * Rational(a10),
                        hp.a * Rational(a01) + hp.b * Rational(a11), hp.c,
                        hp.strict});
    if (j + 1 < xs.size()) {
      // Image must stay in the unit square for the next piece's box bounds.
      for (const auto& hp : unit_square_planes())
        planes.push_back({hp.a * Rational(a00) + hp.b * Rational(a10),
                          hp.a * Rational(a01) + hp.b * Rational(a11), hp.c,
                          hp.strict});
      const BigInt k = xs[j];
      const BigInt b00 = a10, b01 = a11;
      const BigInt b10 = k * a10 - a00, b11 = k * a11 - a01;
      a00 = b00;
      a01 = b01;
      a10 = b10;
      a11 = b11;
    }
  }
  return intersect_in_unit_square(planes);
}

}  // namespace fareylab
