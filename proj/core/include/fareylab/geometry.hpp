#ifndef FAREYLAB_GEOMETRY_HPP
#define FAREYLAB_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "fareylab/rational.hpp"

namespace fareylab {

struct ExactPoint {
  Rational x;
  Rational y;

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

/// Constraint a*x + b*y + c >= 0, or > 0 when strict.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
  bool strict = false;

  Rational eval(const ExactPoint& p) const { return a * p.x + b * p.y + c; }

  bool contains(const ExactPoint& p) const {
    const Rational v = eval(p);
    return strict ? v > 0 : v >= 0;
  }
};

/// Convex polygon given both as the counterclockwise vertex chain of its
/// closure and as the defining half-plane list (which carries strictness).
/// An empty region has no vertices and area 0.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  ConvexPolygon(std::vector<ExactPoint> closure_vertices,
                std::vector<HalfPlane> planes);

  bool empty() const { return vertices_.empty(); }
  const std::vector<ExactPoint>& vertices() const { return vertices_; }
  const std::vector<HalfPlane>& planes() const { return planes_; }

  /// Membership honoring per-constraint strictness.
  bool contains(const ExactPoint& p) const;

  /// Exact shoelace area of the closure; 0 for empty or degenerate regions.
  Rational area() const;

  /// Exact L1 (Manhattan) length of the boundary, a rational stand-in for
  /// the euclidean perimeter in residual normalizations.
  Rational perimeter_l1() const;

  /// Scales into [0, Q]^2: vertices multiplied by Q, constraints rewritten
  /// for unscaled integer coordinates.
  ConvexPolygon scaled(std::int64_t Q) const;

 private:
  std::vector<ExactPoint> vertices_;
  std::vector<HalfPlane> planes_;
};

/// Clips the closure of a convex vertex chain by a half-plane (treated as
/// closed). Exact rational Sutherland-Hodgman.
std::vector<ExactPoint> clip_closure(const std::vector<ExactPoint>& vertices,
                                     const HalfPlane& hp);

/// Builds the polygon cut out of the unit square by the given constraints.
ConvexPolygon intersect_in_unit_square(const std::vector<HalfPlane>& planes);

/// The piece map on T_k: (x, y) -> (y, ky - x), determinant 1.
struct PieceMap {
  std::int64_t k = 1;

  ExactPoint apply(const ExactPoint& p) const {
    return {p.y, Rational(k) * p.y - p.x};
  }
  /// Row-major matrix ((0,1),(-1,k)).
  std::array<std::int64_t, 4> matrix() const { return {0, 1, -1, k}; }
};

/// The Farey triangle T = {(x,y) in [0,1]^2 : x + y > 1}.
ConvexPolygon farey_triangle();

/// (x, y) -> (y, floor((1+x)/y) y - x). Rejects points outside T.
ExactPoint farey_map(const ExactPoint& p);

/// floor((1+x)/y) for p in T; equals nu_2 on scaled denominator pairs.
std::int64_t region_index(const ExactPoint& p);

/// T_k = {(x,y) in T : x <= 1, y <= 1, ky <= 1+x < (k+1)y} with exact
/// strictness flags.
ConvexPolygon piece_polygon(std::int64_t k);

/// T_{x1} cap T^{-1} T_{x2} cap ... cap T^{-(l-2)} T_{x_{l-1}}, computed by
/// pulling the piece constraints back through the composed piece maps.
/// The empty tuple returns T itself. An empty region is a valid result.
ConvexPolygon pullback_region(const std::vector<std::int64_t>& xs);

inline Rational polygon_area(const ConvexPolygon& p) { return p.area(); }

}  // namespace fareylab

#endif
