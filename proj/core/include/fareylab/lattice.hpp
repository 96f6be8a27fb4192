#ifndef FAREYLAB_LATTICE_HPP
#define FAREYLAB_LATTICE_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "fareylab/geometry.hpp"

namespace fareylab {

/// Admissible residue pairs (a, b) mod d for the pair (q_{i-1}, q_i).
/// Residues are stored in [0, d). Product sets A x B are the rectangular
/// special case; see is_product().
struct ResiduePairSet {
  std::int64_t d = 1;
  std::set<std::pair<std::int64_t, std::int64_t>> pairs;

  bool contains(std::int64_t m, std::int64_t n) const {
    return pairs.count({((m % d) + d) % d, ((n % d) + d) % d}) > 0;
  }
  std::int64_t size() const { return static_cast<std::int64_t>(pairs.size()); }

  /// True when the set equals the product of its coordinate projections.
  bool is_product() const;
};

/// All pairs with both coordinates coprime to d.
ResiduePairSet coprime_pairs(std::int64_t d);

/// Exact count of integer points (m, n) in the scaled region with
/// gcd(m, n) = 1 and (m, n) mod d in S, honoring edge strictness.
std::int64_t visible_count(const ConvexPolygon& scaled_region,
                           const ResiduePairSet& S);

/// Exact rational part of the Lemma-2 main term:
/// area * |S| / d^2 * prod_{p|d} (1 - p^-2)^{-1}.
Rational main_term_exact_factor(const Rational& area, const ResiduePairSet& S);

/// 6/pi^2 times the exact factor, evaluated in double at the boundary.
double main_term(const ConvexPolygon& region, const ResiduePairSet& S);

/// prod_{p|d} (1 - p^-2)^{-1} as an exact rational.
Rational euler_factor(std::int64_t d);

struct CountReport {
  std::int64_t Q = 1;
  std::int64_t d = 1;
  std::int64_t exact = 0;
  double main = 0.0;
  Rational area;
  Rational perimeter;  // L1 boundary length
  double residual = 0.0;
  double normalized_residual = 0.0;  // |residual| / (area/Q + perimeter log Q)
};

/// For each shape and Q, compares the exact count of the Q-scaled region
/// against the main term and reports the residual normalized by the
/// error-term shape area/Q + perimeter * log Q.
std::vector<CountReport> lemma2_residual_sweep(
    const std::vector<ConvexPolygon>& shapes, const ResiduePairSet& S,
    const std::vector<std::int64_t>& Q_list);

}  // namespace fareylab

#endif
