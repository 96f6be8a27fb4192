#ifndef FAREYLAB_CONSTANT_HPP
#define FAREYLAB_CONSTANT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fareylab/geometry.hpp"
#include "fareylab/lattice.hpp"

namespace fareylab {

/// Longest run of consecutive F_Q fractions whose denominators all share a
/// factor with d, against the 4d^3 bound.
struct RunLengthReport {
  std::int64_t Q = 1;
  std::int64_t d = 2;
  std::int64_t max_run = 0;
  std::int64_t bound = 0;  // 4 d^3
};

RunLengthReport max_gap_run(std::int64_t Q, std::int64_t d);

/// A 2-index tuple together with its pullback region, exact area, and the
/// admissible residue pairs mod d.
struct TupleRecord {
  std::int64_t ell = 1;
  std::vector<std::int64_t> xs;  // ell - 1 entries
  ConvexPolygon region;
  Rational area;
  ResiduePairSet pair_set;
  double contribution = 0.0;  // |pair_set| * area * 6 / (pi^2 d^2) * euler
};

struct TupleEnumeration {
  std::vector<std::vector<std::int64_t>> tuples;
  bool boundary_touched = false;  // some tuple has an entry equal to K_max
};

/// All (ell-1)-tuples with entries in [1, K_max] whose continuant identity
/// value equals k and whose pullback region has positive area. For ell = 1
/// the empty tuple qualifies iff k = 1.
TupleEnumeration admissible_tuples(std::int64_t ell, std::int64_t k,
                                   std::int64_t K_max);

/// Residue pairs (a, b) mod d with gcd(a, d) = 1, all middle terms of the
/// recurrence r_{j+1} = x_j r_j - r_{j-1} sharing a factor with d, and the
/// endpoint coprime to d. For the empty tuple both coordinates are coprime.
ResiduePairSet residue_pairs(const std::vector<std::int64_t>& xs, std::int64_t d);

struct ConstantReport {
  std::int64_t d = 1;
  std::int64_t k = 1;
  Rational exact_factor;  // 6 * sum(|pairs| * area) / d^2 * euler product
  double c_value = 0.0;   // exact_factor / pi^2
  std::vector<TupleRecord> breakdown;
  std::int64_t L_used = 0;
  std::int64_t K_max_used = 0;
  bool k_max_warning = false;
};

struct ConstantOptions {
  std::optional<std::int64_t> K_max;  // disables auto-doubling when set
  std::optional<std::int64_t> L;      // default 4 d^3
};

/// Assembles c(d, k) from the tuple enumeration, exact areas, and residue
/// pair counts. The rational factor is exact; pi^2 enters once at the end.
ConstantReport compute_constant(std::int64_t d, std::int64_t k,
                                const ConstantOptions& options = {});

struct ConvergenceRow {
  std::int64_t Q = 1;
  std::int64_t count = 0;         // N_{Q,d}(k)
  double density = 0.0;           // N / Q^2
  double c = 0.0;
  double residual = 0.0;          // N - c Q^2
  double normalized = 0.0;        // residual / (Q log Q)
};

std::vector<ConvergenceRow> convergence_report(std::int64_t d, std::int64_t k,
                                               const std::vector<std::int64_t>& Q_list,
                                               int workers = 1);

/// Window-level scan of F_{Q_check}: classifies every F_{Q,d} gap with
/// numerator k by its (ell, 2-index tuple), then checks the enumeration and
/// residue pair sets cover everything observed.
struct CrossValidationReport {
  std::int64_t d = 1;
  std::int64_t k = 1;
  std::int64_t Q = 1;
  std::int64_t gaps_with_value_k = 0;  // should equal N_{Q,d}(k)
  std::int64_t K_max_used = 0;
  struct TupleStats {
    std::int64_t ell;
    std::vector<std::int64_t> xs;
    std::int64_t observed;
    double expected;  // |pairs| * area * Q^2 * 6 / (pi^2 d^2) * euler
  };
  std::vector<TupleStats> per_tuple;
  std::vector<std::vector<std::int64_t>> uncovered_tuples;
  std::vector<std::pair<std::int64_t, std::int64_t>> uncovered_pairs;

  bool covered() const {
    return uncovered_tuples.empty() && uncovered_pairs.empty();
  }
};

CrossValidationReport tuple_cross_validation(std::int64_t d, std::int64_t k,
                                             std::int64_t Q_check);

}  // namespace fareylab

#endif
