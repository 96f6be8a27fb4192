#include "fareylab/constant.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "fareylab/farey.hpp"
#include "fareylab/index.hpp"
#include "fareylab/parallel.hpp"

namespace fareylab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::int64_t mod_residue(std::int64_t v, std::int64_t d) {
  return ((v % d) + d) % d;
}

std::int64_t gcd_with_modulus(std::int64_t residue, std::int64_t d) {
  return std::gcd(residue == 0 ? d : residue, d);
}

Rational shoelace(const std::vector<ExactPoint>& verts) {
  if (verts.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& p = verts[i];
    const auto& q = verts[(i + 1) % verts.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  if (twice < 0) twice = -twice;
  return twice / 2;
}

// Constraints of T_k pulled back through the composed piece-map matrix A
// (row-major), plus the unit-square box on the image.
std::vector<HalfPlane> pulled_piece_planes(std::int64_t k,
                                           const std::array<BigInt, 4>& A) {
  const std::vector<HalfPlane> local = {
      {1, 1, -1, true},
      {1, Rational(-k), 1, false},
      {-1, Rational(k + 1), -1, true},
      {1, 0, 0, false},
      {0, 1, 0, false},
      {-1, 0, 1, false},
      {0, -1, 1, false}};
  std::vector<HalfPlane> out;
  out.reserve(local.size());
  for (const auto& hp : local)
    out.push_back({hp.a * Rational(A[0]) + hp.b * Rational(A[2]),
                   hp.a * Rational(A[1]) + hp.b * Rational(A[3]), hp.c,
                   hp.strict});
  return out;
}

std::array<BigInt, 4> compose_piece(std::int64_t k, const std::array<BigInt, 4>& A) {
  // ((0,1),(-1,k)) * A
  return {A[2], A[3], BigInt(k) * A[2] - A[0], BigInt(k) * A[3] - A[1]};
}

std::vector<ExactPoint> triangle_closure() {
  return {{0, 1}, {1, 1}, {1, 0}};
}

std::vector<ExactPoint> clip_all(std::vector<ExactPoint> verts,
                                 const std::vector<HalfPlane>& planes) {
  for (const auto& hp : planes) {
    if (verts.empty()) break;
    verts = clip_closure(verts, hp);
  }
  return verts;
}

struct PairState {
  std::int64_t a, b;    // starting residues (q_{i-1}, q_i) mod d
  std::int64_t rp, rc;  // (r_{t-1}, r_t) mod d
};

struct DfsRun {
  Rational pair_area_sum;  // sum over tuples of |pairs| * area
  std::vector<TupleRecord> breakdown;
  bool touched = false;
  std::int64_t L_used = 1;
  std::int64_t nodes = 0;
};

// Depth-first enumeration over tuples with residue, region, and positivity
// pruning. `record_regions` controls whether breakdown polygons are rebuilt.
class ConstantDfs {
 public:
  ConstantDfs(std::int64_t d, std::int64_t k, std::int64_t K_max, std::int64_t L,
              bool record_regions)
      : d_(d), k_(k), K_(K_max), L_(L), record_regions_(record_regions) {}

  DfsRun run() {
    result_ = DfsRun{};
    result_.pair_area_sum = 0;
    // ell = 1: empty tuple, region T, both endpoint residues coprime to d.
    if (k_ == 1) {
      ResiduePairSet s = coprime_pairs(d_);
      TupleRecord rec;
      rec.ell = 1;
      rec.xs = {};
      if (record_regions_) rec.region = farey_triangle();
      rec.area = Rational(1, 2);
      rec.pair_set = s;
      result_.pair_area_sum += rec.area * s.size();
      result_.breakdown.push_back(std::move(rec));
    }
    if (L_ < 2) return std::move(result_);
    // Depth-1 survivors: gcd(a, d) = 1 and the first middle b shares a
    // factor with d.
    std::vector<PairState> survivors;
    for (std::int64_t a = 0; a < d_; ++a) {
      if (gcd_with_modulus(a, d_) != 1) continue;
      for (std::int64_t b = 0; b < d_; ++b)
        if (gcd_with_modulus(b, d_) > 1) survivors.push_back({a, b, a, b});
    }
    if (survivors.empty()) return std::move(result_);
    const std::array<BigInt, 4> identity = {1, 0, 0, 1};
    std::vector<std::int64_t> xs;
    for (std::int64_t x = 1; x <= K_; ++x) {
      xs.push_back(x);
      auto verts = clip_all(triangle_closure(), pulled_piece_planes(x, identity));
      dfs(xs, verts, compose_piece(x, identity), survivors, 1, x);
      xs.pop_back();
    }
    return std::move(result_);
  }

 private:
  void dfs(std::vector<std::int64_t>& xs, const std::vector<ExactPoint>& verts,
           const std::array<BigInt, 4>& A, const std::vector<PairState>& survivors,
           std::int64_t v_prev, std::int64_t v_cur) {
    if (++result_.nodes > kNodeBudget)
      throw std::runtime_error("compute_constant: enumeration budget exceeded");
    const Rational area = shoelace(verts);
    if (area == 0) return;
    const std::int64_t t = static_cast<std::int64_t>(xs.size());
    const std::int64_t x_last = xs.back();

    // Endpoint classification: r_{t+1} = x_t r_t - r_{t-1}.
    ResiduePairSet endpoint_pairs;
    endpoint_pairs.d = d_;
    std::vector<PairState> child_survivors;
    for (const auto& ps : survivors) {
      const std::int64_t r_next = mod_residue(x_last * ps.rc - ps.rp, d_);
      if (gcd_with_modulus(r_next, d_) == 1)
        endpoint_pairs.pairs.insert({ps.a, ps.b});
      else
        child_survivors.push_back({ps.a, ps.b, ps.rc, r_next});
    }
    if (v_cur == k_ && !endpoint_pairs.pairs.empty()) {
      TupleRecord rec;
      rec.ell = t + 1;
      rec.xs = xs;
      if (record_regions_) rec.region = pullback_region(xs);
      rec.area = area;
      rec.pair_set = std::move(endpoint_pairs);
      result_.pair_area_sum += area * rec.pair_set.size();
      result_.L_used = std::max(result_.L_used, rec.ell);
      if (std::find(xs.begin(), xs.end(), K_) != xs.end()) result_.touched = true;
      result_.breakdown.push_back(std::move(rec));
    }
    if (child_survivors.empty() || t + 1 > L_ - 1) return;
    for (std::int64_t x = 1; x <= K_; ++x) {
      const std::int64_t v_next = x * v_cur - v_prev;
      if (v_next < 1) continue;
      auto child_verts = clip_all(verts, pulled_piece_planes(x, A));
      if (child_verts.size() < 3) continue;
      xs.push_back(x);
      dfs(xs, child_verts, compose_piece(x, A), child_survivors, v_cur, v_next);
      xs.pop_back();
    }
  }

  static constexpr std::int64_t kNodeBudget = 50'000'000;
  std::int64_t d_, k_, K_, L_;
  bool record_regions_;
  DfsRun result_;
};

}  // namespace

RunLengthReport max_gap_run(std::int64_t Q, std::int64_t d) {
  if (Q < 1 || d < 2)
    throw std::invalid_argument("max_gap_run: need Q >= 1 and d >= 2");
  RunLengthReport r;
  r.Q = Q;
  r.d = d;
  r.bound = 4 * d * d * d;
  // The extension neighbors of the (0,1] period have q = 1 on both sides,
  // so the circular maximum equals the linear one.
  std::int64_t cur = 0;
  for_each_farey(Q, [&](const Fraction& f) {
    if (std::gcd(f.den, d) > 1) {
      ++cur;
      r.max_run = std::max(r.max_run, cur);
    } else {
      cur = 0;
    }
  });
  return r;
}

TupleEnumeration admissible_tuples(std::int64_t ell, std::int64_t k,
                                   std::int64_t K_max) {
  if (ell < 1 || k < 1 || K_max < 1)
    throw std::invalid_argument("admissible_tuples: bad arguments");
  TupleEnumeration out;
  if (ell == 1) {
    if (k == 1) out.tuples.push_back({});
    return out;
  }
  // Depth-first over tuples of length ell - 1; prune on empty regions and
  // non-positive intermediate index values.
  struct Frame {
    std::vector<std::int64_t> xs;
    std::vector<ExactPoint> verts;
    std::array<BigInt, 4> A;
    std::int64_t v_prev, v_cur;
  };
  std::vector<std::int64_t> xs;
  const std::array<BigInt, 4> identity = {1, 0, 0, 1};

  std::function<void(const std::vector<ExactPoint>&, const std::array<BigInt, 4>&,
                     std::int64_t, std::int64_t)>
      dfs = [&](const std::vector<ExactPoint>& verts, const std::array<BigInt, 4>& A,
                std::int64_t v_prev, std::int64_t v_cur) {
        if (static_cast<std::int64_t>(xs.size()) == ell - 1) {
          if (v_cur == k && shoelace(verts) > 0) {
            out.tuples.push_back(xs);
            if (std::find(xs.begin(), xs.end(), K_max) != xs.end())
              out.boundary_touched = true;
          }
          return;
        }
        if (shoelace(verts) == 0) return;
        for (std::int64_t x = 1; x <= K_max; ++x) {
          const std::int64_t v_next = x * v_cur - v_prev;
          if (v_next < 1) continue;
          auto child = clip_all(verts, pulled_piece_planes(x, A));
          if (child.size() < 3) continue;
          xs.push_back(x);
          dfs(child, compose_piece(x, A), v_cur, v_next);
          xs.pop_back();
        }
      };
  dfs(triangle_closure(), identity, 0, 1);
  return out;
}

ResiduePairSet residue_pairs(const std::vector<std::int64_t>& xs, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("residue_pairs: d must be >= 1");
  ResiduePairSet s;
  s.d = d;
  for (std::int64_t a = 0; a < d; ++a) {
    if (gcd_with_modulus(a, d) != 1) continue;
    for (std::int64_t b = 0; b < d; ++b) {
      if (xs.empty()) {
        if (gcd_with_modulus(b, d) == 1) s.pairs.insert({a, b});
        continue;
      }
      std::int64_t rp = a, rc = b;
      bool ok = true;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        // rc is the middle r_j here; it must share a factor with d.
        if (gcd_with_modulus(rc, d) == 1) {
          ok = false;
          break;
        }
        const std::int64_t rn = mod_residue(xs[j] * rc - rp, d);
        rp = rc;
        rc = rn;
      }
      if (ok && gcd_with_modulus(rc, d) == 1) s.pairs.insert({a, b});
    }
  }
  return s;
}

ConstantReport compute_constant(std::int64_t d, std::int64_t k,
                                const ConstantOptions& options) {
  if (d < 1 || k < 1)
    throw std::invalid_argument("compute_constant: d and k must be >= 1");
  const std::int64_t L = options.L.value_or(4 * d * d * d);

  ConstantReport report;
  report.d = d;
  report.k = k;

  DfsRun run;
  std::int64_t K_used;
  if (options.K_max) {
    K_used = *options.K_max;
    run = ConstantDfs(d, k, K_used, L, true).run();
    report.k_max_warning = run.touched;
  } else {
    // Double the entry bound until no contributing tuple touches it and the
    // exact factor has stabilized.
    K_used = 4 * (k + 2) + 1;
    run = ConstantDfs(d, k, K_used, L, false).run();
    for (int round = 0; round < 24; ++round) {
      const std::int64_t K_next = 2 * K_used;
      DfsRun next = ConstantDfs(d, k, K_next, L, false).run();
      if (!next.touched && next.pair_area_sum == run.pair_area_sum) {
        K_used = K_next;
        run = std::move(next);
        break;
      }
      K_used = K_next;
      run = std::move(next);
    }
    report.k_max_warning = run.touched;
    // Rebuild with region polygons for the report.
    run = ConstantDfs(d, k, K_used, L, true).run();
  }

  report.K_max_used = K_used;
  report.L_used = run.L_used;
  report.exact_factor = Rational(6) * run.pair_area_sum / (Rational(d) * d) *
                        euler_factor(d);
  report.c_value = report.exact_factor.convert_to<double>() / (kPi * kPi);
  const double scale = 6.0 / (kPi * kPi * static_cast<double>(d) * d) *
                       euler_factor(d).convert_to<double>();
  report.breakdown = std::move(run.breakdown);
  for (auto& rec : report.breakdown)
    rec.contribution = scale * rec.area.convert_to<double>() *
                       static_cast<double>(rec.pair_set.size());
  return report;
}

std::vector<ConvergenceRow> convergence_report(std::int64_t d, std::int64_t k,
                                               const std::vector<std::int64_t>& Q_list,
                                               int workers) {
  const ConstantReport constant = compute_constant(d, k);
  std::vector<ConvergenceRow> rows(Q_list.size());
  parallel_for(static_cast<std::int64_t>(Q_list.size()), workers,
               [&](std::int64_t idx) {
                 const std::int64_t Q = Q_list[static_cast<std::size_t>(idx)];
                 const GapHistogram h = gap_numerator_counts(Q, d);
                 ConvergenceRow row;
                 row.Q = Q;
                 const auto it = h.counts.find(k);
                 row.count = it == h.counts.end() ? 0 : it->second;
                 const double q2 = static_cast<double>(Q) * static_cast<double>(Q);
                 row.density = static_cast<double>(row.count) / q2;
                 row.c = constant.c_value;
                 row.residual = static_cast<double>(row.count) - constant.c_value * q2;
                 row.normalized = row.residual /
                                  (static_cast<double>(Q) * std::log(static_cast<double>(Q)));
                 rows[static_cast<std::size_t>(idx)] = row;
               });
  return rows;
}

CrossValidationReport tuple_cross_validation(std::int64_t d, std::int64_t k,
                                             std::int64_t Q_check) {
  if (Q_check < 1 || Q_check > 5000)
    throw std::invalid_argument("tuple_cross_validation: Q_check must be in [1, 5000]");
  CrossValidationReport report;
  report.d = d;
  report.k = k;
  report.Q = Q_check;

  std::vector<std::int64_t> nums, dens;
  for_each_farey(Q_check, [&](const Fraction& f) {
    nums.push_back(f.num);
    dens.push_back(f.den);
  });
  const std::int64_t n = static_cast<std::int64_t>(dens.size());
  auto den_at = [&](std::int64_t i) {  // periodic, 1-based
    std::int64_t r = (i - 1) % n;
    if (r < 0) r += n;
    return dens[static_cast<std::size_t>(r)];
  };
  auto num_at = [&](std::int64_t i) {
    std::int64_t r = (i - 1) % n;
    std::int64_t shift = (i - 1) / n;
    if (r < 0) {
      r += n;
      --shift;
    }
    return nums[static_cast<std::size_t>(r)] +
           shift * dens[static_cast<std::size_t>(r)];
  };

  // Classify every F_{Q,d} gap: i runs over window starts where the left
  // endpoint gamma_{i-1} has admissible denominator.
  std::map<std::vector<std::int64_t>, std::int64_t> observed;
  std::map<std::vector<std::int64_t>,
           std::set<std::pair<std::int64_t, std::int64_t>>>
      observed_pairs;
  std::int64_t max_entry = 0;
  std::int64_t max_ell = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (std::gcd(den_at(i - 1), d) != 1) continue;
    std::int64_t ell = 1;
    while (std::gcd(den_at(i + ell - 1), d) != 1) ++ell;
    const std::int64_t nu =
        num_at(i + ell - 1) * den_at(i - 1) - num_at(i - 1) * den_at(i + ell - 1);
    if (nu != k) continue;
    ++report.gaps_with_value_k;
    std::vector<std::int64_t> xs;
    for (std::int64_t j = 0; j < ell - 1; ++j)
      xs.push_back((Q_check + den_at(i + j - 1)) / den_at(i + j));
    for (const std::int64_t x : xs) max_entry = std::max(max_entry, x);
    max_ell = std::max(max_ell, ell);
    ++observed[xs];
    observed_pairs[xs].insert(
        {mod_residue(den_at(i - 1), d), mod_residue(den_at(i), d)});
  }

  const std::int64_t K = std::max(4 * (k + max_ell) + 1, max_entry + 1);
  report.K_max_used = K;
  std::map<std::int64_t, std::set<std::vector<std::int64_t>>> admissible_by_ell;
  const double scale = 6.0 / (kPi * kPi * static_cast<double>(d) * d) *
                       euler_factor(d).convert_to<double>() *
                       static_cast<double>(Q_check) * static_cast<double>(Q_check);
  for (const auto& [xs, count] : observed) {
    const std::int64_t ell = static_cast<std::int64_t>(xs.size()) + 1;
    auto [it, fresh] = admissible_by_ell.try_emplace(ell);
    if (fresh) {
      for (auto& t : admissible_tuples(ell, k, K).tuples)
        it->second.insert(std::move(t));
    }
    if (!it->second.count(xs)) report.uncovered_tuples.push_back(xs);
    const ResiduePairSet pairs = residue_pairs(xs, d);
    for (const auto& pr : observed_pairs[xs])
      if (!pairs.pairs.count(pr)) report.uncovered_pairs.push_back(pr);
    CrossValidationReport::TupleStats stats;
    stats.ell = ell;
    stats.xs = xs;
    stats.observed = count;
    stats.expected = scale * polygon_area(pullback_region(xs)).convert_to<double>() *
                     static_cast<double>(pairs.size());
    report.per_tuple.push_back(std::move(stats));
  }
  return report;
}

}  // namespace fareylab
