#include "fareylab/verify.hpp"

#include <mutex>
#include <sstream>

#include "fareylab/farey.hpp"
#include "fareylab/geometry.hpp"
#include "fareylab/index.hpp"
#include "fareylab/parallel.hpp"

namespace fareylab {

namespace {

std::string fraction_str(const Fraction& f) {
  std::ostringstream os;
  os << f.num << "/" << f.den;
  return os.str();
}

std::string window_dump(const FareySequence& seq, std::int64_t i,
                        std::int64_t ell) {
  std::ostringstream os;
  os << "Q=" << seq.order() << " i=" << i << " window:";
  for (std::int64_t j = i - 1; j <= i + ell - 1; ++j)
    os << " " << fraction_str(seq.at(j));
  return os.str();
}

// Per-Q sweeps run in parallel; violations merge in Q order.
SweepResult run_per_order(const std::string& name, std::int64_t Q_max, int workers,
                          const std::function<void(std::int64_t, std::int64_t&,
                                                   std::vector<std::string>&)>& body) {
  std::vector<std::int64_t> checks(static_cast<std::size_t>(Q_max), 0);
  std::vector<std::vector<std::string>> violations(static_cast<std::size_t>(Q_max));
  parallel_for(Q_max, workers, [&](std::int64_t idx) {
    body(idx + 1, checks[static_cast<std::size_t>(idx)],
         violations[static_cast<std::size_t>(idx)]);
  });
  SweepResult result;
  result.name = name;
  for (std::int64_t q = 0; q < Q_max; ++q) {
    result.checks += checks[static_cast<std::size_t>(q)];
    for (auto& v : violations[static_cast<std::size_t>(q)])
      result.violations.push_back(std::move(v));
  }
  return result;
}

}  // namespace

SweepResult identity_sweep(std::int64_t Q_max, std::int64_t l_max, int workers,
                           std::int64_t fault_at_Q) {
  return run_per_order(
      "identity", Q_max, workers,
      [l_max, fault_at_Q](std::int64_t Q, std::int64_t& checks,
                          std::vector<std::string>& violations) {
        FareySequence seq(Q);
        const std::int64_t n = seq.size();
        for (std::int64_t i = 1; i <= n; ++i) {
          std::vector<std::int64_t> xs;
          for (std::int64_t ell = 1; ell <= l_max; ++ell) {
            if (ell >= 2) {
              std::int64_t nu2 = ell_index(seq, i + ell - 2, 2);
              if (fault_at_Q == Q && i == 1 && ell == 2) ++nu2;
              xs.push_back(nu2);
            }
            const std::int64_t lhs = ell_index(seq, i, ell);
            const std::int64_t rhs = index_from_two_index_tuple(xs);
            ++checks;
            if (lhs != rhs) {
              std::ostringstream os;
              os << "identity l=" << ell << " nu=" << lhs << " continuant=" << rhs
                 << " " << window_dump(seq, i, ell);
              violations.push_back(os.str());
            }
          }
        }
      });
}

SweepResult dynamics_sweep(std::int64_t Q_max, int workers,
                           std::int64_t rational_Q_max) {
  return run_per_order(
      "dynamics", Q_max, workers,
      [rational_Q_max](std::int64_t Q, std::int64_t& checks,
                       std::vector<std::string>& violations) {
        FareySequence seq(Q);
        const std::int64_t n = seq.size();
        for (std::int64_t i = 1; i <= n; ++i) {
          const std::int64_t qm = seq.at(i - 1).den;
          const std::int64_t qc = seq.at(i).den;
          const std::int64_t qn = seq.at(i + 1).den;
          const std::int64_t k = (Q + qm) / qc;
          // Orbit step: T(q_{i-1}/Q, q_i/Q) = (q_i/Q, q_{i+1}/Q).
          ++checks;
          if (k * qc - qm != qn) {
            std::ostringstream os;
            os << "orbit: k=" << k << " kq_i-q_{i-1}=" << (k * qc - qm)
               << " expected q_{i+1}=" << qn << " " << window_dump(seq, i, 2);
            violations.push_back(os.str());
          }
          // Index correspondence: region label equals nu_2.
          const std::int64_t nu2 = ell_index(seq, i, 2);
          ++checks;
          if (nu2 != k) {
            std::ostringstream os;
            os << "index: nu2=" << nu2 << " region=" << k << " "
               << window_dump(seq, i, 2);
            violations.push_back(os.str());
          }
          if (Q <= rational_Q_max) {
            const ExactPoint p{Rational(qm, Q), Rational(qc, Q)};
            const ExactPoint image = farey_map(p);
            ++checks;
            if (!(image.x == Rational(qc, Q) && image.y == Rational(qn, Q) &&
                  region_index(p) == nu2)) {
              violations.push_back("rational map mismatch " +
                                   window_dump(seq, i, 2));
            }
          }
        }
      });
}

SweepResult lemma1_sweep(std::int64_t Q_max, std::int64_t k_max, int workers) {
  return run_per_order(
      "lemma1", Q_max, workers,
      [k_max](std::int64_t Q, std::int64_t& checks,
              std::vector<std::string>& violations) {
        for (std::int64_t k = 1; k <= k_max; ++k) {
          ++checks;
          for (const auto& v : lemma1_check(Q, k)) {
            std::ostringstream os;
            os << "lemma1 Q=" << Q << " k=" << k << " i=" << v.i
               << " center=" << fraction_str(v.center) << " nu2=" << v.nu2
               << " offset=" << v.offset << " expected=" << v.expected
               << " actual=" << v.actual;
            violations.push_back(os.str());
          }
        }
      });
}

SweepResult mediant_sweep(std::int64_t Q_max, int workers) {
  return run_per_order(
      "mediant", Q_max, workers,
      [](std::int64_t Q, std::int64_t& checks,
         std::vector<std::string>& violations) {
        FareySequence seq(Q);
        const std::int64_t n = seq.size();
        for (std::int64_t i = 1; i <= n; ++i) {
          if (seq.at(i).den < 2) continue;
          const MediantChain chain = mediant_chain(seq, i);
          const std::int64_t nu2 = ell_index(seq, i, 2);
          const std::int64_t rM = chain.left_chain.back().den;
          const std::int64_t sN = chain.right_chain.back().den;
          ++checks;
          if (chain.index_value() != nu2 ||
              (rM + sN) != nu2 * chain.base.den) {
            std::ostringstream os;
            os << "mediant: nu2=" << nu2 << " M+N+1=" << chain.index_value()
               << " (r_M+s_N)/q_i=" << (rM + sN) << "/" << chain.base.den << " "
               << window_dump(seq, i, 2);
            violations.push_back(os.str());
          }
        }
      });
}

}  // namespace fareylab
