#ifndef FAREYLAB_VERIFY_HPP
#define FAREYLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fareylab {

struct SweepResult {
  std::string name;
  std::int64_t checks = 0;
  std::vector<std::string> violations;  // full window context per failure

  bool ok() const { return violations.empty(); }
};

/// Continuant identity for nu_ell over all windows, Q <= Q_max, ell <= l_max.
/// fault_at_Q != 0 perturbs one computed 2-index at that order (harness
/// self-test for the failure path).
SweepResult identity_sweep(std::int64_t Q_max, std::int64_t l_max, int workers,
                           std::int64_t fault_at_Q = 0);

/// Orbit identity of the triangle map on scaled denominator pairs and the
/// index correspondence nu_2 = region index, Q <= Q_max. Exact integer form
/// everywhere; the rational map API is cross-checked for Q <= rational_Q_max.
SweepResult dynamics_sweep(std::int64_t Q_max, int workers,
                           std::int64_t rational_Q_max = 100);

/// Large-index neighborhood pattern, Q <= Q_max, k <= k_max.
SweepResult lemma1_sweep(std::int64_t Q_max, std::int64_t k_max, int workers);

/// Mediant-chain identity nu_2 = (r_M + s_N)/q_i = M + N + 1 over all
/// fractions with q_i >= 2, Q <= Q_max.
SweepResult mediant_sweep(std::int64_t Q_max, int workers);

}  // namespace fareylab

#endif
