#ifndef FAREYLAB_INDEX_HPP
#define FAREYLAB_INDEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fareylab/farey.hpp"

namespace fareylab {

/// Window of ell + 1 consecutive fractions gamma_{i-1} .. gamma_{i+ell-1}
/// in the periodically extended F_Q.
struct IndexWindow {
  std::int64_t Q = 1;
  std::int64_t center = 1;              // index i of gamma_i
  std::vector<Fraction> fractions;      // gamma_{i-1} .. gamma_{i+ell-1}

  std::int64_t ell() const {
    return static_cast<std::int64_t>(fractions.size()) - 1;
  }
};

IndexWindow make_window(const FareySequence& seq, std::int64_t i, std::int64_t ell);

/// K_0 = 1, K_1 = x1, K_n = x_n K_{n-1} + K_{n-2}, exact integer arithmetic.
std::int64_t continuant(const std::vector<std::int64_t>& xs);

/// Kronecker symbol (n | 2): 0 for even n, +1 for n = +-1 mod 8,
/// -1 for n = +-3 mod 8.
int kronecker_two(std::int64_t n);

/// nu_2(gamma_i) from a consecutive triple (gamma_{i-1}, gamma_i, gamma_{i+1}).
/// Rejects windows that are not consecutive in the extended F_Q.
std::int64_t two_index(std::int64_t Q, const IndexWindow& window);

/// nu_2 from the neighbor-denominator form floor((Q + q_prev) / q_cur).
inline std::int64_t two_index_floor(std::int64_t Q, std::int64_t q_prev,
                                    std::int64_t q_cur) {
  return (Q + q_prev) / q_cur;
}

/// nu_ell(gamma_i) = a_{i+ell-1} q_{i-1} - a_{i-1} q_{i+ell-1}.
std::int64_t ell_index(const FareySequence& seq, std::int64_t i, std::int64_t ell);

/// Checks the continuant identity for nu_ell against the window of 2-indices,
/// both sides computed independently.
bool index_identity_check(const FareySequence& seq, std::int64_t i, std::int64_t ell);

/// Evaluates (2l-1 | 2) * K_{l-1}(-x1, x2, ..., (-1)^{l-1} x_{l-1}), the
/// right hand side of the continuant identity, for a tuple of 2-index values.
std::int64_t index_from_two_index_tuple(const std::vector<std::int64_t>& xs);

/// One failed neighborhood pattern around a large 2-index.
struct Lemma1Violation {
  std::int64_t i = 0;           // index of the large-index fraction
  std::int64_t nu2 = 0;         // its 2-index
  std::int64_t offset = 0;      // offending offset j (gamma_{i+offset})
  std::int64_t expected = 0;    // 1 for |j| = 1, 2 for 2 <= |j| <= k
  std::int64_t actual = 0;
  Fraction center;
};

/// Scans all gamma_i in F_Q with nu_2 >= 4k+1 and verifies that the
/// neighbors satisfy nu_2(gamma_{i+-1}) = 1 and nu_2(gamma_{i+-j}) = 2 for
/// 2 <= j <= k. Returns every violation (expected empty).
std::vector<Lemma1Violation> lemma1_check(std::int64_t Q, std::int64_t k);

/// Mediant chains flanking gamma_i in F_{q_i}, with the largest m keeping
/// r_m, s_m <= Q. Carries the identity nu_2 = (r_M + s_N)/q_i = M + N + 1.
struct MediantChain {
  std::int64_t Q = 1;
  Fraction base;                 // a_i / q_i
  Fraction left;                 // a'/q', predecessor in F_{q_i} (may be 0/1)
  Fraction right;                // a''/q'', successor in F_{q_i}
  std::vector<Fraction> left_chain;   // b_m / r_m, m = 0..M
  std::vector<Fraction> right_chain;  // c_m / s_m, m = 0..N
  std::int64_t M = 0;
  std::int64_t N = 0;

  std::int64_t index_value() const { return M + N + 1; }
};

/// Builds the chain for gamma_i in F_Q. Requires q_i >= 2 (for q_i = 1 the
/// flanking construction in F_1 degenerates).
MediantChain mediant_chain(const FareySequence& seq, std::int64_t i);

}  // namespace fareylab

#endif
