#ifndef FAREYLAB_FAREY_HPP
#define FAREYLAB_FAREY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fareylab {

/// A reduced fraction num/den with den > 0. Elements of F_Q proper have
/// 0 < num <= den; the periodic extension gamma + n relaxes the range of num.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

inline bool operator<(const Fraction& a, const Fraction& b) {
  // den > 0 on both sides, so cross multiplication preserves order.
  return a.num * b.den < b.num * a.den;
}

inline bool unimodular(const Fraction& a, const Fraction& b) {
  return b.num * a.den - a.num * b.den == 1;
}

/// Successor of `cur` in the periodically extended F_Q, given its
/// predecessor. Rejects pairs that are not unimodular (caller bug).
Fraction farey_next(std::int64_t Q, const Fraction& prev, const Fraction& cur);

/// Streaming cursor over F_Q starting at 1/Q with virtual predecessor 0/1.
/// Runs past 1/1 into the periodic extension indefinitely.
class FareyStream {
 public:
  explicit FareyStream(std::int64_t Q);

  std::int64_t order() const { return Q_; }
  const Fraction& current() const { return cur_; }
  const Fraction& previous() const { return prev_; }
  std::int64_t index() const { return index_; }

  /// Advances to the next fraction and returns it.
  const Fraction& advance();

 private:
  std::int64_t Q_;
  Fraction prev_;
  Fraction cur_;
  std::int64_t index_;  // 1-based position of cur_ in the extended sequence
};

/// Calls fn for every element of F_Q in (0,1], in increasing order.
void for_each_farey(std::int64_t Q, const std::function<void(const Fraction&)>& fn);

/// Calls fn for every element of F_{Q,d} in (0,1] (denominator coprime to d).
void for_each_restricted(std::int64_t Q, std::int64_t d,
                         const std::function<void(const Fraction&)>& fn);

/// Materialized F_Q with periodic index extension gamma_{i+N} = gamma_i + 1.
/// Intended for desk-scale sweeps (Q up to a few thousand).
class FareySequence {
 public:
  explicit FareySequence(std::int64_t Q);

  std::int64_t order() const { return Q_; }
  std::int64_t size() const { return static_cast<std::int64_t>(fractions_.size()); }

  /// gamma_i for any integer i (1-based within a period).
  Fraction at(std::int64_t i) const;

  const std::vector<Fraction>& period() const { return fractions_; }

 private:
  std::int64_t Q_;
  std::vector<Fraction> fractions_;
};

/// Exact gap-numerator histogram for F_{Q,d} under the circular convention:
/// the wraparound gap from the last fraction in (0,1] to first + 1 is counted.
struct GapHistogram {
  std::int64_t Q = 1;
  std::int64_t d = 1;
  std::map<std::int64_t, std::int64_t> counts;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
  }
};

GapHistogram gap_numerator_counts(std::int64_t Q, std::int64_t d);

/// Number of elements of F_{Q,d} in (0,1].
std::int64_t restricted_size(std::int64_t Q, std::int64_t d);

/// Sum of Euler totients phi(q) for q <= Q, i.e. #(F_Q in (0,1]).
std::int64_t totient_sum(std::int64_t Q);

}  // namespace fareylab

#endif
