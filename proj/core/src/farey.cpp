#include "fareylab/farey.hpp"

namespace fareylab {

Fraction farey_next(std::int64_t Q, const Fraction& prev, const Fraction& cur) {
  if (Q < 1) throw std::invalid_argument("farey_next: Q must be >= 1");
  if (!unimodular(prev, cur))
    throw std::invalid_argument("farey_next: input pair is not unimodular");
  const std::int64_t t = (Q + prev.den) / cur.den;
  return Fraction{t * cur.num - prev.num, t * cur.den - prev.den};
}

FareyStream::FareyStream(std::int64_t Q)
    : Q_(Q), prev_{0, 1}, cur_{1, Q}, index_(1) {
  if (Q < 1) throw std::invalid_argument("FareyStream: Q must be >= 1");
  if (Q == 1) cur_ = Fraction{1, 1};
}

const Fraction& FareyStream::advance() {
  const std::int64_t t = (Q_ + prev_.den) / cur_.den;
  Fraction next{t * cur_.num - prev_.num, t * cur_.den - prev_.den};
  prev_ = cur_;
  cur_ = next;
  ++index_;
  return cur_;
}

void for_each_farey(std::int64_t Q, const std::function<void(const Fraction&)>& fn) {
  FareyStream s(Q);
  while (true) {
    const Fraction& f = s.current();
    fn(f);
    if (f.num == 1 && f.den == 1) break;
    s.advance();
  }
}

void for_each_restricted(std::int64_t Q, std::int64_t d,
                         const std::function<void(const Fraction&)>& fn) {
  for_each_farey(Q, [&](const Fraction& f) {
    if (std::gcd(f.den, d) == 1) fn(f);
  });
}

FareySequence::FareySequence(std::int64_t Q) : Q_(Q) {
  if (Q < 1) throw std::invalid_argument("FareySequence: Q must be >= 1");
  for_each_farey(Q, [&](const Fraction& f) { fractions_.push_back(f); });
}

Fraction FareySequence::at(std::int64_t i) const {
  const std::int64_t n = size();
  std::int64_t r = (i - 1) % n;
  std::int64_t shift = (i - 1) / n;
  if (r < 0) {
    r += n;
    --shift;
  }
  Fraction f = fractions_[static_cast<std::size_t>(r)];
  f.num += shift * f.den;
  return f;
}

GapHistogram gap_numerator_counts(std::int64_t Q, std::int64_t d) {
  if (Q < 1 || d < 1)
    throw std::invalid_argument("gap_numerator_counts: Q and d must be >= 1");
  GapHistogram h;
  h.Q = Q;
  h.d = d;
  Fraction first{0, 0};
  Fraction last{0, 0};
  bool have_first = false;
  for_each_restricted(Q, d, [&](const Fraction& f) {
    if (!have_first) {
      first = f;
      have_first = true;
    } else {
      ++h.counts[last.den * f.num - last.num * f.den];
    }
    last = f;
  });
  // Wraparound gap to the periodic image first + 1. 1/1 is always present,
  // so have_first holds for every (Q, d).
  const Fraction wrapped{first.num + first.den, first.den};
  ++h.counts[last.den * wrapped.num - last.num * wrapped.den];
  return h;
}

std::int64_t restricted_size(std::int64_t Q, std::int64_t d) {
  std::int64_t n = 0;
  for_each_restricted(Q, d, [&](const Fraction&) { ++n; });
  return n;
}

std::int64_t totient_sum(std::int64_t Q) {
  std::vector<std::int64_t> phi(static_cast<std::size_t>(Q) + 1);
  for (std::int64_t i = 0; i <= Q; ++i) phi[static_cast<std::size_t>(i)] = i;
  for (std::int64_t p = 2; p <= Q; ++p) {
    if (phi[static_cast<std::size_t>(p)] == p) {  // p prime
      for (std::int64_t m = p; m <= Q; m += p)
        phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
    }
  }
  std::int64_t sum = 0;
  for (std::int64_t q = 1; q <= Q; ++q) sum += phi[static_cast<std::size_t>(q)];
  return sum;
}

}  // namespace fareylab
