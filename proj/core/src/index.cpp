#include "fareylab/index.hpp"

#include <stdexcept>

namespace fareylab {

IndexWindow make_window(const FareySequence& seq, std::int64_t i, std::int64_t ell) {
  if (ell < 1) throw std::invalid_argument("make_window: ell must be >= 1");
  IndexWindow w;
  w.Q = seq.order();
  w.center = i;
  w.fractions.reserve(static_cast<std::size_t>(ell) + 1);
  for (std::int64_t j = i - 1; j <= i + ell - 1; ++j) w.fractions.push_back(seq.at(j));
  return w;
}

std::int64_t continuant(const std::vector<std::int64_t>& xs) {
  std::int64_t km2 = 1;  // K_0
  if (xs.empty()) return km2;
  std::int64_t km1 = xs[0];  // K_1
  for (std::size_t n = 1; n < xs.size(); ++n) {
    const std::int64_t k = xs[n] * km1 + km2;
    km2 = km1;
    km1 = k;
  }
  return km1;
}

int kronecker_two(std::int64_t n) {
  if (n % 2 == 0) return 0;
  std::int64_t r = n % 8;
  if (r < 0) r += 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

std::int64_t two_index(std::int64_t Q, const IndexWindow& window) {
  if (window.ell() != 2)
    throw std::invalid_argument("two_index: window must hold exactly 3 fractions");
  const Fraction& a = window.fractions[0];
  const Fraction& b = window.fractions[1];
  const Fraction& c = window.fractions[2];
  if (!unimodular(a, b) || !unimodular(b, c) || a.den + b.den <= Q ||
      b.den + c.den <= Q)
    throw std::invalid_argument("two_index: fractions are not consecutive in F_Q");
  return c.num * a.den - a.num * c.den;
}

std::int64_t ell_index(const FareySequence& seq, std::int64_t i, std::int64_t ell) {
  if (ell < 1) throw std::invalid_argument("ell_index: ell must be >= 1");
  const Fraction lo = seq.at(i - 1);
  const Fraction hi = seq.at(i + ell - 1);
  return hi.num * lo.den - lo.num * hi.den;
}

std::int64_t index_from_two_index_tuple(const std::vector<std::int64_t>& xs) {
  const std::int64_t ell = static_cast<std::int64_t>(xs.size()) + 1;
  std::vector<std::int64_t> signed_args(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j)
    signed_args[j] = (j % 2 == 0) ? -xs[j] : xs[j];
  return kronecker_two(2 * ell - 1) * continuant(signed_args);
}

bool index_identity_check(const FareySequence& seq, std::int64_t i, std::int64_t ell) {
  if (ell < 1) throw std::invalid_argument("index_identity_check: ell must be >= 1");
  std::vector<std::int64_t> xs;
  xs.reserve(static_cast<std::size_t>(ell) - 1);
  for (std::int64_t j = 0; j < ell - 1; ++j) xs.push_back(ell_index(seq, i + j, 2));
  return ell_index(seq, i, ell) == index_from_two_index_tuple(xs);
}

std::vector<Lemma1Violation> lemma1_check(std::int64_t Q, std::int64_t k) {
  if (Q < 1 || k < 1)
    throw std::invalid_argument("lemma1_check: Q and k must be >= 1");
  std::vector<Lemma1Violation> violations;
  FareySequence seq(Q);
  const std::int64_t n = seq.size();
  // nu_2 over one period; periodic in i since the denominators are.
  std::vector<std::int64_t> nu2(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i)
    nu2[static_cast<std::size_t>(i - 1)] =
        two_index_floor(Q, seq.at(i - 1).den, seq.at(i).den);
  auto nu2_at = [&](std::int64_t i) {
    std::int64_t r = (i - 1) % n;
    if (r < 0) r += n;
    return nu2[static_cast<std::size_t>(r)];
  };
  for (std::int64_t i = 1; i <= n; ++i) {
    if (nu2_at(i) < 4 * k + 1) continue;
    for (std::int64_t j = 1; j <= k; ++j) {
      const std::int64_t expected = (j == 1) ? 1 : 2;
      for (const std::int64_t off : {-j, j}) {
        const std::int64_t actual = nu2_at(i + off);
        if (actual != expected)
          violations.push_back({i, nu2_at(i), off, expected, actual, seq.at(i)});
      }
    }
  }
  return violations;
}

namespace {

// Modular inverse of a mod m for m >= 2, gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not coprime");
  return ((t % m) + m) % m;
}

}  // namespace

MediantChain mediant_chain(const FareySequence& seq, std::int64_t i) {
  MediantChain chain;
  chain.Q = seq.order();
  chain.base = seq.at(i);
  const std::int64_t a = chain.base.num % chain.base.den == 0
                             ? 1
                             : ((chain.base.num % chain.base.den) + chain.base.den) %
                                   chain.base.den;
  const std::int64_t q = chain.base.den;
  if (q < 2)
    throw std::invalid_argument(
        "mediant_chain: flanking construction requires q_i >= 2");
  // Left neighbor a'/q' of a/q in F_q: a q' - a' q = 1, 0 < q' < q.
  const std::int64_t qp = mod_inverse(a, q);
  const std::int64_t ap = (a * qp - 1) / q;
  // Right neighbor a''/q'': a'' q - a q'' = 1 i.e. a q'' = -1 mod q.
  const std::int64_t qpp = q - qp;
  const std::int64_t app = (a * qpp + 1) / q;
  // Shift neighbors along with the periodic extension of the base fraction.
  const std::int64_t shift = (chain.base.num - a) / q;
  chain.left = Fraction{ap + shift * qp, qp};
  chain.right = Fraction{app + shift * qpp, qpp};

  chain.M = (chain.Q - qp) / q;
  chain.N = (chain.Q - qpp) / q;
  for (std::int64_t m = 0; m <= chain.M; ++m)
    chain.left_chain.push_back(
        Fraction{chain.left.num + m * chain.base.num, qp + m * q});
  for (std::int64_t m = 0; m <= chain.N; ++m)
    chain.right_chain.push_back(
        Fraction{chain.right.num + m * chain.base.num, qpp + m * q});
  return chain;
}

}  // namespace fareylab
