#include "stk/truncmono.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stk {

TruncatedRingParams TruncatedRingParams::truncated(Int x_trunc, Int y_trunc) {
  if (x_trunc < 2) throw std::invalid_argument("x truncation exponent must be >= 2");
  if (y_trunc < 1) throw std::invalid_argument("y truncation exponent must be >= 1");
  TruncatedRingParams r;
  r.x_trunc_ = x_trunc;
  r.y_bound_ = y_trunc;
  r.sign_ = RelationSign::none;
  return r;
}

TruncatedRingParams TruncatedRingParams::relation_ring(Int x_trunc, Int y_exp, RelationSign sign) {
  if (sign == RelationSign::none)
    throw std::invalid_argument("relation ring needs an explicit sign");
  if (x_trunc < 2 || y_exp < 2)
    throw std::invalid_argument("relation exponents must be >= 2");
  TruncatedRingParams r;
  r.x_trunc_ = x_trunc;
  r.y_bound_ = y_exp;
  r.sign_ = sign;
  return r;
}

TruncatedRingParams swap_axes(const TruncatedRingParams& ring) {
  if (ring.is_truncated())
    throw std::invalid_argument("axis swap is only defined on relation rings");
  return TruncatedRingParams::relation_ring(ring.y_bound(), ring.x_trunc(), ring.sign());
}

StaircaseIdeal StaircaseIdeal::normalize(const TruncatedRingParams& ring,
                                         std::vector<ExponentPair> raw) {
  if (raw.empty()) throw std::invalid_argument("generator list is empty");
  for (const auto& p : raw)
    if (p.x < 0 || p.y < 0) throw std::invalid_argument("negative exponent");

  std::vector<ExponentPair> live;
  if (ring.is_truncated()) {
    for (const auto& p : raw)
      if (p.x < ring.x_trunc() && p.y < ring.y_bound()) live.push_back(p);
    if (live.empty()) throw ZeroIdeal("every generator vanishes under the truncation");
  } else {
    // Canonical box form: reduce y below b via x^a = ±y^b; a generator whose
    // x exponent then reaches a has no staircase representative.
    const Int a = ring.x_trunc(), b = ring.y_bound();
    for (auto p : raw) {
      if (p.y >= b) {
        p.x = checked_add(p.x, checked_mul(p.y / b, a));
        p.y %= b;
      }
      if (p.x >= a)
        throw std::invalid_argument("generator exponents leave the staircase box");
      live.push_back(p);
    }
  }

  // Divisible-pair pruning; exact duplicates collapse first, which is the
  // lexicographically-smaller tie break.
  std::sort(live.begin(), live.end(),
            [](const ExponentPair& l, const ExponentPair& r) {
              return l.x != r.x ? l.x > r.x : l.y < r.y;
            });
  live.erase(std::unique(live.begin(), live.end()), live.end());
  std::vector<ExponentPair> kept;
  for (std::size_t i = 0; i < live.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < live.size() && !dominated; ++j)
      dominated = i != j && live[j].x <= live[i].x && live[j].y <= live[i].y;
    if (!dominated) kept.push_back(live[i]);
  }

  StaircaseIdeal ideal;
  ideal.ring_ = ring;
  ideal.pairs_ = std::move(kept);
  return ideal;
}

StaircaseIdeal StaircaseIdeal::unchecked(const TruncatedRingParams& ring,
                                         std::vector<ExponentPair> pairs) {
  StaircaseIdeal ideal;
  ideal.ring_ = ring;
  ideal.pairs_ = std::move(pairs);
  return ideal;
}

bool is_normal_staircase(const TruncatedRingParams& ring, const std::vector<ExponentPair>& pairs) {
  if (pairs.empty()) return false;
  for (const auto& p : pairs)
    if (p.x < 0 || p.y < 0 || p.x >= ring.x_trunc() || p.y >= ring.y_bound()) return false;
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    if (pairs[i].x <= pairs[i + 1].x || pairs[i].y >= pairs[i + 1].y) return false;
  return true;
}

namespace {

// Divisibility of x^p y^q by the generator g modulo x^a = ±y^b: some shift k
// makes (p - ka, q + kb) componentwise at least g.
bool divides_relation(const ExponentPair& g, Int p, Int q, Int a, Int b) {
  Int hi = floor_div(p - g.x, a);
  Int lo = ceil_div(g.y - q, b);
  return lo <= hi;
}

}  // namespace

bool contains_monomial(const StaircaseIdeal& ideal, Int x_exp, Int y_exp) {
  const auto& ring = ideal.ring();
  if (ring.is_truncated()) {
    if (x_exp >= ring.x_trunc() || y_exp >= ring.y_bound()) return true;  // the zero element
    for (const auto& g : ideal.pairs())
      if (g.x <= x_exp && g.y <= y_exp) return true;
    return false;
  }
  for (const auto& g : ideal.pairs())
    if (divides_relation(g, x_exp, y_exp, ring.x_trunc(), ring.y_bound())) return true;
  return false;
}

bool contains_ideal(const StaircaseIdeal& outer, const StaircaseIdeal& inner) {
  if (!(outer.ring() == inner.ring()))
    throw RingMismatch("staircases live in different rings");
  for (const auto& g : inner.pairs())
    if (!contains_monomial(outer, g.x, g.y)) return false;
  return true;
}

StaircaseIdeal annihilator_of_x(const TruncatedRingParams& ring) {
  if (!ring.is_truncated())
    throw InfiniteRing("annihilator of x is trivial without a y truncation");
  return StaircaseIdeal::normalize(ring, {{ring.x_trunc() - 1, 0}});
}

StaircaseIdeal multiply_by_x(const StaircaseIdeal& ideal) {
  std::vector<ExponentPair> shifted = ideal.pairs();
  for (auto& p : shifted) p.x = checked_add(p.x, 1);
  return StaircaseIdeal::normalize(ideal.ring(), std::move(shifted));
}

StaircaseIdeal swap_axes(const StaircaseIdeal& ideal) {
  TruncatedRingParams mirrored = swap_axes(ideal.ring());
  std::vector<ExponentPair> pairs;
  pairs.reserve(ideal.pairs().size());
  for (auto it = ideal.pairs().rbegin(); it != ideal.pairs().rend(); ++it)
    pairs.push_back({it->y, it->x});
  return StaircaseIdeal::unchecked(mirrored, std::move(pairs));
}

StaircaseIdeal staircase_of_conductor(Int a, Int b) {
  if (b < 2 || a <= b) throw std::invalid_argument("needs a > b >= 2");
  if (std::gcd(a, b) != 1) throw NotCoprime("exponents must be coprime");

  auto s = NumericalSemigroup::from_generators({a, b});
  const std::vector<Int> values = conductor_ideal(s).minimal_generators();

  Int a_inv = -1;
  for (Int t = 0; t < b; ++t)
    if ((a % b) * t % b == 1) {
      a_inv = t;
      break;
    }

  std::vector<ExponentPair> pairs;
  for (Int n : values) {
    const Int p = (n % b) * a_inv % b;
    const Int rem = n - checked_mul(a, p);
    if (rem < 0 || rem % b != 0)
      throw RepresentationFailure("value " + std::to_string(n) + " has no box representation");
    const Int q = rem / b;
    if (q < 0 || q > a - 1)
      throw RepresentationFailure("x exponent of value " + std::to_string(n) +
                                  " leaves [0, a-1]");
    pairs.push_back({q, p});
  }

  auto ring = TruncatedRingParams::relation_ring(a, b, RelationSign::minus);
  auto st = StaircaseIdeal::normalize(ring, pairs);
  if (st.pairs().size() != values.size())
    throw RepresentationFailure("conductor staircase is not an antichain");
  return st;
}

}  // namespace stk
