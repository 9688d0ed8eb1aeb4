#pragma once

#include <optional>
#include <vector>

#include "stk/valideal.hpp"

namespace stk {

enum class RelationSign { plus, minus, none };

/// Ambient ring of a staircase: the truncated ring k[x]/(x^a) ⊗ k[y]/(y^m)
/// when y_trunc is finite (sign none), or A[x,y]/(x^a ± y^b) when
/// untruncated, with b carried as relation_y_exp.
class TruncatedRingParams {
 public:
  TruncatedRingParams() = default;  // degenerate k[x]/(x^2) ⊗ k[y]/(y)

  static TruncatedRingParams truncated(Int x_trunc, Int y_trunc);
  static TruncatedRingParams relation_ring(Int x_trunc, Int y_exp, RelationSign sign);

  Int x_trunc() const { return x_trunc_; }
  std::optional<Int> y_trunc() const {
    return sign_ == RelationSign::none ? std::optional<Int>{y_bound_} : std::nullopt;
  }
  Int relation_y_exp() const { return sign_ == RelationSign::none ? 0 : y_bound_; }
  RelationSign sign() const { return sign_; }
  bool is_truncated() const { return sign_ == RelationSign::none; }
  /// y_trunc when finite, the relation exponent b otherwise.
  Int y_bound() const { return y_bound_; }

  friend bool operator==(const TruncatedRingParams&, const TruncatedRingParams&) = default;

 private:
  Int x_trunc_ = 2;
  Int y_bound_ = 1;
  RelationSign sign_ = RelationSign::none;
};

/// x^a ± y^b becomes y^b ± x^a. Relation rings only.
TruncatedRingParams swap_axes(const TruncatedRingParams& ring);

struct ExponentPair {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Monomial ideal in staircase normal form: generator exponent pairs sorted
/// by strictly decreasing x and strictly increasing y, none divisible by
/// another, all below the truncation bounds.
class StaircaseIdeal {
 public:
  StaircaseIdeal() = default;  // unit ideal of the degenerate default ring

  /// Drops generators killed by the truncation, removes divisible pairs,
  /// sorts into staircase order. Throws ZeroIdeal when every generator
  /// vanishes, std::invalid_argument on empty input, negative exponents, or
  /// a relation-ring pair outside the box [0,a) x [0,b).
  static StaircaseIdeal normalize(const TruncatedRingParams& ring, std::vector<ExponentPair> raw);

  /// No validation or pruning; for rebuilding values whose invariants are
  /// established elsewhere (verification re-checks them explicitly).
  static StaircaseIdeal unchecked(const TruncatedRingParams& ring, std::vector<ExponentPair> pairs);

  const TruncatedRingParams& ring() const { return ring_; }
  const std::vector<ExponentPair>& pairs() const { return pairs_; }

  bool is_maximal_ideal() const {
    return pairs_.size() == 2 && pairs_[0] == ExponentPair{1, 0} && pairs_[1] == ExponentPair{0, 1};
  }

  friend bool operator==(const StaircaseIdeal&, const StaircaseIdeal&) = default;

 private:
  TruncatedRingParams ring_;
  std::vector<ExponentPair> pairs_{{0, 0}};
};

/// Whether `pairs` is a valid staircase normal form for `ring`.
bool is_normal_staircase(const TruncatedRingParams& ring, const std::vector<ExponentPair>& pairs);

/// Monomial membership: x^p y^q lies in the ideal. In a truncated ring this
/// is truncation (the monomial is zero) or divisibility by some generator;
/// in a relation ring divisibility is taken modulo x^a = ±y^b.
bool contains_monomial(const StaircaseIdeal& ideal, Int x_exp, Int y_exp);

/// Every generator of `inner` lies in `outer`. Throws RingMismatch.
bool contains_ideal(const StaircaseIdeal& outer, const StaircaseIdeal& inner);

/// Annihilator of x in the truncated ring: the principal ideal (x^(a-1)).
/// Throws InfiniteRing when the ring is not truncated in y.
StaircaseIdeal annihilator_of_x(const TruncatedRingParams& ring);

/// Shifts every generator by one x power and re-normalizes; collapsing to
/// zero under the truncation throws ZeroIdeal.
StaircaseIdeal multiply_by_x(const StaircaseIdeal& ideal);

/// Mirror of a relation-ring staircase with the variable roles exchanged.
StaircaseIdeal swap_axes(const StaircaseIdeal& ideal);

/// Staircase of the conductor ideal of <a, b> inside A[x,y]/(x^a - y^b),
/// where x carries value b and y carries value a: each minimal generator
/// value n is written n = a*p + b*q with 0 <= p <= b-1, and the pair
/// (x_exp, y_exp) = (q, p) is emitted. Throws NotCoprime when gcd(a,b) != 1
/// and RepresentationFailure when some q leaves [0, a-1].
StaircaseIdeal staircase_of_conductor(Int a, Int b);

}  // namespace stk
