#pragma once

#include <optional>
#include <vector>

#include "stk/numsgp.hpp"

namespace stk {

/// A monomial ideal of the semigroup ring, represented by its value set
/// E ⊆ ℕ with E + H ⊆ E: a sorted sporadic part below a minimal threshold T,
/// plus the full tail [T, ∞). Two ideals over the same ambient semigroup are
/// equal exactly when their (threshold, sporadic) normal forms are equal.
class SemigroupIdeal {
 public:
  /// E = values + H in normal form, minimal generators extracted.
  static SemigroupIdeal from_values(const NumericalSemigroup& ambient, std::vector<Int> values);

  static SemigroupIdeal unit(const NumericalSemigroup& ambient);
  static SemigroupIdeal principal(const NumericalSemigroup& ambient, Int value);
  /// Generated by every nonzero minimal generator of the ambient semigroup.
  static SemigroupIdeal maximal(const NumericalSemigroup& ambient);

  const NumericalSemigroup& ambient() const { return ambient_; }
  /// Minimal T with every integer >= T in the value set.
  Int threshold() const { return threshold_; }
  /// Sorted values below the threshold.
  const std::vector<Int>& sporadic() const { return sporadic_; }
  /// Sorted values e with e - h outside the set for every nonzero member h.
  const std::vector<Int>& minimal_generators() const { return min_gens_; }
  /// Whether the value set lies inside the ambient semigroup.
  bool is_integral() const { return integral_; }

  bool contains(Int n) const;

  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    return a.ambient_ == b.ambient_ && a.threshold_ == b.threshold_ && a.sporadic_ == b.sporadic_;
  }

 private:
  friend SemigroupIdeal colon(const SemigroupIdeal&, const SemigroupIdeal&);
  friend SemigroupIdeal conductor_ideal(const NumericalSemigroup&);

  // Normal form from a membership array; every n >= tail must be marked.
  static SemigroupIdeal from_membership(const NumericalSemigroup& ambient,
                                        const std::vector<bool>& member, Int tail);

  SemigroupIdeal() = default;

  NumericalSemigroup ambient_;
  Int threshold_ = 0;
  std::vector<Int> sporadic_;
  std::vector<Int> min_gens_;
  bool integral_ = false;
};

/// Value set {i + j : i, j minimal generators} + H. Throws AmbientMismatch.
SemigroupIdeal multiply(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs);

/// Colon inside the ring: {h in H : h + g in E(lhs) for every generator g of
/// rhs}. Throws AmbientMismatch.
SemigroupIdeal colon(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs);

/// n-fold product of the maximal ideal; n = 0 gives the unit ideal.
SemigroupIdeal max_ideal_power(const NumericalSemigroup& ambient, Int n);

/// Value set {n >= conductor(ambient)}.
SemigroupIdeal conductor_ideal(const NumericalSemigroup& ambient);

/// E(inner) ⊆ E(outer); ambients must agree.
bool value_subset(const SemigroupIdeal& inner, const SemigroupIdeal& outer);

/// Witness a when the value set is exactly the full tail {n >= a} (which is
/// precisely stability of the ideal under extension to the normalization);
/// nullopt otherwise.
std::optional<Int> stable_under_normalization(const SemigroupIdeal& ideal);

/// Least n with max_ideal_power(s, n) stable under normalization. Only
/// defined on the arithmetic family <a, ..., a+r>; throws NotArithmeticFamily.
Int stable_power_threshold(const NumericalSemigroup& s);

/// Least n >= 1 with m^(n+1) = x·m^n for x = t^x_value, searched up to the
/// conductor. Throws NoReductionFound when the search space is exhausted and
/// NotAMember when x_value is not a nonzero member.
Int reduction_exponent(const NumericalSemigroup& s, Int x_value);

}  // namespace stk
