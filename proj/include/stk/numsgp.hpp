#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stk/errors.hpp"
#include "stk/util.hpp"

namespace stk {

/// A cofinite additive subsemigroup of the nonnegative integers, kept in
/// minimal-generator normal form. Immutable after construction; all queries
/// are pure, so values can be shared across threads freely.
class NumericalSemigroup {
 public:
  /// The full semigroup <1>.
  NumericalSemigroup() : generators_{1}, conductor_{0}, table_{true, true} {}

  /// Builds the semigroup generated by `gens` (minimal generators extracted,
  /// conductor computed by dynamic programming over the membership table).
  /// Throws NotCofinite when gcd(gens) != 1, std::invalid_argument on an
  /// empty list or nonpositive entries.
  static NumericalSemigroup from_generators(std::vector<Int> gens);

  /// Minimal generating set, strictly increasing.
  const std::vector<Int>& generators() const { return generators_; }

  /// Least c with every integer >= c a member. 0 for the full semigroup.
  Int conductor() const { return conductor_; }

  /// conductor - 1: the largest gap, or -1 for the full semigroup.
  Int frobenius() const { return conductor_ - 1; }

  /// Smallest nonzero member.
  Int multiplicity() const { return generators_.front(); }

  bool contains(Int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return table_[static_cast<std::size_t>(n)];
  }

  /// For each residue class mod m, the least member in that class; the result
  /// has length m. Throws NotAMember unless m is a nonzero member.
  std::vector<Int> apery_set(Int m) const;

  /// Sorted list of the nonmembers. Empty for the full semigroup; otherwise
  /// the last entry is the Frobenius number.
  std::vector<Int> gaps() const;

  /// Membership bit table over [0, conductor + max generator].
  const std::vector<bool>& membership_table() const { return table_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Int> generators_;
  Int conductor_ = 0;
  std::vector<bool> table_;
};

/// Conductor of <a, a+1, ..., a+r> in closed form, without building the
/// semigroup: ceil((a-1)/r) * a. Requires a >= 2, r >= 1.
Int conductor_arithmetic(Int a, Int r);

/// The semigroup <a, a+1, ..., a+r>. Requires a >= 1, r >= 1.
NumericalSemigroup arithmetic_semigroup(Int a, Int r);

/// If the minimal generators form a consecutive run a, a+1, ..., a+r this is
/// (a, r); <1> is reported as (1, 1). Otherwise nullopt.
std::optional<std::pair<Int, Int>> as_arithmetic_family(const NumericalSemigroup& s);

}  // namespace stk
