#include "stk/valideal.hpp"

#include <algorithm>
#include <string>

namespace stk {

bool SemigroupIdeal::contains(Int n) const {
  if (n >= threshold_) return true;
  return std::binary_search(sporadic_.begin(), sporadic_.end(), n);
}

SemigroupIdeal SemigroupIdeal::from_membership(const NumericalSemigroup& ambient,
                                               const std::vector<bool>& member, Int tail) {
  SemigroupIdeal ideal;
  ideal.ambient_ = ambient;

  Int t = tail;
  while (t > 0 && member[static_cast<std::size_t>(t - 1)]) --t;
  ideal.threshold_ = t;
  for (Int n = 0; n < t; ++n)
    if (member[static_cast<std::size_t>(n)]) ideal.sporadic_.push_back(n);

  auto in_set = [&](Int n) {
    return n >= t || (n >= 0 && member[static_cast<std::size_t>(n)]);
  };

  // Any value >= t + multiplicity decomposes, so candidates stop there.
  const Int mult = ambient.multiplicity();
  auto minimal = [&](Int e) {
    for (Int h = mult; h <= e; ++h)
      if (ambient.contains(h) && in_set(e - h)) return false;
    return true;
  };
  for (Int e : ideal.sporadic_)
    if (minimal(e)) ideal.min_gens_.push_back(e);
  for (Int e = t; e < t + mult; ++e)
    if (minimal(e)) ideal.min_gens_.push_back(e);
  std::sort(ideal.min_gens_.begin(), ideal.min_gens_.end());

  ideal.integral_ = true;
  for (Int s : ideal.sporadic_)
    if (!ambient.contains(s)) ideal.integral_ = false;
  for (Int n = t; n < ambient.conductor() && ideal.integral_; ++n)
    if (!ambient.contains(n)) ideal.integral_ = false;

  return ideal;
}

SemigroupIdeal SemigroupIdeal::from_values(const NumericalSemigroup& ambient,
                                           std::vector<Int> values) {
  if (values.empty()) throw std::invalid_argument("value list is empty");
  for (Int v : values)
    if (v < 0) throw std::invalid_argument("ideal values must be nonnegative");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  const Int tail = checked_add(values.front(), ambient.conductor());
  std::vector<bool> member(static_cast<std::size_t>(tail) + 1, false);
  for (Int v : values)
    for (Int n = v; n <= tail; ++n)
      if (ambient.contains(n - v)) member[static_cast<std::size_t>(n)] = true;
  return from_membership(ambient, member, tail);
}

SemigroupIdeal SemigroupIdeal::unit(const NumericalSemigroup& ambient) {
  return from_values(ambient, {0});
}

SemigroupIdeal SemigroupIdeal::principal(const NumericalSemigroup& ambient, Int value) {
  return from_values(ambient, {value});
}

SemigroupIdeal SemigroupIdeal::maximal(const NumericalSemigroup& ambient) {
  return from_values(ambient, ambient.generators());
}

namespace {

void require_same_ambient(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
  if (!(lhs.ambient() == rhs.ambient()))
    throw AmbientMismatch("ideals live over different semigroups");
}

}  // namespace

SemigroupIdeal multiply(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
  require_same_ambient(lhs, rhs);
  std::vector<Int> sums;
  sums.reserve(lhs.minimal_generators().size() * rhs.minimal_generators().size());
  for (Int a : lhs.minimal_generators())
    for (Int b : rhs.minimal_generators()) sums.push_back(checked_add(a, b));
  return SemigroupIdeal::from_values(lhs.ambient(), std::move(sums));
}

SemigroupIdeal colon(const SemigroupIdeal& lhs, const SemigroupIdeal& rhs) {
  require_same_ambient(lhs, rhs);
  const NumericalSemigroup& ambient = lhs.ambient();
  const Int tail = std::max(lhs.threshold(), ambient.conductor());
  std::vector<bool> member(static_cast<std::size_t>(tail) + 1, false);
  for (Int h = 0; h <= tail; ++h) {
    if (!ambient.contains(h)) continue;
    bool ok = true;
    for (Int g : rhs.minimal_generators())
      if (!lhs.contains(checked_add(h, g))) {
        ok = false;
        break;
      }
    member[static_cast<std::size_t>(h)] = ok;
  }
  return SemigroupIdeal::from_membership(ambient, member, tail);
}

SemigroupIdeal max_ideal_power(const NumericalSemigroup& ambient, Int n) {
  if (n < 0) throw std::invalid_argument("negative ideal power");
  if (n == 0) return SemigroupIdeal::unit(ambient);
  // Iterated products with normal-form reduction at each step keep the
  // generator sets small.
  SemigroupIdeal m = SemigroupIdeal::maximal(ambient);
  SemigroupIdeal acc = m;
  for (Int k = 1; k < n; ++k) acc = multiply(acc, m);
  return acc;
}

SemigroupIdeal conductor_ideal(const NumericalSemigroup& ambient) {
  const Int c = ambient.conductor();
  std::vector<bool> member(static_cast<std::size_t>(c) + 1, false);
  member[static_cast<std::size_t>(c)] = true;
  return SemigroupIdeal::from_membership(ambient, member, c);
}

bool value_subset(const SemigroupIdeal& inner, const SemigroupIdeal& outer) {
  require_same_ambient(inner, outer);
  for (Int s : inner.sporadic())
    if (!outer.contains(s)) return false;
  for (Int n = inner.threshold(); n < outer.threshold(); ++n)
    if (!outer.contains(n)) return false;
  return true;
}

std::optional<Int> stable_under_normalization(const SemigroupIdeal& ideal) {
  if (!ideal.sporadic().empty()) return std::nullopt;
  return ideal.threshold();
}

Int stable_power_threshold(const NumericalSemigroup& s) {
  if (!as_arithmetic_family(s))
    throw NotArithmeticFamily("minimal generators are not consecutive");
  for (Int n = 0;; ++n) {
    if (stable_under_normalization(max_ideal_power(s, n))) return n;
    if (n > s.conductor() + 1)
      throw Error("no stable power found below the conductor bound");
  }
}

Int reduction_exponent(const NumericalSemigroup& s, Int x_value) {
  if (x_value <= 0 || !s.contains(x_value))
    throw NotAMember("reduction element must be a nonzero member");
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  const SemigroupIdeal x = SemigroupIdeal::principal(s, x_value);
  const Int bound = std::max<Int>(s.conductor(), 1);
  SemigroupIdeal power = m;
  for (Int n = 1; n <= bound; ++n) {
    SemigroupIdeal next = multiply(m, power);
    if (next == multiply(x, power)) return n;
    power = std::move(next);
  }
  throw NoReductionFound("m^(n+1) = x*m^n fails for every n up to the conductor");
}

}  // namespace stk
