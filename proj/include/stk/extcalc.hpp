#pragma once

#include "stk/certify.hpp"

namespace stk {

/// One division step along `axis` on a primary-form staircase (pure powers of
/// both variables present: leading y exponent 0, trailing x exponent 0).
/// Throws NotPrimaryForm / TooFewGenerators on malformed input,
/// HypothesisViolated when the recomputed annihilator containment fails, and
/// std::invalid_argument when the ideal is already maximal or the leading
/// axis exponent is 1 (the step would empty the pure axis generator).
DivisionStep division_step(const StaircaseIdeal& ideal, Axis axis);

/// Full reduction of a primary-form staircase to (x, y), one recorded step
/// per division: x steps until the pure x exponent reaches 1, then the axis
/// swaps for the two-generator endgame. The step count never exceeds
/// a_1 + b_n + n; crossing that bound throws NonTermination.
ReductionCertificate reduce_to_maximal(const StaircaseIdeal& ideal);

/// Deterministic valid primary-form staircase drawn from `seed` (platform
/// independent): relation exponents a, b in [2, 12], generator count in
/// [2, min(6, a, b)]. The fuzz domain of the reduce surfaces.
StaircaseIdeal sample_primary_staircase(std::uint64_t seed);

}  // namespace stk
