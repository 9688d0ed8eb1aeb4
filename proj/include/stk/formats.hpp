#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stk/truncmono.hpp"

namespace stk {

// Text formats used on the CLI surface. Parse errors throw
// std::invalid_argument with a short description.
//
//   semigroup   "5,6"
//   ideal       "gens=10,11 @ sgp=5,6"
//   ring        "a=5,b=3,sign=-"  or  "a=5,m=2"
//   staircase   "3,0;1,1;0,2"            (x_exp,y_exp pairs)
//   value set   "{5,6,10} ∪ [20,∞)"      (printing only)

std::vector<Int> parse_int_list(std::string_view text, char sep = ',');
NumericalSemigroup parse_semigroup(std::string_view text);
SemigroupIdeal parse_ideal(std::string_view text);
TruncatedRingParams parse_ring(std::string_view text);
std::vector<ExponentPair> parse_pair_list(std::string_view text);
StaircaseIdeal parse_staircase(const TruncatedRingParams& ring, std::string_view text);

std::string format_int_list(const std::vector<Int>& values, char sep = ',');
std::string format_value_set(const SemigroupIdeal& ideal);
std::string format_pair_list(const std::vector<ExponentPair>& pairs);
std::string format_ring(const TruncatedRingParams& ring);

}  // namespace stk
