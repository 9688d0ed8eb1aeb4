#include "stk/extcalc.hpp"

#include <string>

namespace stk {

namespace {

void require_primary_form(const StaircaseIdeal& ideal) {
  if (ideal.ring().is_truncated())
    throw std::invalid_argument("reduction runs in the relation ring x^a ± y^b");
  if (ideal.pairs().size() < 2)
    throw TooFewGenerators("primary form needs at least two generators");
  if (ideal.pairs().front().y != 0 || ideal.pairs().back().x != 0)
    throw NotPrimaryForm("staircase must contain a pure power of each variable");
}

// The x-oriented step; `oriented` already has the active axis in the x role.
DivisionStep step_x_oriented(const StaircaseIdeal& oriented, Axis axis_label) {
  require_primary_form(oriented);
  if (oriented.is_maximal_ideal())
    throw std::invalid_argument("ideal is already the maximal ideal (x, y)");
  const auto& pairs = oriented.pairs();
  if (pairs.front().x < 2)
    throw std::invalid_argument("leading axis exponent is 1; swap axes first");

  const TruncatedRingParams& ring = oriented.ring();
  const Int qe = pairs.back().y;  // pure opposite-axis generator, kills the quotient

  // Divide every non-pure generator by the axis variable.
  std::vector<ExponentPair> divided_pairs(pairs.begin(), pairs.end() - 1);
  for (auto& p : divided_pairs) --p.x;
  StaircaseIdeal divided = StaircaseIdeal::normalize(ring, std::move(divided_pairs));

  const TruncatedRingParams step_ring = TruncatedRingParams::truncated(ring.x_trunc(), qe);
  const StaircaseIdeal ann = annihilator_of_x(step_ring);
  const StaircaseIdeal image = StaircaseIdeal::normalize(step_ring, pairs);
  const bool contained = contains_ideal(image, ann);
  if (!contained)
    throw HypothesisViolated("annihilator of the axis variable is not contained in the ideal");

  std::vector<ExponentPair> after_pairs = divided.pairs();
  after_pairs.push_back({0, qe});
  StaircaseIdeal after = StaircaseIdeal::normalize(ring, std::move(after_pairs));

  // The decomposition before = axis * divided + pure generator must be exact.
  std::vector<ExponentPair> recomposed = multiply_by_x(divided).pairs();
  recomposed.push_back({0, qe});
  if (!(StaircaseIdeal::normalize(ring, std::move(recomposed)) == oriented))
    throw Error("internal: division step decomposition failed to recompose");

  return DivisionStep{axis_label,
                      qe,
                      step_ring,
                      oriented,
                      std::move(divided),
                      std::move(after),
                      AnnihilatorCheck{ann.pairs().front(), contained}};
}

}  // namespace

DivisionStep division_step(const StaircaseIdeal& ideal, Axis axis) {
  return step_x_oriented(axis == Axis::x ? ideal : swap_axes(ideal), axis);
}

ReductionCertificate reduce_to_maximal(const StaircaseIdeal& ideal) {
  require_primary_form(ideal);
  const Int bound = ideal.pairs().front().x + ideal.pairs().back().y +
                    static_cast<Int>(ideal.pairs().size());

  std::vector<DivisionStep> steps;
  StaircaseIdeal current = ideal;
  bool swapped = false;
  while (!current.is_maximal_ideal()) {
    if (static_cast<Int>(steps.size()) >= bound)
      throw NonTermination("step count exceeded a_1 + b_n + n = " + std::to_string(bound));
    if (current.pairs().size() == 2 && current.pairs().front().x == 1) {
      // Two-generator endgame (x, y^k): continue along the other axis.
      if (swapped) throw Error("internal: axis swap requested twice");
      current = swap_axes(current);
      swapped = true;
    }
    DivisionStep step = step_x_oriented(current, swapped ? Axis::y : Axis::x);
    current = step.ideal_after;
    steps.push_back(std::move(step));
  }

  StaircaseIdeal final_ideal = swapped ? swap_axes(current) : current;
  return ReductionCertificate{ideal.ring(), ideal, std::move(steps), std::move(final_ideal)};
}

namespace {

// splitmix64; fixed here so seeded fuzz streams are identical everywhere.
std::uint64_t next_u64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Int draw(std::uint64_t& state, Int lo, Int hi) {
  return lo + static_cast<Int>(next_u64(state) % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

StaircaseIdeal sample_primary_staircase(std::uint64_t seed) {
  std::uint64_t state = seed;
  const Int a = draw(state, 2, 12);
  const Int b = draw(state, 2, 12);
  const Int n = draw(state, 2, std::min({Int{6}, a, b}));

  // n-1 distinct positive exponents per axis, plus the mandatory zeros.
  auto pick_distinct = [&](Int bound, Int count) {
    std::vector<Int> all;
    for (Int v = 1; v < bound; ++v) all.push_back(v);
    for (Int i = static_cast<Int>(all.size()) - 1; i > 0; --i)
      std::swap(all[static_cast<std::size_t>(i)],
                all[static_cast<std::size_t>(draw(state, 0, i))]);
    all.resize(static_cast<std::size_t>(count));
    std::sort(all.begin(), all.end());
    return all;
  };
  std::vector<Int> xs = pick_distinct(a, n - 1);  // ascending, paired in reverse
  std::vector<Int> ys = pick_distinct(b, n - 1);

  std::vector<ExponentPair> pairs;
  pairs.push_back({xs.back(), 0});
  for (Int i = n - 2; i >= 1; --i)
    pairs.push_back({xs[static_cast<std::size_t>(i - 1)],
                     ys[static_cast<std::size_t>(n - 2 - i)]});
  pairs.push_back({0, ys.back()});

  auto ring = TruncatedRingParams::relation_ring(
      a, b, next_u64(state) % 2 ? RelationSign::minus : RelationSign::plus);
  return StaircaseIdeal::normalize(ring, std::move(pairs));
}

}  // namespace stk
