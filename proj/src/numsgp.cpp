#include "stk/numsgp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stk {

namespace {

constexpr Int kTableLimit = Int{1} << 30;

std::vector<bool> membership_dp(const std::vector<Int>& gens, Int bound) {
  if (bound >= kTableLimit) throw Overflow("membership table bound exceeds supported size");
  std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
  table[0] = true;
  for (Int n = 1; n <= bound; ++n) {
    for (Int g : gens) {
      if (g > n) break;
      if (table[static_cast<std::size_t>(n - g)]) {
        table[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return table;
}

// First index p <= bound - run_len + 1 with table true on [p, p + run_len).
Int find_run(const std::vector<bool>& table, Int run_len) {
  Int run = 0;
  for (std::size_t n = 0; n < table.size(); ++n) {
    run = table[n] ? run + 1 : 0;
    if (run == run_len) return static_cast<Int>(n) - run_len + 1;
  }
  return -1;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens) {
  if (gens.empty()) throw std::invalid_argument("generator list is empty");
  for (Int g : gens)
    if (g <= 0) throw std::invalid_argument("generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Int d = 0;
  for (Int g : gens) d = std::gcd(d, g);
  if (d != 1) throw NotCofinite("gcd of generators is " + std::to_string(d));

  const Int a0 = gens.front();

  // Membership bound: the least product of a coprime generator pair when one
  // exists; otherwise start from 2*min*max and double until a run of a0
  // consecutive members shows up (everything above such a run is a member).
  Int bound = -1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (std::gcd(gens[i], gens[j]) == 1) {
        Int p = checked_mul(gens[i], gens[j]);
        if (bound < 0 || p < bound) bound = p;
      }
  if (bound < 0) bound = checked_mul(checked_mul(Int{2}, a0), gens.back());

  std::vector<bool> table;
  Int run_start = -1;
  for (;;) {
    table = membership_dp(gens, bound);
    run_start = find_run(table, a0);
    if (run_start >= 0 && run_start + a0 <= bound) break;
    bound = checked_mul(bound, 2);
  }

  // Everything >= run_start is a member; trim down to the minimal conductor.
  Int c = run_start;
  while (c > 0 && table[static_cast<std::size_t>(c - 1)]) --c;

  // Minimal generators: members of [1, c + a0] not expressible as a sum of
  // two nonzero members.
  std::vector<Int> minimal;
  for (Int n = 1; n <= c + a0; ++n) {
    if (!table[static_cast<std::size_t>(n)]) continue;
    bool decomposable = false;
    for (Int h = a0; h <= n - a0 && !decomposable; ++h)
      decomposable = table[static_cast<std::size_t>(h)] && table[static_cast<std::size_t>(n - h)];
    if (!decomposable) minimal.push_back(n);
  }

  NumericalSemigroup s;
  s.conductor_ = c;
  s.generators_ = std::move(minimal);

  // Final table sized to [0, conductor + max minimal generator].
  const Int len = checked_add(c, s.generators_.back());
  if (len <= bound) {
    table.resize(static_cast<std::size_t>(len) + 1);
    s.table_ = std::move(table);
  } else {
    s.table_ = membership_dp(s.generators_, len);
  }
  return s;
}

std::vector<Int> NumericalSemigroup::apery_set(Int m) const {
  if (m <= 0 || !contains(m)) throw NotAMember("apery_set needs a nonzero member");
  std::vector<Int> least(static_cast<std::size_t>(m));
  for (Int rho = 0; rho < m; ++rho) {
    Int n = rho;
    while (!contains(n)) n = checked_add(n, m);
    least[static_cast<std::size_t>(rho)] = n;
  }
  return least;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int n = 0; n < conductor_; ++n)
    if (!table_[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

Int conductor_arithmetic(Int a, Int r) {
  if (a < 2) throw std::invalid_argument("conductor_arithmetic needs a >= 2");
  if (r < 1) throw std::invalid_argument("conductor_arithmetic needs r >= 1");
  return checked_mul(ceil_div(a - 1, r), a);
}

NumericalSemigroup arithmetic_semigroup(Int a, Int r) {
  if (a < 1 || r < 1) throw std::invalid_argument("arithmetic_semigroup needs a, r >= 1");
  std::vector<Int> gens;
  for (Int k = 0; k <= r; ++k) gens.push_back(checked_add(a, k));
  return NumericalSemigroup::from_generators(std::move(gens));
}

std::optional<std::pair<Int, Int>> as_arithmetic_family(const NumericalSemigroup& s) {
  const auto& g = s.generators();
  if (g.size() == 1) return g.front() == 1 ? std::optional{std::pair<Int, Int>{1, 1}} : std::nullopt;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i + 1] != g[i] + 1) return std::nullopt;
  return std::pair<Int, Int>{g.front(), static_cast<Int>(g.size()) - 1};
}

}  // namespace stk
