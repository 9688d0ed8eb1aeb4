// Acceptance suite: one line per criterion, exact checks only, each with its
// runtime budget enforced. Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stk/extcalc.hpp"
#include "stk/formats.hpp"

using stk::Axis;
using stk::ExponentPair;
using stk::Int;
using stk::NumericalSemigroup;
using stk::ReductionCertificate;
using stk::SemigroupIdeal;
using stk::StaircaseIdeal;
using stk::TruncatedRingParams;

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Int draw(std::uint64_t& s, Int lo, Int hi) {
  return lo + static_cast<Int>(splitmix(s) % static_cast<std::uint64_t>(hi - lo + 1));
}

// ---------------------------------------------------------------------------

bool criterion_conductor_closed_form(std::string& detail) {
  Int instances = 0, failures = 0;
  for (Int a = 2; a <= 60; ++a)
    for (Int r = 1; r <= a - 1; ++r) {
      ++instances;
      if (stk::conductor_arithmetic(a, r) != stk::arithmetic_semigroup(a, r).conductor())
        ++failures;
    }
  detail = std::to_string(instances) + " instances, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion_two_generator_conductor(std::string& detail) {
  Int instances = 0, failures = 0;
  for (Int b = 2; b <= 39; ++b)
    for (Int a = b + 1; a <= 40; ++a) {
      if (std::gcd(a, b) != 1) continue;
      ++instances;
      if (NumericalSemigroup::from_generators({a, b}).conductor() != (a - 1) * (b - 1))
        ++failures;
    }
  detail = std::to_string(instances) + " coprime pairs, " + std::to_string(failures) +
           " failures";
  return failures == 0;
}

bool criterion_stable_powers_and_conductor_ideal(std::string& detail) {
  Int instances = 0, failures = 0;
  for (Int a = 2; a <= 30; ++a)
    for (Int r = 1; r <= a - 1; ++r) {
      ++instances;
      auto s = stk::arithmetic_semigroup(a, r);
      const Int u = stk::ceil_div(a - 1, r);
      bool ok = true;
      for (Int n = 1; n <= u + 3; ++n)
        ok = ok && (stk::stable_under_normalization(stk::max_ideal_power(s, n)).has_value() ==
                    (n >= u));
      ok = ok && stk::conductor_ideal(s) == stk::max_ideal_power(s, u);
      if (!ok) ++failures;
    }
  detail = std::to_string(instances) + " instances, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion_tail_detection_random(std::string& detail) {
  std::uint64_t rng = 0x5eed0004;
  Int checked = 0, failures = 0, tails_seen = 0;
  for (int si = 0; si < 20; ++si) {
    NumericalSemigroup s = [&] {
      for (;;) {
        std::vector<Int> gens;
        Int n = draw(rng, 2, 4);
        for (Int i = 0; i < n; ++i) gens.push_back(draw(rng, 2, 40));
        Int g = 0;
        for (Int v : gens) g = std::gcd(g, v);
        if (g == 1) return NumericalSemigroup::from_generators(gens);
      }
    }();
    for (int ii = 0; ii < 500; ++ii) {
      std::vector<Int> vals;
      if (ii % 10 == 9) {
        // salt the sample with genuine full tails
        Int shift = draw(rng, 0, 10);
        for (Int k = 0; k < s.multiplicity(); ++k)
          vals.push_back(s.conductor() + shift + k);
      } else {
        Int n = draw(rng, 1, 4);
        for (Int i = 0; i < n; ++i) vals.push_back(draw(rng, 0, 50));
      }
      auto ideal = SemigroupIdeal::from_values(s, vals);

      // direct set comparison, straight from the defining closure
      Int m0 = *std::min_element(vals.begin(), vals.end());
      Int bound = ideal.threshold() + s.multiplicity() + 2;
      std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
      for (Int v : vals)
        for (Int n = v; n <= bound; ++n)
          if (s.contains(n - v)) member[static_cast<std::size_t>(n)] = true;
      bool tail = true;
      for (Int n = m0; n <= bound; ++n) tail = tail && member[static_cast<std::size_t>(n)];

      auto witness = stk::stable_under_normalization(ideal);
      ++checked;
      if (witness.has_value() != tail || (witness && *witness != m0)) ++failures;
      if (tail) ++tails_seen;
    }
  }
  detail = std::to_string(checked) + " ideals (" + std::to_string(tails_seen) +
           " full tails), " + std::to_string(failures) + " failures";
  return failures == 0 && tails_seen > 0 && tails_seen < checked;
}

bool criterion_colon_of_powers(std::string& detail) {
  Int instances = 0, failures = 0;
  for (Int a = 2; a <= 20; ++a)
    for (Int r = 1; r <= a - 1; ++r) {
      ++instances;
      auto s = stk::arithmetic_semigroup(a, r);
      const Int u = stk::ceil_div(a - 1, r);
      const Int pmax = 2 * u + 3;
      std::vector<SemigroupIdeal> powers;
      for (Int p = 0; p <= pmax; ++p) powers.push_back(stk::max_ideal_power(s, p));
      bool ok = true;
      for (Int p = 0; p <= pmax && ok; ++p)
        for (Int q = 0; q <= p && ok; ++q)
          ok = stk::colon(powers[static_cast<std::size_t>(p)],
                          powers[static_cast<std::size_t>(q)]) ==
               powers[static_cast<std::size_t>(p - q)];
      if (!ok) ++failures;
    }
  detail = std::to_string(instances) + " instances, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion_reduction_exponent(std::string& detail) {
  Int instances = 0, failures = 0;
  for (Int a = 2; a <= 20; ++a)
    for (Int r = 1; r <= a - 1; ++r) {
      ++instances;
      auto s = stk::arithmetic_semigroup(a, r);
      bool ok = true;
      try {
        const Int n0 = stk::reduction_exponent(s, a);
        const SemigroupIdeal x = SemigroupIdeal::principal(s, a);
        for (Int n = 1; n <= n0 + 2; ++n) {
          bool equal =
              stk::max_ideal_power(s, n + 1) == stk::multiply(x, stk::max_ideal_power(s, n));
          ok = ok && (equal == (n >= n0));
        }
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) ++failures;
    }
  detail = std::to_string(instances) + " instances, " + std::to_string(failures) + " failures";
  return failures == 0;
}

std::vector<std::pair<Int, Int>> coprime_pairs_up_to_40() {
  std::vector<std::pair<Int, Int>> pairs;
  for (Int b = 2; b <= 39; ++b)
    for (Int a = b + 1; a <= 40; ++a)
      if (std::gcd(a, b) == 1) pairs.push_back({a, b});
  return pairs;
}

bool criterion_conductor_staircase(std::string& detail) {
  Int instances = 0, failures = 0;
  for (auto [a, b] : coprime_pairs_up_to_40()) {
    ++instances;
    bool ok = true;
    try {
      auto st = stk::staircase_of_conductor(a, b);
      const auto& ps = st.pairs();
      ok = ps.size() >= 2 && stk::is_normal_staircase(st.ring(), ps) && ps.front().y == 0 &&
           ps.back().x == 0;
      for (const auto& p : ps) ok = ok && p.x <= a - 1 && p.y <= b - 1;
      auto s = NumericalSemigroup::from_generators({a, b});
      std::vector<Int> values;
      for (const auto& p : ps)
        values.push_back(stk::checked_add(stk::checked_mul(b, p.x), stk::checked_mul(a, p.y)));
      ok = ok && SemigroupIdeal::from_values(s, values) == stk::conductor_ideal(s);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++failures;
  }
  detail = std::to_string(instances) + " staircases, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool reduce_and_verify(const StaircaseIdeal& ideal) {
  const Int bound =
      ideal.pairs().front().x + ideal.pairs().back().y + static_cast<Int>(ideal.pairs().size());
  auto cert = stk::reduce_to_maximal(ideal);
  return static_cast<Int>(cert.steps.size()) <= bound && cert.final_ideal.is_maximal_ideal() &&
         stk::verify(cert).overall();
}

bool criterion_reduction_engine(std::string& detail) {
  Int instances = 0, failures = 0;
  for (auto [a, b] : coprime_pairs_up_to_40()) {
    ++instances;
    if (!reduce_and_verify(stk::staircase_of_conductor(a, b))) ++failures;
  }
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    ++instances;
    if (!reduce_and_verify(stk::sample_primary_staircase(seed))) ++failures;
  }
  detail = std::to_string(instances) + " reductions, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// --- criterion 9: adversarial mutations --------------------------------------

struct MutationStats {
  Int semantic = 0;
  Int semantic_rejected = 0;
  Int inert = 0;
  Int inert_accepted = 0;
  Int unexpected_accept = 0;
};

// Exponent maxima split by recording orientation: initial/final and axis-x
// steps live in the original ring, axis-y steps in the mirrored one.
struct CertProfile {
  bool has_x_steps = false;
  bool has_y_steps = false;
  Int max_x_r0 = 0;
  Int max_y_r0 = 0;
  Int max_x_sw = 0;
  Int max_y_sw = 0;
};

CertProfile profile_certificate(const nlohmann::json& doc) {
  CertProfile p;
  auto absorb = [](const nlohmann::json& pairs, Int& mx, Int& my) {
    for (const auto& pair : pairs) {
      mx = std::max(mx, pair[0].get<Int>());
      my = std::max(my, pair[1].get<Int>());
    }
  };
  absorb(doc["initial_ideal"], p.max_x_r0, p.max_y_r0);
  absorb(doc["final_ideal"], p.max_x_r0, p.max_y_r0);
  for (const auto& step : doc["steps"]) {
    bool is_x = step["axis"] == "x";
    (is_x ? p.has_x_steps : p.has_y_steps) = true;
    Int& mx = is_x ? p.max_x_r0 : p.max_x_sw;
    Int& my = is_x ? p.max_y_r0 : p.max_y_sw;
    absorb(step["ideal_before"], mx, my);
    absorb(step["divided_ideal"], mx, my);
    absorb(step["ideal_after"], mx, my);
  }
  return p;
}

// Accepting a mutated certificate is only legitimate when the mutated field
// provably cannot enter any step check: the relation sign is carried but
// never used, and a relation exponent whose axis is never divided along only
// bounds the staircase box. Everything else must be rejected.
bool mutation_is_inert(const std::string& pointer, const nlohmann::json& doc,
                       const nlohmann::json& new_value) {
  if (pointer == "/ring/sign") return true;
  const CertProfile p = profile_certificate(doc);
  if (pointer == "/ring/b" && !p.has_y_steps) {
    Int b = new_value.get<Int>();
    return b >= 2 && p.max_y_r0 < b;  // the box must stay valid to load at all
  }
  if (pointer == "/ring/a" && !p.has_x_steps) {
    Int a = new_value.get<Int>();
    return a >= 2 && p.max_x_r0 < a && p.max_y_sw < a;
  }
  return false;
}

void try_mutation(const nlohmann::json& doc, const std::string& pointer,
                  const nlohmann::json& new_value, MutationStats& stats) {
  nlohmann::json copy = doc;
  copy[nlohmann::json::json_pointer(pointer)] = new_value;
  const bool inert = mutation_is_inert(pointer, doc, new_value);
  if (inert)
    ++stats.inert;
  else
    ++stats.semantic;
  bool accepted = false;
  try {
    accepted = stk::verify(stk::deserialize(copy.dump())).overall();
  } catch (const stk::MalformedCertificate&) {
    accepted = false;
  }
  if (inert && accepted) ++stats.inert_accepted;
  if (!inert && !accepted) ++stats.semantic_rejected;
  if (!inert && accepted) ++stats.unexpected_accept;
}

void mutate_all_fields(const nlohmann::json& doc, MutationStats& stats) {
  // every integer leaf (+1 / -1) and every enum-like string leaf
  std::function<void(const nlohmann::json&, const std::string&)> walk =
      [&](const nlohmann::json& node, const std::string& pointer) {
        if (node.is_object()) {
          for (const auto& [key, value] : node.items()) walk(value, pointer + "/" + key);
        } else if (node.is_array()) {
          for (std::size_t i = 0; i < node.size(); ++i)
            walk(node[i], pointer + "/" + std::to_string(i));
        } else if (node.is_number_integer()) {
          for (Int delta : {Int{1}, Int{-1}})
            try_mutation(doc, pointer, nlohmann::json(node.get<Int>() + delta), stats);
        } else if (node.is_string()) {
          std::string flipped;
          if (node == "x") flipped = "y";
          if (node == "y") flipped = "x";
          if (node == "-") flipped = "+";
          if (node == "+") flipped = "-";
          if (!flipped.empty()) try_mutation(doc, pointer, nlohmann::json(flipped), stats);
        }
      };
  walk(doc, "");
}

bool criterion_adversarial_mutations(std::string& detail) {
  // 100 passing certificates: conductor staircases first, sampled staircases
  // with a != b and at least one step for the rest.
  std::vector<ReductionCertificate> certs;
  for (auto [a, b] : coprime_pairs_up_to_40()) {
    if (certs.size() >= 60) break;
    auto cert = stk::reduce_to_maximal(stk::staircase_of_conductor(a, b));
    if (!cert.steps.empty()) certs.push_back(std::move(cert));
  }
  for (std::uint64_t seed = 5000; certs.size() < 100; ++seed) {
    auto ideal = stk::sample_primary_staircase(seed);
    if (ideal.ring().x_trunc() == ideal.ring().y_bound()) continue;
    auto cert = stk::reduce_to_maximal(ideal);
    if (cert.steps.empty()) continue;
    certs.push_back(std::move(cert));
  }

  MutationStats stats;
  bool all_pass = true;
  for (const auto& cert : certs) {
    if (!stk::verify(cert).overall()) all_pass = false;
    mutate_all_fields(nlohmann::json::parse(stk::serialize(cert)), stats);
  }

  // the specific annihilator-containment forgery must fail clause (iii)
  auto forged = stk::reduce_to_maximal(stk::staircase_of_conductor(5, 3));
  forged.steps[0].annihilator_check.ann_generator = {3, 0};
  forged.steps[0].ideal_before =
      StaircaseIdeal::unchecked(forged.steps[0].ideal_before.ring(), {{4, 1}, {0, 2}});
  auto report = stk::verify(forged);
  bool forgery_caught = !report.overall() && !report.steps.empty() &&
                        !report.steps[0].annihilator_ok;

  std::ostringstream os;
  os << certs.size() << " certificates, " << stats.semantic << " semantic mutations ("
     << stats.semantic_rejected << " rejected), " << stats.inert << " inert ("
     << stats.inert_accepted << " accepted), forgery caught by (iii): "
     << (forgery_caught ? "yes" : "no");
  detail = os.str();
  return all_pass && stats.unexpected_accept == 0 &&
         stats.semantic_rejected == stats.semantic && stats.inert_accepted == stats.inert &&
         forgery_caught;
}

// --- criterion 10: frozen worked instance ------------------------------------

constexpr const char* kWorkedCertificateJson = R"json({
  "ring": {
    "a": 5,
    "b": 3,
    "sign": "-"
  },
  "initial_ideal": [
    [
      3,
      0
    ],
    [
      1,
      1
    ],
    [
      0,
      2
    ]
  ],
  "steps": [
    {
      "axis": "x",
      "quotient_exponent": 2,
      "ring": {
        "a": 5,
        "m": 2
      },
      "ideal_before": [
        [
          3,
          0
        ],
        [
          1,
          1
        ],
        [
          0,
          2
        ]
      ],
      "divided_ideal": [
        [
          2,
          0
        ],
        [
          0,
          1
        ]
      ],
      "ideal_after": [
        [
          2,
          0
        ],
        [
          0,
          1
        ]
      ],
      "ann_generator": [
        4,
        0
      ]
    },
    {
      "axis": "x",
      "quotient_exponent": 1,
      "ring": {
        "a": 5,
        "m": 1
      },
      "ideal_before": [
        [
          2,
          0
        ],
        [
          0,
          1
        ]
      ],
      "divided_ideal": [
        [
          1,
          0
        ]
      ],
      "ideal_after": [
        [
          1,
          0
        ],
        [
          0,
          1
        ]
      ],
      "ann_generator": [
        4,
        0
      ]
    }
  ],
  "final_ideal": [
    [
      1,
      0
    ],
    [
      0,
      1
    ]
  ]
}
)json";

bool criterion_worked_instance(std::string& detail) {
  auto ring = TruncatedRingParams::relation_ring(5, 3, stk::RelationSign::minus);
  auto staircase = stk::staircase_of_conductor(5, 3);
  bool staircase_ok = staircase.pairs() == std::vector<ExponentPair>{{3, 0}, {1, 1}, {0, 2}} &&
                      staircase.ring() == ring;
  auto cert = stk::reduce_to_maximal(staircase);
  auto bytes = stk::serialize(cert);
  bool frozen_ok = bytes == kWorkedCertificateJson;
  bool verify_ok = stk::verify(cert).overall();
  bool reload_ok = stk::deserialize(bytes) == cert;
  detail = "steps=" + std::to_string(cert.steps.size()) +
           (frozen_ok ? ", bytes identical" : ", BYTES DIFFER");
  return staircase_ok && cert.steps.size() == 2 && frozen_ok && verify_ok && reload_ok;
}

// ---------------------------------------------------------------------------

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
  bool (*fn)(std::string&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form conductor equals brute force, a<=60", 10.0,
       criterion_conductor_closed_form},
      {2, "two-generator conductor equals (a-1)(b-1), a<=40", 5.0,
       criterion_two_generator_conductor},
      {3, "power tails and conductor ideal as a power, a<=30", 20.0,
       criterion_stable_powers_and_conductor_ideal},
      {4, "full-tail detection on random ideals", 20.0, criterion_tail_detection_random},
      {5, "colon of maximal-ideal powers, a<=20", 20.0, criterion_colon_of_powers},
      {6, "reduction exponent exists with exact cutoff, a<=20", 20.0,
       criterion_reduction_exponent},
      {7, "conductor staircase invariants and value round trip", 10.0,
       criterion_conductor_staircase},
      {8, "staircase reduction terminates, ends at (x,y), verifies", 30.0,
       criterion_reduction_engine},
      {9, "verifier rejects every semantic single-field mutation", 30.0,
       criterion_adversarial_mutations},
      {10, "worked instance x^5 - y^3 with byte-identical certificate", 5.0,
       criterion_worked_instance},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds) {
      ok = false;
      detail += " [over budget]";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.label << "  (" << detail << ", "
         << std::fixed;
    line.precision(2);
    line << elapsed << "s <= " << c.budget_seconds << "s)";
    std::cout << line.str() << std::endl;
    all_pass = all_pass && ok;
  }
  std::cout << (all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << std::endl;
  return all_pass ? 0 : 1;
}
