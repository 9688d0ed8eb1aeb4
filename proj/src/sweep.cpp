#include "stk/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "stk/extcalc.hpp"
#include "stk/valideal.hpp"

namespace stk {

std::string_view check_token(CheckKind kind) {
  switch (kind) {
    case CheckKind::conductor_formula: return "num1";
    case CheckKind::stable_threshold: return "num2";
    case CheckKind::conductor_power: return "cond";
    case CheckKind::colon_powers: return "lemma6";
    case CheckKind::reduction: return "reduce";
    case CheckKind::two_gen_conductor: return "frobenius";
    case CheckKind::staircase_form: return "staircase";
  }
  return "?";
}

std::optional<CheckKind> check_from_token(std::string_view token) {
  for (CheckKind kind :
       {CheckKind::conductor_formula, CheckKind::stable_threshold, CheckKind::conductor_power,
        CheckKind::colon_powers, CheckKind::reduction, CheckKind::two_gen_conductor,
        CheckKind::staircase_form})
    if (check_token(kind) == token) return kind;
  return std::nullopt;
}

bool check_applies(Family family, CheckKind kind) {
  switch (kind) {
    case CheckKind::conductor_formula:
    case CheckKind::stable_threshold:
    case CheckKind::conductor_power:
    case CheckKind::colon_powers: return family == Family::arithmetic;
    case CheckKind::two_gen_conductor:
    case CheckKind::staircase_form: return family == Family::two_generator;
    case CheckKind::reduction: return true;
  }
  return false;
}

std::vector<CheckKind> default_checks(Family family) {
  std::vector<CheckKind> out;
  for (CheckKind kind :
       {CheckKind::conductor_formula, CheckKind::stable_threshold, CheckKind::conductor_power,
        CheckKind::colon_powers, CheckKind::two_gen_conductor, CheckKind::staircase_form,
        CheckKind::reduction})
    if (check_applies(family, kind)) out.push_back(kind);
  return out;
}

unsigned sweep_thread_limit() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("STAIRCASE_KIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) hw = static_cast<unsigned>(std::min(v, 256L));
  }
  return hw;
}

namespace {

struct Instance {
  Int a = 0;
  Int second = 0;  // r for the arithmetic family, b for two generators
};

SweepRow base_row(const SweepSpec& spec, const Instance& inst, CheckKind kind) {
  SweepRow row;
  row.check = kind;
  row.family = spec.family;
  row.a = inst.a;
  if (spec.family == Family::arithmetic)
    row.r = inst.second;
  else
    row.b = inst.second;
  return row;
}

void run_arithmetic_check(SweepRow& row, CheckKind kind, Int a, Int r) {
  const Int u = ceil_div(a - 1, r);
  switch (kind) {
    case CheckKind::conductor_formula: {
      row.formula = conductor_arithmetic(a, r);
      row.brute = arithmetic_semigroup(a, r).conductor();
      row.pass = row.formula == row.brute;
      break;
    }
    case CheckKind::stable_threshold: {
      auto s = arithmetic_semigroup(a, r);
      Int observed = stable_power_threshold(s);
      bool pattern = true;
      for (Int n = 1; n <= u + 3; ++n)
        pattern = pattern &&
                  (stable_under_normalization(max_ideal_power(s, n)).has_value() == (n >= u));
      row.formula = u;
      row.brute = observed;
      row.detail = pattern ? "tail pattern ok" : "tail pattern broken";
      row.pass = observed == u && pattern;
      break;
    }
    case CheckKind::conductor_power: {
      auto s = arithmetic_semigroup(a, r);
      row.formula = checked_mul(u, a);
      row.brute = s.conductor();
      row.pass = conductor_ideal(s) == max_ideal_power(s, u) && row.formula == row.brute;
      break;
    }
    case CheckKind::colon_powers: {
      auto s = arithmetic_semigroup(a, r);
      const Int pmax = 2 * u + 3;
      std::vector<SemigroupIdeal> powers;
      for (Int p = 0; p <= pmax; ++p) powers.push_back(max_ideal_power(s, p));
      Int pairs = 0;
      bool ok = true;
      for (Int p = 0; p <= pmax && ok; ++p)
        for (Int q = 0; q <= p && ok; ++q) {
          ok = colon(powers[static_cast<std::size_t>(p)], powers[static_cast<std::size_t>(q)]) ==
               powers[static_cast<std::size_t>(p - q)];
          ++pairs;
        }
      row.detail = "pairs=" + std::to_string(pairs);
      row.pass = ok;
      break;
    }
    case CheckKind::reduction: {
      auto s = arithmetic_semigroup(a, r);
      const Int n0 = reduction_exponent(s, a);
      const SemigroupIdeal x = SemigroupIdeal::principal(s, a);
      bool ok = true;
      for (Int n = 1; n <= n0 + 2; ++n) {
        bool equal = max_ideal_power(s, n + 1) == multiply(x, max_ideal_power(s, n));
        ok = ok && (equal == (n >= n0));
      }
      row.formula = u;
      row.brute = n0;
      row.detail = n0 == u ? "observed exponent matches ceil((a-1)/r)"
                           : "observed exponent differs from ceil((a-1)/r)";
      row.pass = ok;
      break;
    }
    default: break;
  }
}

void run_two_generator_check(SweepRow& row, CheckKind kind, Int a, Int b) {
  switch (kind) {
    case CheckKind::two_gen_conductor: {
      row.formula = checked_mul(a - 1, b - 1);
      row.brute = NumericalSemigroup::from_generators({a, b}).conductor();
      row.pass = row.formula == row.brute;
      break;
    }
    case CheckKind::staircase_form: {
      auto st = staircase_of_conductor(a, b);
      bool shape = is_normal_staircase(st.ring(), st.pairs()) && st.pairs().front().y == 0 &&
                   st.pairs().back().x == 0;
      auto s = NumericalSemigroup::from_generators({a, b});
      std::vector<Int> values;
      for (const auto& p : st.pairs())
        values.push_back(checked_add(checked_mul(b, p.x), checked_mul(a, p.y)));
      bool round_trip = SemigroupIdeal::from_values(s, values) == conductor_ideal(s);
      row.detail = "gens=" + std::to_string(st.pairs().size());
      row.pass = shape && round_trip;
      break;
    }
    case CheckKind::reduction: {
      auto st = staircase_of_conductor(a, b);
      const Int bound = st.pairs().front().x + st.pairs().back().y +
                        static_cast<Int>(st.pairs().size());
      auto cert = reduce_to_maximal(st);
      bool ok = static_cast<Int>(cert.steps.size()) <= bound &&
                cert.final_ideal.is_maximal_ideal() && verify(cert).overall();
      row.detail = "steps=" + std::to_string(cert.steps.size());
      row.pass = ok;
      break;
    }
    default: break;
  }
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  const Int a_max = spec.a_max;
  if (a_max < 2) throw std::invalid_argument("a-max must be at least 2");
  if (spec.r_max && *spec.r_max < 1) throw std::invalid_argument("r-max must be at least 1");
  if (spec.b_max && *spec.b_max < 2) throw std::invalid_argument("b-max must be at least 2");

  std::vector<CheckKind> checks = spec.checks.empty() ? default_checks(spec.family) : spec.checks;
  if (checks.empty()) throw std::invalid_argument("no checks selected");
  for (CheckKind kind : checks)
    if (!check_applies(spec.family, kind))
      throw std::invalid_argument("check \"" + std::string(check_token(kind)) +
                                  "\" does not apply to this family");

  std::vector<Instance> instances;
  if (spec.family == Family::arithmetic) {
    for (Int a = 2; a <= a_max; ++a) {
      Int r_hi = std::min<Int>(a - 1, spec.r_max.value_or(a - 1));
      for (Int r = 1; r <= r_hi; ++r) instances.push_back({a, r});
    }
  } else {
    for (Int a = 3; a <= a_max; ++a) {
      Int b_hi = std::min<Int>(a - 1, spec.b_max.value_or(39));
      for (Int b = 2; b <= b_hi; ++b)
        if (std::gcd(a, b) == 1) instances.push_back({a, b});
    }
  }

  std::vector<std::vector<SweepRow>> per_instance(instances.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      const Instance& inst = instances[i];
      for (CheckKind kind : checks) {
        SweepRow row = base_row(spec, inst, kind);
        try {
          if (spec.family == Family::arithmetic)
            run_arithmetic_check(row, kind, inst.a, inst.second);
          else
            run_two_generator_check(row, kind, inst.a, inst.second);
        } catch (const std::exception& e) {
          row.pass = false;
          row.detail = e.what();
        }
        per_instance[i].push_back(std::move(row));
      }
    }
  };

  unsigned workers = std::min<unsigned>(sweep_thread_limit(),
                                        std::max<std::size_t>(instances.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepResult result;
  for (auto& rows : per_instance)
    for (auto& row : rows) {
      result.all_pass = result.all_pass && row.pass;
      result.rows.push_back(std::move(row));
    }
  return result;
}

namespace {

std::string opt_str(const std::optional<Int>& v) {
  return v ? std::to_string(*v) : std::string{};
}

std::string_view family_name(Family f) {
  return f == Family::arithmetic ? "arithmetic" : "two-generator";
}

}  // namespace

std::string sweep_to_text(const SweepResult& result) {
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& row : result.rows) {
    out << check_token(row.check) << " a=" << row.a;
    if (row.r) out << " r=" << *row.r;
    if (row.b) out << " b=" << *row.b;
    if (row.formula) out << " formula=" << *row.formula;
    if (row.brute) out << " brute=" << *row.brute;
    if (!row.detail.empty()) out << " " << row.detail;
    out << (row.pass ? " PASS" : " FAIL") << "\n";
    if (!row.pass) ++failures;
  }
  out << "rows=" << result.rows.size() << " failures=" << failures << "\n";
  return out.str();
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "check,family,a,r,b,formula,brute,detail,pass\n";
  for (const auto& row : result.rows) {
    out << check_token(row.check) << ',' << family_name(row.family) << ',' << row.a << ','
        << opt_str(row.r) << ',' << opt_str(row.b) << ',' << opt_str(row.formula) << ','
        << opt_str(row.brute) << ',' << row.detail << ',' << (row.pass ? "true" : "false")
        << "\n";
  }
  return out.str();
}

std::string sweep_to_json(const SweepResult& result) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json r;
    r["check"] = check_token(row.check);
    r["family"] = family_name(row.family);
    r["a"] = row.a;
    r["r"] = row.r ? nlohmann::ordered_json(*row.r) : nlohmann::ordered_json(nullptr);
    r["b"] = row.b ? nlohmann::ordered_json(*row.b) : nlohmann::ordered_json(nullptr);
    r["formula"] = row.formula ? nlohmann::ordered_json(*row.formula) : nlohmann::ordered_json(nullptr);
    r["brute"] = row.brute ? nlohmann::ordered_json(*row.brute) : nlohmann::ordered_json(nullptr);
    r["detail"] = row.detail;
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["all_pass"] = result.all_pass;
  return doc.dump(2) + "\n";
}

}  // namespace stk
