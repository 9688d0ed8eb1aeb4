#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stk/numsgp.hpp"

namespace stk {

enum class Family { arithmetic, two_generator };

// Property checks runnable over a parameter sweep. Token names are the CLI
// surface (--checks num1,num2,...); the enum names say what they test.
enum class CheckKind {
  conductor_formula,  // num1:      closed-form conductor == brute force
  stable_threshold,   // num2:      m^n is a full tail exactly from ceil((a-1)/r)
  conductor_power,    // cond:      conductor ideal == that power of m
  colon_powers,       // lemma6:    colon(m^p, m^q) == m^(p-q)
  reduction,          // reduce:    reduction exponent / staircase reduction + verify
  two_gen_conductor,  // frobenius: conductor of <a,b> == (a-1)(b-1)
  staircase_form      // staircase: conductor staircase invariants + round trip
};

std::string_view check_token(CheckKind kind);
std::optional<CheckKind> check_from_token(std::string_view token);
bool check_applies(Family family, CheckKind kind);
std::vector<CheckKind> default_checks(Family family);

struct SweepSpec {
  Family family = Family::arithmetic;
  Int a_max = 20;                 // must be >= 2
  std::optional<Int> r_max;       // arithmetic family
  std::optional<Int> b_max;       // two-generator family
  std::vector<CheckKind> checks;  // empty picks every applicable check
};

struct SweepRow {
  CheckKind check = CheckKind::conductor_formula;
  Family family = Family::arithmetic;
  Int a = 0;
  std::optional<Int> r;
  std::optional<Int> b;
  std::optional<Int> formula;
  std::optional<Int> brute;
  std::string detail;
  bool pass = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool all_pass = true;
};

/// Runs every selected check on every instance; rows come back in
/// deterministic (sorted-parameter, fixed check order) order regardless of
/// the worker count. Throws std::invalid_argument on a bad spec.
SweepResult run_sweep(const SweepSpec& spec);

std::string sweep_to_text(const SweepResult& result);
std::string sweep_to_csv(const SweepResult& result);
std::string sweep_to_json(const SweepResult& result);

/// Worker cap: STAIRCASE_KIT_THREADS when set, hardware concurrency otherwise.
unsigned sweep_thread_limit();

}  // namespace stk
