// stk: command-line surface for the staircase-kit library.
//
// Exit codes are a contract: 0 success / all checks pass, 1 semantic failure
// (a failed verification, check row, or reduction), 2 usage or parse failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stk/extcalc.hpp"
#include "stk/formats.hpp"
#include "stk/sweep.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using stk::Int;

int cmd_sgp_info(const std::string& gens_text) {
  auto s = stk::parse_semigroup(gens_text);
  std::cout << "generators: " << stk::format_int_list(s.generators()) << "\n";
  std::cout << "conductor: " << s.conductor() << "\n";
  std::cout << "frobenius: " << s.frobenius() << "\n";
  auto gaps = s.gaps();
  std::cout << "gaps: " << (gaps.empty() ? std::string{"none"} : stk::format_int_list(gaps))
            << "\n";
  std::cout << "gap count: " << gaps.size() << "\n";
  std::cout << "apery(" << s.multiplicity()
            << "): " << stk::format_int_list(s.apery_set(s.multiplicity())) << "\n";
  return 0;
}

void print_ideal(const stk::SemigroupIdeal& ideal) {
  std::cout << "gens: " << stk::format_int_list(ideal.minimal_generators()) << "\n";
  std::cout << "set: " << stk::format_value_set(ideal) << "\n";
}

int cmd_ideal_power(const std::string& sgp_text, Int n) {
  print_ideal(stk::max_ideal_power(stk::parse_semigroup(sgp_text), n));
  return 0;
}

int cmd_ideal_colon(const std::string& lhs_text, const std::string& rhs_text) {
  print_ideal(stk::colon(stk::parse_ideal(lhs_text), stk::parse_ideal(rhs_text)));
  return 0;
}

int cmd_ideal_stable(const std::string& ideal_text) {
  auto witness = stk::stable_under_normalization(stk::parse_ideal(ideal_text));
  std::cout << "stable: " << (witness ? "true" : "false") << "\n";
  if (witness) std::cout << "witness: " << *witness << "\n";
  return 0;
}

int cmd_stair_conductor(Int a, Int b) {
  auto st = stk::staircase_of_conductor(a, b);
  std::cout << "ring: " << stk::format_ring(st.ring()) << "\n";
  std::cout << "staircase: " << stk::format_pair_list(st.pairs()) << "\n";
  return 0;
}

int cmd_check(const std::string& family, Int a_max, Int r_max, Int b_max,
              const std::string& checks_text, const std::string& format) {
  stk::SweepSpec spec;
  spec.family = family == "arithmetic" ? stk::Family::arithmetic : stk::Family::two_generator;
  spec.a_max = a_max >= 0 ? a_max : (spec.family == stk::Family::arithmetic ? 20 : 40);
  if (r_max >= 0) spec.r_max = r_max;
  if (b_max >= 0) spec.b_max = b_max;
  if (!checks_text.empty()) {
    std::stringstream ss(checks_text);
    std::string token;
    while (std::getline(ss, token, ',')) {
      auto kind = stk::check_from_token(token);
      if (!kind) throw std::invalid_argument("unknown check \"" + token + "\"");
      spec.checks.push_back(*kind);
    }
  }

  auto result = stk::run_sweep(spec);
  if (format == "csv")
    std::cout << stk::sweep_to_csv(result);
  else if (format == "json")
    std::cout << stk::sweep_to_json(result);
  else
    std::cout << stk::sweep_to_text(result);
  return result.all_pass ? 0 : 1;
}

int cmd_reduce(const std::string& ring_text, const std::string& ideal_text,
               const std::string& out_path, Int fuzz, std::uint64_t seed) {
  if (fuzz > 0) {
    Int failures = 0;
    for (Int i = 0; i < fuzz; ++i) {
      auto st = stk::sample_primary_staircase(seed + static_cast<std::uint64_t>(i));
      auto cert = stk::reduce_to_maximal(st);
      if (!stk::verify(cert).overall()) ++failures;
    }
    std::cout << "fuzz: " << (fuzz - failures) << "/" << fuzz << " pass\n";
    return failures == 0 ? 0 : 1;
  }

  if (ring_text.empty() || ideal_text.empty() || out_path.empty())
    throw std::invalid_argument("reduce needs --ring, --ideal and --out (or --fuzz)");
  auto ring = stk::parse_ring(ring_text);
  if (ring.is_truncated())
    throw std::invalid_argument("reduce runs in the relation ring (use a=..,b=..,sign=..)");
  auto st = stk::parse_staircase(ring, ideal_text);
  auto cert = stk::reduce_to_maximal(st);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open \"" + out_path + "\" for writing");
  out << stk::serialize(cert);
  std::cout << "steps: " << cert.steps.size() << "\n";
  return 0;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto cert = stk::deserialize(buffer.str());
  auto report = stk::verify(cert);
  std::cout << report.to_text();
  return report.overall() ? 0 : 1;
}

template <typename F>
int run_guarded(F&& f) {
  try {
    return f();
  } catch (const stk::NoReductionFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stk::RepresentationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stk::HypothesisViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stk::NonTermination& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stk::Overflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"staircase-kit: numerical semigroups, value-set ideals, staircase reduction "
               "certificates"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress the version banner");

  auto* sgp = app.add_subcommand("sgp", "numerical semigroup computations");
  sgp->require_subcommand(1);
  auto* sgp_info = sgp->add_subcommand("info", "minimal generators, conductor, gaps, Apery set");
  std::string sgp_gens;
  sgp_info->add_option("generators", sgp_gens, "comma-separated generators, e.g. \"5,6\"")
      ->required();

  auto* ideal = app.add_subcommand("ideal", "value-set ideal computations");
  ideal->require_subcommand(1);
  auto* ipower = ideal->add_subcommand("power", "power of the maximal ideal");
  std::string power_sgp;
  Int power_n = 0;
  ipower->add_option("semigroup", power_sgp, "ambient semigroup, e.g. \"5,6\"")->required();
  ipower->add_option("n", power_n, "exponent")->required();
  auto* icolon = ideal->add_subcommand("colon", "colon of two ideals");
  std::string colon_lhs, colon_rhs;
  icolon->add_option("lhs", colon_lhs, "ideal, e.g. \"gens=10,11 @ sgp=5,6\"")->required();
  icolon->add_option("rhs", colon_rhs, "ideal over the same semigroup")->required();
  auto* istable = ideal->add_subcommand("stable", "full-tail test with witness");
  std::string stable_ideal;
  istable->add_option("ideal", stable_ideal, "ideal, e.g. \"gens=20 @ sgp=5,6\"")->required();

  auto* stair = app.add_subcommand("stair", "staircase computations");
  stair->require_subcommand(1);
  auto* sconductor = stair->add_subcommand("conductor", "conductor staircase of x^a - y^b");
  Int stair_a = 0, stair_b = 0;
  sconductor->add_option("a", stair_a, "x relation exponent")->required();
  sconductor->add_option("b", stair_b, "y relation exponent")->required();

  auto* check = app.add_subcommand("check", "property sweeps with per-instance pass/fail rows");
  std::string family;
  Int a_max = -1, r_max = -1, b_max = -1;
  std::string checks_text, check_format = "text";
  check->add_option("--family", family, "arithmetic | two-generator")
      ->required()
      ->check(CLI::IsMember({"arithmetic", "two-generator"}));
  check->add_option("--a-max", a_max, "largest multiplicity a in the sweep");
  check->add_option("--r-max", r_max, "cap on r (arithmetic family)");
  check->add_option("--b-max", b_max, "cap on b (two-generator family)");
  check->add_option("--checks", checks_text, "comma-separated subset of "
                                             "num1,num2,cond,lemma6,frobenius,staircase,reduce");
  check->add_option("--format", check_format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* reduce = app.add_subcommand("reduce", "produce a reduction certificate");
  std::string reduce_ring, reduce_ideal, reduce_out;
  Int reduce_fuzz = 0;
  std::uint64_t reduce_seed = 1;
  reduce->add_option("--ring", reduce_ring, "relation ring, e.g. \"a=5,b=3,sign=-\"");
  reduce->add_option("--ideal", reduce_ideal, "staircase, e.g. \"3,0;1,1;0,2\"");
  reduce->add_option("--out", reduce_out, "output certificate path (.redcert.json)");
  reduce->add_option("--fuzz", reduce_fuzz, "reduce+verify this many sampled staircases");
  reduce->add_option("--seed", reduce_seed, "seed for --fuzz");

  auto* ver = app.add_subcommand("verify", "re-check a certificate from scratch");
  std::string verify_path;
  ver->add_option("file", verify_path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!quiet) std::cerr << "staircase-kit " << kVersion << "\n";

  return run_guarded([&]() -> int {
    if (sgp_info->parsed()) return cmd_sgp_info(sgp_gens);
    if (ipower->parsed()) return cmd_ideal_power(power_sgp, power_n);
    if (icolon->parsed()) return cmd_ideal_colon(colon_lhs, colon_rhs);
    if (istable->parsed()) return cmd_ideal_stable(stable_ideal);
    if (sconductor->parsed()) return cmd_stair_conductor(stair_a, stair_b);
    if (check->parsed())
      return cmd_check(family, a_max, r_max, b_max, checks_text, check_format);
    if (reduce->parsed())
      return cmd_reduce(reduce_ring, reduce_ideal, reduce_out, reduce_fuzz, reduce_seed);
    if (ver->parsed()) return cmd_verify(verify_path);
    return 2;
  });
}
