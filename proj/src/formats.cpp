#include "stk/formats.hpp"

#include <charconv>
#include <sstream>

namespace stk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

Int parse_int(std::string_view s) {
  s = trim(s);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer \"" + std::string(s) + "\"");
  return value;
}

// "key=value" with a known key.
std::string_view expect_kv(std::string_view part, std::string_view key) {
  auto eq = part.find('=');
  if (eq == std::string_view::npos || trim(part.substr(0, eq)) != key)
    throw std::invalid_argument("expected \"" + std::string(key) + "=...\" in \"" +
                                std::string(part) + "\"");
  return trim(part.substr(eq + 1));
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text, char sep) {
  auto parts = split(text, sep);
  std::vector<Int> out;
  for (auto p : parts) out.push_back(parse_int(p));
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
  return NumericalSemigroup::from_generators(parse_int_list(text));
}

SemigroupIdeal parse_ideal(std::string_view text) {
  auto at = text.find('@');
  if (at == std::string_view::npos)
    throw std::invalid_argument("ideal format is \"gens=... @ sgp=...\"");
  auto gens = parse_int_list(expect_kv(trim(text.substr(0, at)), "gens"));
  auto sgp = parse_semigroup(expect_kv(trim(text.substr(at + 1)), "sgp"));
  return SemigroupIdeal::from_values(sgp, std::move(gens));
}

TruncatedRingParams parse_ring(std::string_view text) {
  auto parts = split(text, ',');
  if (parts.size() == 2) {
    return TruncatedRingParams::truncated(parse_int(expect_kv(parts[0], "a")),
                                          parse_int(expect_kv(parts[1], "m")));
  }
  if (parts.size() == 3) {
    Int a = parse_int(expect_kv(parts[0], "a"));
    Int b = parse_int(expect_kv(parts[1], "b"));
    auto sign = expect_kv(parts[2], "sign");
    if (sign != "-" && sign != "+") throw std::invalid_argument("sign must be \"-\" or \"+\"");
    return TruncatedRingParams::relation_ring(
        a, b, sign == "-" ? RelationSign::minus : RelationSign::plus);
  }
  throw std::invalid_argument("ring format is \"a=5,b=3,sign=-\" or \"a=5,m=2\"");
}

std::vector<ExponentPair> parse_pair_list(std::string_view text) {
  std::vector<ExponentPair> pairs;
  for (auto part : split(text, ';')) {
    auto coords = split(part, ',');
    if (coords.size() != 2)
      throw std::invalid_argument("exponent pair format is \"x,y\" in \"" + std::string(part) +
                                  "\"");
    pairs.push_back({parse_int(coords[0]), parse_int(coords[1])});
  }
  return pairs;
}

StaircaseIdeal parse_staircase(const TruncatedRingParams& ring, std::string_view text) {
  return StaircaseIdeal::normalize(ring, parse_pair_list(text));
}

std::string format_int_list(const std::vector<Int>& values, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << sep;
    out << values[i];
  }
  return out.str();
}

std::string format_value_set(const SemigroupIdeal& ideal) {
  std::ostringstream out;
  out << "{" << format_int_list(ideal.sporadic()) << "} ∪ [" << ideal.threshold()
      << ",∞)";
  return out.str();
}

std::string format_pair_list(const std::vector<ExponentPair>& pairs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ';';
    out << pairs[i].x << ',' << pairs[i].y;
  }
  return out.str();
}

std::string format_ring(const TruncatedRingParams& ring) {
  std::ostringstream out;
  if (ring.is_truncated()) {
    out << "a=" << ring.x_trunc() << ",m=" << ring.y_bound();
  } else {
    out << "a=" << ring.x_trunc() << ",b=" << ring.y_bound()
        << ",sign=" << (ring.sign() == RelationSign::minus ? '-' : '+');
  }
  return out.str();
}

}  // namespace stk
