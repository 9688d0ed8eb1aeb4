#include "stk/certify.hpp"

#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

namespace stk {

namespace {

bool valid_staircase(const StaircaseIdeal& s, const TruncatedRingParams& expected_ring) {
  return s.ring() == expected_ring && is_normal_staircase(s.ring(), s.pairs());
}

}  // namespace

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& s : steps) {
    out << "step " << (s.index + 1) << ": staircases " << (s.staircases_ok ? "ok" : "FAIL")
        << ", decomposition " << (s.decomposition_ok ? "ok" : "FAIL") << ", annihilator "
        << (s.annihilator_ok ? "ok" : "FAIL") << ", after " << (s.after_ok ? "ok" : "FAIL")
        << ", chain " << (s.chain_ok ? "ok" : "FAIL");
    if (!s.note.empty()) out << "  [" << s.note << "]";
    out << "\n";
  }
  out << "shape: " << (shape_ok ? "ok" : "FAIL") << "\n";
  out << "final ideal: " << (final_ok && final_chain_ok ? "ok" : "FAIL") << "\n";
  if (!note.empty()) out << "note: " << note << "\n";
  out << "overall: " << (overall() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

VerificationReport verify(const ReductionCertificate& cert) {
  VerificationReport rep;

  rep.shape_ok = !cert.ring.is_truncated() && valid_staircase(cert.initial_ideal, cert.ring) &&
                 valid_staircase(cert.final_ideal, cert.ring);
  if (!rep.shape_ok) rep.note = "certificate ring or top-level staircases malformed";

  rep.final_ok = cert.final_ideal.is_maximal_ideal() && cert.final_ideal.ring() == cert.ring;

  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const DivisionStep& st = cert.steps[k];
    StepVerdict v;
    v.index = k;

    // Orientation ring: an axis-y step stores everything mirrored.
    TruncatedRingParams rk;
    bool oriented_ok = true;
    try {
      rk = st.axis == Axis::x ? cert.ring : swap_axes(cert.ring);
    } catch (...) {
      oriented_ok = false;
    }

    v.staircases_ok = oriented_ok && valid_staircase(st.ideal_before, rk) &&
                      valid_staircase(st.divided_ideal, rk) && valid_staircase(st.ideal_after, rk);
    if (!v.staircases_ok) v.note = "staircase invariants";

    // (ii) before = axis * divided + pure generator, in the recorded ring.
    try {
      bool ring_ok = oriented_ok &&
                     st.ring == TruncatedRingParams::truncated(rk.x_trunc(), st.quotient_exponent);
      bool pure_ok = !st.ideal_before.pairs().empty() &&
                     st.ideal_before.pairs().back() == ExponentPair{0, st.quotient_exponent};
      std::vector<ExponentPair> recomposed = multiply_by_x(st.divided_ideal).pairs();
      recomposed.push_back({0, st.quotient_exponent});
      v.decomposition_ok =
          ring_ok && pure_ok &&
          StaircaseIdeal::normalize(rk, std::move(recomposed)) == st.ideal_before;
    } catch (...) {
      v.decomposition_ok = false;
    }
    if (!v.decomposition_ok && v.note.empty()) v.note = "decomposition";

    // (iii) annihilator generator and containment, from scratch.
    try {
      StaircaseIdeal ann = annihilator_of_x(st.ring);
      StaircaseIdeal image = StaircaseIdeal::normalize(st.ring, st.ideal_before.pairs());
      v.annihilator_ok = st.annihilator_check.ann_generator == ann.pairs().front() &&
                         contains_ideal(image, ann);
    } catch (...) {
      v.annihilator_ok = false;
    }
    if (!v.annihilator_ok && v.note.empty()) v.note = "annihilator containment";

    // (iv) after = divided + pure generator.
    try {
      std::vector<ExponentPair> joined = st.divided_ideal.pairs();
      joined.push_back({0, st.quotient_exponent});
      v.after_ok = StaircaseIdeal::normalize(rk, std::move(joined)) == st.ideal_after;
    } catch (...) {
      v.after_ok = false;
    }
    if (!v.after_ok && v.note.empty()) v.note = "ideal_after";

    // (v) chain: this step picks up exactly where the previous one stopped.
    try {
      StaircaseIdeal expected = [&] {
        if (k == 0)
          return st.axis == Axis::x ? cert.initial_ideal : swap_axes(cert.initial_ideal);
        const DivisionStep& prev = cert.steps[k - 1];
        return st.axis == prev.axis ? prev.ideal_after : swap_axes(prev.ideal_after);
      }();
      v.chain_ok = expected == st.ideal_before;
    } catch (...) {
      v.chain_ok = false;
    }
    if (!v.chain_ok && v.note.empty()) v.note = "chain consistency";

    rep.steps.push_back(std::move(v));
  }

  try {
    if (cert.steps.empty()) {
      rep.final_chain_ok = cert.initial_ideal == cert.final_ideal;
    } else {
      const DivisionStep& last = cert.steps.back();
      StaircaseIdeal reached =
          last.axis == Axis::x ? last.ideal_after : swap_axes(last.ideal_after);
      rep.final_chain_ok = reached == cert.final_ideal;
    }
  } catch (...) {
    rep.final_chain_ok = false;
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Serialization. Fixed schema, canonical key order, integers only:
//   {ring:{a,b,sign}, initial_ideal:[[x,y]...],
//    steps:[{axis, quotient_exponent, ring:{a,m}, ideal_before, divided_ideal,
//            ideal_after, ann_generator}...],
//    final_ideal:[[x,y]...]}

namespace {

using ojson = nlohmann::ordered_json;
using njson = nlohmann::json;

ojson pairs_to_json(const StaircaseIdeal& s) {
  ojson arr = ojson::array();
  for (const auto& p : s.pairs()) arr.push_back(ojson::array({p.x, p.y}));
  return arr;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw MalformedCertificate(path + ": " + what);
}

void require_keys(const njson& obj, std::initializer_list<const char*> keys,
                  const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  std::set<std::string> expected(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!expected.count(key)) fail(path, "unexpected key \"" + key + "\"");
  }
  for (const auto& key : expected)
    if (!obj.contains(key)) fail(path, "missing key \"" + key + "\"");
}

Int get_int(const njson& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<Int>();
}

ExponentPair pair_from_json(const njson& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(path, "expected an exponent pair [x, y]");
  ExponentPair p{get_int(v[0], path + "[0]"), get_int(v[1], path + "[1]")};
  if (p.x < 0 || p.y < 0) fail(path, "negative exponent");
  return p;
}

StaircaseIdeal staircase_from_json(const TruncatedRingParams& ring, const njson& v,
                                   const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a nonempty array of exponent pairs");
  std::vector<ExponentPair> pairs;
  for (std::size_t i = 0; i < v.size(); ++i)
    pairs.push_back(pair_from_json(v[i], path + "[" + std::to_string(i) + "]"));
  if (!is_normal_staircase(ring, pairs)) fail(path, "not a staircase normal form");
  return StaircaseIdeal::unchecked(ring, std::move(pairs));
}

bool recompute_containment(const DivisionStep& st) {
  try {
    StaircaseIdeal ann = annihilator_of_x(st.ring);
    StaircaseIdeal image = StaircaseIdeal::normalize(st.ring, st.ideal_before.pairs());
    return st.annihilator_check.ann_generator == ann.pairs().front() &&
           contains_ideal(image, ann);
  } catch (...) {
    return false;
  }
}

}  // namespace

std::string serialize(const ReductionCertificate& cert) {
  if (cert.ring.is_truncated())
    throw std::invalid_argument("only relation-ring certificates are serialized");
  ojson j;
  j["ring"] = {{"a", cert.ring.x_trunc()},
               {"b", cert.ring.y_bound()},
               {"sign", cert.ring.sign() == RelationSign::minus ? "-" : "+"}};
  j["initial_ideal"] = pairs_to_json(cert.initial_ideal);
  ojson steps = ojson::array();
  for (const auto& st : cert.steps) {
    ojson s;
    s["axis"] = st.axis == Axis::x ? "x" : "y";
    s["quotient_exponent"] = st.quotient_exponent;
    s["ring"] = {{"a", st.ring.x_trunc()}, {"m", st.ring.y_bound()}};
    s["ideal_before"] = pairs_to_json(st.ideal_before);
    s["divided_ideal"] = pairs_to_json(st.divided_ideal);
    s["ideal_after"] = pairs_to_json(st.ideal_after);
    s["ann_generator"] =
        ojson::array({st.annihilator_check.ann_generator.x, st.annihilator_check.ann_generator.y});
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["final_ideal"] = pairs_to_json(cert.final_ideal);
  return j.dump(2) + "\n";
}

ReductionCertificate deserialize(std::string_view bytes) {
  njson j;
  try {
    j = njson::parse(bytes);
  } catch (const njson::parse_error& e) {
    throw MalformedCertificate("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                               e.what());
  }

  require_keys(j, {"ring", "initial_ideal", "steps", "final_ideal"}, "$");
  require_keys(j["ring"], {"a", "b", "sign"}, "$.ring");
  const Int a = get_int(j["ring"]["a"], "$.ring.a");
  const Int b = get_int(j["ring"]["b"], "$.ring.b");
  const std::string sign = j["ring"]["sign"].is_string() ? j["ring"]["sign"].get<std::string>() : "";
  if (sign != "-" && sign != "+") fail("$.ring.sign", "expected \"-\" or \"+\"");

  TruncatedRingParams ring;
  try {
    ring = TruncatedRingParams::relation_ring(
        a, b, sign == "-" ? RelationSign::minus : RelationSign::plus);
  } catch (const std::exception& e) {
    fail("$.ring", e.what());
  }

  ReductionCertificate cert;
  cert.ring = ring;
  cert.initial_ideal = staircase_from_json(ring, j["initial_ideal"], "$.initial_ideal");

  if (!j["steps"].is_array()) fail("$.steps", "expected an array");
  for (std::size_t k = 0; k < j["steps"].size(); ++k) {
    const std::string path = "$.steps[" + std::to_string(k) + "]";
    const njson& s = j["steps"][k];
    require_keys(s,
                 {"axis", "quotient_exponent", "ring", "ideal_before", "divided_ideal",
                  "ideal_after", "ann_generator"},
                 path);

    DivisionStep step;
    const std::string axis = s["axis"].is_string() ? s["axis"].get<std::string>() : "";
    if (axis != "x" && axis != "y") fail(path + ".axis", "expected \"x\" or \"y\"");
    step.axis = axis == "x" ? Axis::x : Axis::y;

    step.quotient_exponent = get_int(s["quotient_exponent"], path + ".quotient_exponent");
    if (step.quotient_exponent < 1) fail(path + ".quotient_exponent", "must be >= 1");

    require_keys(s["ring"], {"a", "m"}, path + ".ring");
    try {
      step.ring = TruncatedRingParams::truncated(get_int(s["ring"]["a"], path + ".ring.a"),
                                                 get_int(s["ring"]["m"], path + ".ring.m"));
    } catch (const MalformedCertificate&) {
      throw;
    } catch (const std::exception& e) {
      fail(path + ".ring", e.what());
    }

    TruncatedRingParams oriented = step.axis == Axis::x ? ring : swap_axes(ring);
    step.ideal_before = staircase_from_json(oriented, s["ideal_before"], path + ".ideal_before");
    step.divided_ideal =
        staircase_from_json(oriented, s["divided_ideal"], path + ".divided_ideal");
    step.ideal_after = staircase_from_json(oriented, s["ideal_after"], path + ".ideal_after");
    step.annihilator_check.ann_generator =
        pair_from_json(s["ann_generator"], path + ".ann_generator");
    // The flag is not part of the wire format; recover it by recomputation.
    step.annihilator_check.containment_verified = recompute_containment(step);

    cert.steps.push_back(std::move(step));
  }

  cert.final_ideal = staircase_from_json(ring, j["final_ideal"], "$.final_ideal");
  return cert;
}

}  // namespace stk
