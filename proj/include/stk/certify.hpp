#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stk/truncmono.hpp"

namespace stk {

enum class Axis { x, y };

struct AnnihilatorCheck {
  ExponentPair ann_generator;
  bool containment_verified = false;
  friend bool operator==(const AnnihilatorCheck&, const AnnihilatorCheck&) = default;
};

/// One certified division step. All staircases are recorded oriented: the
/// active axis plays the x role, so an axis-y step stores its ideals in the
/// mirrored relation ring.
///
/// The step witnesses, inside the quotient ring `ring` obtained by killing
/// the pure opposite-axis generator, that the annihilator of the axis
/// variable lies in ideal_before, and that
///   ideal_before = axis * divided_ideal + (pure generator),
///   ideal_after  = divided_ideal + (pure generator).
struct DivisionStep {
  Axis axis = Axis::x;
  Int quotient_exponent = 0;
  TruncatedRingParams ring;
  StaircaseIdeal ideal_before;
  StaircaseIdeal divided_ideal;
  StaircaseIdeal ideal_after;
  AnnihilatorCheck annihilator_check;
  friend bool operator==(const DivisionStep&, const DivisionStep&) = default;
};

/// Ordered list of division steps transforming initial_ideal into the
/// maximal ideal (x, y) of the relation ring.
struct ReductionCertificate {
  TruncatedRingParams ring;
  StaircaseIdeal initial_ideal;
  std::vector<DivisionStep> steps;
  StaircaseIdeal final_ideal;
  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

struct StepVerdict {
  std::size_t index = 0;
  bool staircases_ok = false;     // (i)  staircase invariants of each ideal
  bool decomposition_ok = false;  // (ii) before = axis * divided + pure generator
  bool annihilator_ok = false;    // (iii) annihilator containment, recomputed
  bool after_ok = false;          // (iv) after = divided + pure generator
  bool chain_ok = false;          // (v)  links to the previous step / initial ideal
  std::string note;
  bool all() const {
    return staircases_ok && decomposition_ok && annihilator_ok && after_ok && chain_ok;
  }
};

struct VerificationReport {
  bool shape_ok = false;        // ring and top-level staircases well formed
  bool final_ok = false;        // (vi) final ideal is (x, y)
  bool final_chain_ok = false;  // last ideal_after reaches final_ideal
  std::vector<StepVerdict> steps;
  std::string note;

  bool overall() const {
    if (!shape_ok || !final_ok || !final_chain_ok) return false;
    for (const auto& s : steps)
      if (!s.all()) return false;
    return true;
  }
  std::string to_text() const;
};

/// Independent re-check of a certificate from truncmono primitives alone.
/// Never throws: every failure is a report entry.
VerificationReport verify(const ReductionCertificate& cert);

/// Canonical JSON bytes (fixed key order, two-space indent, trailing newline).
std::string serialize(const ReductionCertificate& cert);

/// Parses and validates structure (schema, exponent ranges, staircase normal
/// form). Throws MalformedCertificate with position info. Semantic step
/// checks are verify()'s job.
ReductionCertificate deserialize(std::string_view bytes);

}  // namespace stk
