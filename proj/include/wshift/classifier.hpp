#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wshift/shiftcalc.hpp"

namespace wshift {

enum class Relation { LT, EQ };
enum class Shape { StrictIncrease, Constant };

/// Behaviour of one infinite ray of the modulus sequence.
struct RayShape {
  Shape shape = Shape::StrictIncrease;
  /// The constant modulus for Shape::Constant.
  Rational value;
  /// Indices n on the ray with |beta_n| = |beta_{n+1}| (finite; StrictIncrease only).
  std::vector<Index> equalities;

  friend bool operator==(const RayShape&, const RayShape&) = default;
};

/// Certified order structure of a hyponormal modulus sequence. Relation n
/// compares |beta_n| with |beta_{n+1}|.
struct StructureProfile {
  RayShape left;   // relations n <= L - 2
  RayShape right;  // relations n >= R + 1
  Index relations_begin = 0;  // L - 1
  std::vector<Relation> window_relations;  // relations L - 1 .. R
  /// Smallest k with |beta_k| = |beta_{k+1}|, when the left ray strictly increases.
  std::optional<Index> first_equality_index;

  Index left_end() const { return relations_begin - 1; }
  Index right_begin() const {
    return relations_begin + static_cast<Index>(window_relations.size());
  }
  Relation relation_at(Index n) const;
  friend bool operator==(const StructureProfile&, const StructureProfile&) = default;
  bool all_equal() const;
};

struct HyponormalCheck {
  bool hyponormal = false;
  std::optional<StructureProfile> profile;
  /// Smallest-|n| index with |beta_n| > |beta_{n+1}| (ties toward negative).
  std::optional<Index> witness;
};

HyponormalCheck check_hyponormal(const WeightSpec& spec);

enum class VerdictClass { NotHyponormal, Normal, NearSubnormal, HyponormalNotNearSubnormal, Undecided };

enum class TheoremTag {
  None,
  Theorem1,
  Theorem2,
  Theorem1Converse,
  Theorem2Converse,
  Theorem3,
  Theorem4,
};

const char* to_string(VerdictClass c);
const char* to_string(TheoremTag t);
VerdictClass verdict_class_from_string(const std::string& s);
TheoremTag theorem_tag_from_string(const std::string& s);

struct ReplayPoint {
  enum class Quantity { Weight, QDiag, GammaSq };
  Quantity quantity;
  Index index;
  /// nullopt records an undefined gamma^2.
  std::optional<Rational> value;
};

const char* to_string(ReplayPoint::Quantity q);

struct GammaSummary {
  std::optional<Limit> left_limit;
  std::optional<Limit> right_limit;
  /// Exact sup of gamma^2 over the whole line (near subnormal verdicts).
  std::optional<Rational> sup_gamma_sq;
  std::optional<Index> sup_argmax;
  std::optional<Index> flat_zero_from;

  friend bool operator==(const GammaSummary&, const GammaSummary&) = default;
};

struct Certificate {
  std::optional<StructureProfile> structure;
  GammaSummary gamma;
  TheoremTag theorem_applied = TheoremTag::None;
  std::vector<ReplayPoint> replay_points;
};

struct Verdict {
  VerdictClass verdict = VerdictClass::Undecided;
  TheoremTag via = TheoremTag::None;
  /// NotHyponormal: decreasing pair; Theorem 3: first index above the left constant.
  std::optional<Index> witness;
  /// Theorem 2 family: smallest equality index.
  std::optional<Index> k;
  /// Theorem 4: pattern index; Theorem 3: last index of the constant run.
  std::optional<Index> j0;
  /// Index n with e_n in N(Q_T) but T e_n outside it, when the verdict predicts one.
  std::optional<Index> obstruction;
  Certificate certificate;
};

/// Spec must pass validate().
Verdict classify(const WeightSpec& spec);

/// Classifies independent specs in parallel.
std::vector<Verdict> classify_all(std::span<const WeightSpec> specs);

struct ReplayResult {
  bool consistent = true;
  std::string detail;
};

/// Recomputes every structural claim and replay point from scratch.
ReplayResult replay(const Certificate& cert, const WeightSpec& spec);

}  // namespace wshift
