#include "wshift/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wshift {

Relation StructureProfile::relation_at(Index n) const {
  auto on_ray = [n](const RayShape& ray) {
    if (ray.shape == Shape::Constant) return Relation::EQ;
    return std::binary_search(ray.equalities.begin(), ray.equalities.end(), n) ? Relation::EQ
                                                                               : Relation::LT;
  };
  if (n <= left_end()) return on_ray(left);
  if (n >= right_begin()) return on_ray(right);
  return window_relations[static_cast<std::size_t>(n - relations_begin)];
}

bool StructureProfile::all_equal() const {
  return left.shape == Shape::Constant && right.shape == Shape::Constant &&
         std::all_of(window_relations.begin(), window_relations.end(),
                     [](Relation r) { return r == Relation::EQ; });
}

namespace {

// Relation n depends on d_{n+1}; a zero z of d is an equality at n = z - 1.
RayShape ray_shape(const RaySign& sign, const Rational& constant_value) {
  RayShape shape;
  if (sign.kind == RaySign::Kind::IdenticallyZero) {
    shape.shape = Shape::Constant;
    shape.value = constant_value;
    return shape;
  }
  for (Index z : sign.zeros) shape.equalities.push_back(z - 1);
  return shape;
}

}  // namespace

HyponormalCheck check_hyponormal(const WeightSpec& spec) {
  const QDiagonal q(spec);
  const Index L = spec.window_start;
  const Index R = spec.window_end();

  // d on the rays: left form for n <= L - 1, right form for n >= R + 2.
  const RaySign left = sign_on_ray(q.left_tail_form(), Ray::at_most(L - 1));
  const RaySign right = sign_on_ray(q.right_tail_form(), Ray::at_least(R + 2));

  std::vector<Index> candidates;
  if (left.negative_witness) candidates.push_back(*left.negative_witness - 1);
  if (right.negative_witness) candidates.push_back(*right.negative_witness - 1);
  for (Index m = L; m <= R + 1; ++m) {
    if (q.at(m) < 0) candidates.push_back(m - 1);
  }

  HyponormalCheck out;
  if (!candidates.empty()) {
    // Scan outward from 0; the nearest violation lies within the farthest candidate.
    Index reach = 0;
    for (Index c : candidates) reach = std::max(reach, std::abs(c));
    for (Index m = 0; m <= reach && !out.witness; ++m) {
      for (Index n : {-m, m}) {
        if (q.at(n + 1) < 0) {
          out.witness = n;
          break;
        }
      }
    }
    return out;
  }

  StructureProfile profile;
  profile.left = ray_shape(left, eval_exact(spec, L - 1));
  profile.right = ray_shape(right, eval_exact(spec, R + 1));
  profile.relations_begin = L - 1;
  for (Index n = L - 1; n <= R; ++n) {
    profile.window_relations.push_back(q.at(n + 1) == 0 ? Relation::EQ : Relation::LT);
  }
  if (profile.left.shape == Shape::StrictIncrease) {
    std::optional<Index> k;
    if (!profile.left.equalities.empty()) {
      k = profile.left.equalities.front();
    } else {
      for (Index n = L - 1; n <= R && !k; ++n) {
        if (profile.relation_at(n) == Relation::EQ) k = n;
      }
      if (!k) {
        if (profile.right.shape == Shape::Constant) {
          k = R + 1;
        } else if (!profile.right.equalities.empty()) {
          k = profile.right.equalities.front();
        }
      }
    }
    profile.first_equality_index = k;
  }
  out.hyponormal = true;
  out.profile = std::move(profile);
  return out;
}

const char* to_string(VerdictClass c) {
  switch (c) {
    case VerdictClass::NotHyponormal: return "NotHyponormal";
    case VerdictClass::Normal: return "Normal";
    case VerdictClass::NearSubnormal: return "NearSubnormal";
    case VerdictClass::HyponormalNotNearSubnormal: return "HyponormalNotNearSubnormal";
    case VerdictClass::Undecided: return "Undecided";
  }
  return "?";
}

const char* to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::None: return "None";
    case TheoremTag::Theorem1: return "Theorem1";
    case TheoremTag::Theorem2: return "Theorem2";
    case TheoremTag::Theorem1Converse: return "Theorem1Converse";
    case TheoremTag::Theorem2Converse: return "Theorem2Converse";
    case TheoremTag::Theorem3: return "Theorem3";
    case TheoremTag::Theorem4: return "Theorem4";
  }
  return "?";
}

VerdictClass verdict_class_from_string(const std::string& s) {
  for (auto c : {VerdictClass::NotHyponormal, VerdictClass::Normal, VerdictClass::NearSubnormal,
                 VerdictClass::HyponormalNotNearSubnormal, VerdictClass::Undecided}) {
    if (s == to_string(c)) return c;
  }
  throw ParseError("unknown verdict class \"" + s + "\"");
}

TheoremTag theorem_tag_from_string(const std::string& s) {
  for (auto t : {TheoremTag::None, TheoremTag::Theorem1, TheoremTag::Theorem2,
                 TheoremTag::Theorem1Converse, TheoremTag::Theorem2Converse, TheoremTag::Theorem3,
                 TheoremTag::Theorem4}) {
    if (s == to_string(t)) return t;
  }
  throw ParseError("unknown theorem tag \"" + s + "\"");
}

const char* to_string(ReplayPoint::Quantity q) {
  switch (q) {
    case ReplayPoint::Quantity::Weight: return "weight";
    case ReplayPoint::Quantity::QDiag: return "d";
    case ReplayPoint::Quantity::GammaSq: return "gamma_sq";
  }
  return "?";
}

namespace {

// First n >= from with relation LT; the caller guarantees one exists within reach.
Index first_increase_from(const StructureProfile& p, Index from) {
  Index reach = std::max(from, p.right_begin());
  if (!p.right.equalities.empty()) reach = std::max(reach, p.right.equalities.back());
  for (Index n = from; n <= reach + 1; ++n) {
    if (p.relation_at(n) == Relation::LT) return n;
  }
  throw std::logic_error("no strict increase after the equality index");
}

// Theorem 4 pattern |b_{j-1}| < |b_j| = |b_{j+1}| < |b_{j+2}|, smallest j.
std::optional<Index> find_flat_pair(const StructureProfile& p) {
  std::set<Index> eq(p.left.equalities.begin(), p.left.equalities.end());
  for (Index n = p.relations_begin; n < p.right_begin(); ++n) {
    if (p.relation_at(n) == Relation::EQ) eq.insert(n);
  }
  if (p.right.shape == Shape::StrictIncrease) eq.insert(p.right.equalities.begin(), p.right.equalities.end());
  if (p.left.shape == Shape::Constant) return std::nullopt;
  for (Index j : eq) {
    if (p.relation_at(j - 1) == Relation::LT && p.relation_at(j + 1) == Relation::LT) return j;
  }
  return std::nullopt;
}

std::vector<ReplayPoint> replay_points_for(const WeightSpec& spec, const Verdict& v,
                                           bool hyponormal) {
  const QDiagonal q(spec);
  const Index L = spec.window_start;
  const Index R = spec.window_end();
  std::set<Index> indices;
  for (Index n = L - 3; n <= R + 3; ++n) indices.insert(n);
  indices.insert(L - 25);
  indices.insert(R + 25);
  for (auto anchor : {v.k, v.j0, v.witness, v.obstruction}) {
    if (!anchor) continue;
    for (Index n = *anchor - 1; n <= *anchor + 2; ++n) indices.insert(n);
  }
  std::optional<GammaAnalysis> ga;
  if (hyponormal) ga.emplace(spec, q, v.certificate.gamma.flat_zero_from);

  std::vector<ReplayPoint> out;
  for (Index n : indices) {
    out.push_back({ReplayPoint::Quantity::Weight, n, eval_exact(spec, n)});
    out.push_back({ReplayPoint::Quantity::QDiag, n, q.at(n)});
    if (ga) out.push_back({ReplayPoint::Quantity::GammaSq, n, ga->gamma_sq(n)});
  }
  return out;
}

Verdict classify_structure(const WeightSpec& spec, const StructureProfile& p) {
  Verdict v;
  v.certificate.structure = p;
  const Index R = spec.window_end();
  const QDiagonal q(spec);

  if (p.all_equal()) {
    v.verdict = VerdictClass::Normal;
    return v;
  }

  if (p.left.shape == Shape::Constant) {
    // Constant left ray: near subnormal only if normal, which was excluded above.
    const Index n = first_increase_from(p, p.left_end() + 1);
    v.verdict = VerdictClass::HyponormalNotNearSubnormal;
    v.via = TheoremTag::Theorem3;
    v.witness = n + 1;
    v.j0 = n;
    v.obstruction = n;
    return v;
  }

  const GammaAnalysis plain(spec, q, std::nullopt);
  v.certificate.gamma.left_limit = plain.left_limit();

  if (!p.first_equality_index) {
    v.certificate.gamma.right_limit = plain.right_limit();
    const GammaBound left = gamma_bounded_on_left_ray(plain, R + 1);
    const GammaBound right = gamma_bounded_on_right_ray(plain, R + 2);
    if (left.bounded && right.bounded) {
      v.verdict = VerdictClass::NearSubnormal;
      v.via = TheoremTag::Theorem1;
      const bool left_wins = left.sup >= right.sup;
      v.certificate.gamma.sup_gamma_sq = left_wins ? left.sup : right.sup;
      v.certificate.gamma.sup_argmax = left_wins ? left.argmax : right.argmax;
    } else {
      v.verdict = VerdictClass::HyponormalNotNearSubnormal;
      v.via = TheoremTag::Theorem1Converse;
    }
    return v;
  }

  const Index k = *p.first_equality_index;
  v.k = k;
  bool flat_after_k = p.right.shape == Shape::Constant;
  for (Index n = k; flat_after_k && n < p.right_begin(); ++n) {
    flat_after_k = p.relation_at(n) == Relation::EQ;
  }

  if (flat_after_k) {
    const GammaAnalysis ga(spec, q, k);
    v.certificate.gamma.right_limit = ga.right_limit();
    v.certificate.gamma.flat_zero_from = k;
    const GammaBound left = gamma_bounded_on_left_ray(ga, k - 1);
    if (left.bounded) {
      v.verdict = VerdictClass::NearSubnormal;
      v.via = TheoremTag::Theorem2;
      v.certificate.gamma.sup_gamma_sq = left.sup;
      v.certificate.gamma.sup_argmax = left.argmax;
    } else {
      v.verdict = VerdictClass::HyponormalNotNearSubnormal;
      v.via = TheoremTag::Theorem2Converse;
    }
    return v;
  }

  v.verdict = VerdictClass::HyponormalNotNearSubnormal;
  v.certificate.gamma.right_limit = plain.right_limit();
  if (const auto j = find_flat_pair(p)) {
    v.via = TheoremTag::Theorem4;
    v.j0 = *j;
    v.witness = *j + 1;
    v.obstruction = *j + 1;
  } else {
    v.via = TheoremTag::Theorem2Converse;
    const Index n = first_increase_from(p, k);
    v.witness = n;
    v.obstruction = n;
  }
  return v;
}

}  // namespace

Verdict classify(const WeightSpec& spec) {
  const HyponormalCheck check = check_hyponormal(spec);
  Verdict v;
  if (!check.hyponormal) {
    v.verdict = VerdictClass::NotHyponormal;
    v.witness = check.witness;
  } else {
    v = classify_structure(spec, *check.profile);
  }
  v.certificate.theorem_applied = v.via;
  v.certificate.replay_points = replay_points_for(spec, v, check.hyponormal);
  return v;
}

std::vector<Verdict> classify_all(std::span<const WeightSpec> specs) {
  std::vector<Verdict> out(specs.size());
  const auto count = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = classify(specs[static_cast<std::size_t>(i)]);
  }
  return out;
}

namespace {

std::string render(const std::optional<Rational>& v) { return v ? to_string(*v) : "undefined"; }

}  // namespace

ReplayResult replay(const Certificate& cert, const WeightSpec& spec) {
  ReplayResult out;
  auto fail = [&out](std::string detail) {
    out.consistent = false;
    out.detail = std::move(detail);
    return out;
  };
  const ValidationReport valid = validate(spec);
  if (!valid.ok()) return fail("spec does not validate: " + valid.violations.front().message);

  const Verdict fresh = classify(spec);
  if (fresh.certificate.theorem_applied != cert.theorem_applied) {
    return fail(std::string("theorem mismatch: certificate ") + to_string(cert.theorem_applied) +
                ", recomputed " + to_string(fresh.certificate.theorem_applied));
  }
  if (fresh.certificate.structure != cert.structure) return fail("structure profile mismatch");
  if (!(fresh.certificate.gamma == cert.gamma)) return fail("gamma summary mismatch");

  const QDiagonal q(spec);
  std::optional<GammaAnalysis> ga;
  if (cert.structure) ga.emplace(spec, q, cert.gamma.flat_zero_from);
  for (const ReplayPoint& rp : cert.replay_points) {
    std::optional<Rational> actual;
    switch (rp.quantity) {
      case ReplayPoint::Quantity::Weight: actual = eval_exact(spec, rp.index); break;
      case ReplayPoint::Quantity::QDiag: actual = q.at(rp.index); break;
      case ReplayPoint::Quantity::GammaSq:
        if (!ga) return fail("gamma replay point on a non-hyponormal certificate");
        actual = ga->gamma_sq(rp.index);
        break;
    }
    if (actual != rp.value) {
      std::ostringstream os;
      os << to_string(rp.quantity) << " at n = " << rp.index << ": certificate "
         << render(rp.value) << ", recomputed " << render(actual);
      return fail(os.str());
    }
  }
  return out;
}

}  // namespace wshift
