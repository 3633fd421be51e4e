#include "wshift/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wshift {

namespace {

using OJson = nlohmann::ordered_json;

LimitEntry limit_entry(const Limit& l) {
  if (!l.finite) return {false, l.infinite_sign > 0 ? "+inf" : "-inf", l.infinite_sign > 0 ? "inf" : "-inf"};
  return {true, to_string(l.value), to_decimal(l.value)};
}

// gamma limit rendered from the gamma^2 limit.
std::string gamma_of(const Limit& sq) {
  if (!sq.finite) return "infinite";
  if (auto r = exact_sqrt(sq.value)) return to_string(*r);
  return "sqrt(" + to_string(sq.value) + ")";
}

std::string theorem_label(TheoremTag t) {
  switch (t) {
    case TheoremTag::Theorem1: return "Theorem 1";
    case TheoremTag::Theorem2: return "Theorem 2";
    case TheoremTag::Theorem1Converse: return "Theorem 1, converse";
    case TheoremTag::Theorem2Converse: return "Theorem 2, converse";
    case TheoremTag::Theorem3: return "Theorem 3";
    case TheoremTag::Theorem4: return "Theorem 4";
    case TheoremTag::None: break;
  }
  return "";
}

}  // namespace

std::string headline(const Verdict& v) {
  std::ostringstream os;
  const GammaSummary& g = v.certificate.gamma;
  switch (v.verdict) {
    case VerdictClass::NotHyponormal:
      os << "NOT hyponormal, |β_n| > |β_{n+1}| at n = " << *v.witness;
      break;
    case VerdictClass::Normal:
      os << "Normal";
      break;
    case VerdictClass::NearSubnormal:
      os << "NearSubnormal (" << theorem_label(v.via) << ")";
      if (v.k) os << ", k = " << *v.k;
      if (g.left_limit) os << ", left γ limit " << gamma_of(*g.left_limit);
      if (v.via == TheoremTag::Theorem1 && g.right_limit) {
        os << ", right γ limit " << gamma_of(*g.right_limit);
      }
      break;
    case VerdictClass::HyponormalNotNearSubnormal:
      os << "Hyponormal, NOT near subnormal (" << theorem_label(v.via) << ")";
      if (v.via == TheoremTag::Theorem4) os << ", j₀ = " << *v.j0;
      break;
    case VerdictClass::Undecided:
      os << "Undecided";
      break;
  }
  return os.str();
}

Report make_report(const WeightSpec& spec, const Verdict& v, const ReplayResult& replay) {
  Report r;
  r.spec_name = spec.name;
  r.headline = headline(v);
  r.verdict = to_string(v.verdict);
  r.theorem = to_string(v.via);
  r.witness = v.witness;
  r.k = v.k;
  r.j0 = v.j0;
  r.obstruction = v.obstruction;
  const GammaSummary& g = v.certificate.gamma;
  if (g.left_limit) r.left_gamma_sq_limit = limit_entry(*g.left_limit);
  if (g.right_limit) r.right_gamma_sq_limit = limit_entry(*g.right_limit);
  if (g.sup_gamma_sq) {
    r.sup_gamma_sq = to_string(*g.sup_gamma_sq);
    r.sup_gamma_sq_decimal = to_decimal(*g.sup_gamma_sq);
  }
  r.sup_argmax = g.sup_argmax;
  r.flat_zero_from = g.flat_zero_from;
  r.replay = replay.consistent ? "Consistent" : "Inconsistent: " + replay.detail;
  if (!spec.notes.empty()) r.annotations.push_back(spec.notes);
  return r;
}

std::pair<Index, Index> required_interior(const WeightSpec& spec, const Verdict& v) {
  Index lo = spec.window_start - 3;
  Index hi = spec.window_end() + 3;
  for (auto anchor : {v.k, v.j0, v.witness, v.obstruction}) {
    if (!anchor) continue;
    lo = std::min(lo, *anchor - 2);
    hi = std::max(hi, *anchor + 2);
  }
  return {lo, hi};
}

namespace {

bool covers(Index half_width, std::pair<Index, Index> range) {
  return range.first >= -(half_width - 2) && range.second <= half_width - 2;
}

// Growth of the norm trace across the sweep: the oracle's unboundedness evidence.
bool trace_grows(const std::vector<NormSample>& trace) {
  if (trace.size() < 2) return false;
  return trace.back().norm > 1.5 * trace.front().norm;
}

}  // namespace

OracleSummary summarize_oracle(const WeightSpec& spec, const Verdict& v,
                               const TruncationReport& tr) {
  OracleSummary s;
  s.half_width = tr.half_width;
  s.dim = 2 * tr.half_width + 1;
  s.tol = tr.tol;
  s.q_diag_residual = tr.q_diag_residual;
  s.q_offdiag_residual = tr.q_offdiag_residual;
  s.gamma_residual = tr.gamma_residual;
  s.gamma_unresolved = tr.gamma_unresolved;
  s.flat_zero_max = tr.flat_zero_max;
  for (const auto& viol : tr.invariance_violations) s.invariance_violations.emplace_back(viol.index, viol.magnitude);
  for (const auto& n : tr.norm_trace) s.norm_trace.emplace_back(n.half_width, n.norm);

  if (!covers(tr.half_width, required_interior(spec, v))) {
    s.insufficient_interior = true;
    s.concordance = "NOT_CLAIMED";
    s.concordance_detail = "insufficient interior";
    return s;
  }

  std::vector<std::string> problems;
  const double scale = 1.0 + tr.max_weight_sq;
  if (tr.q_diag_residual >= 1e-10 * scale) problems.push_back("Q diagonal residual too large");
  if (tr.q_offdiag_residual >= 1e-12 * scale) problems.push_back("Q off-diagonal residual too large");
  if (tr.gamma_residual >= 1e-8 * std::sqrt(scale)) problems.push_back("gamma residual too large");
  if (tr.flat_zero_max >= 1e-8) problems.push_back("nonzero entries on the flat region");

  const bool violations = !tr.invariance_violations.empty();
  const bool grows = trace_grows(tr.norm_trace);
  switch (v.verdict) {
    case VerdictClass::Normal:
      if (violations) problems.push_back("invariance violation on a normal shift");
      for (const auto& n : tr.norm_trace) {
        if (n.norm > std::sqrt(tr.tol)) problems.push_back("nonzero transformed operator on a normal shift");
      }
      break;
    case VerdictClass::NearSubnormal:
      if (violations) problems.push_back("invariance violation on a near subnormal shift");
      if (grows) problems.push_back("norm trace grows");
      break;
    case VerdictClass::HyponormalNotNearSubnormal:
      if (!violations && !grows) problems.push_back("no obstruction observed");
      if (v.obstruction &&
          std::none_of(tr.invariance_violations.begin(), tr.invariance_violations.end(),
                       [&](const InvarianceViolation& x) { return x.index == *v.obstruction; })) {
        problems.push_back("no invariance violation at n = " + std::to_string(*v.obstruction));
      }
      break;
    case VerdictClass::NotHyponormal:
      problems.push_back("truncated commutator is PSD on a non-hyponormal spec");
      break;
    case VerdictClass::Undecided:
      problems.push_back("symbolic verdict undecided");
      break;
  }
  if (problems.empty()) {
    s.concordance = "AGREES";
  } else {
    s.concordance = "DISAGREES";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      s.concordance_detail += (i ? "; " : "") + problems[i];
    }
  }
  return s;
}

OracleSummary summarize_not_psd(const Verdict& v, Index half_width, Index bad_index) {
  OracleSummary s;
  s.half_width = half_width;
  s.dim = 2 * half_width + 1;
  s.concordance_detail = "spec not hyponormal at index " + std::to_string(bad_index);
  s.concordance = v.verdict == VerdictClass::NotHyponormal ? "AGREES" : "DISAGREES";
  return s;
}

namespace {

template <class T>
void put(OJson& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? OJson(*v) : OJson(nullptr);
}

template <class T>
std::optional<T> take(const OJson& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

OJson limit_json(const std::optional<LimitEntry>& l) {
  if (!l) return nullptr;
  return OJson{{"finite", l->finite}, {"exact", l->exact}, {"decimal", l->decimal}};
}

std::optional<LimitEntry> limit_from(const OJson& j) {
  if (j.is_null()) return std::nullopt;
  return LimitEntry{j.at("finite").get<bool>(), j.at("exact").get<std::string>(),
                    j.at("decimal").get<std::string>()};
}

OJson pairs_json(const std::vector<std::pair<Index, double>>& v, const char* a, const char* b) {
  auto arr = OJson::array();
  for (const auto& [i, x] : v) arr.push_back(OJson{{a, i}, {b, x}});
  return arr;
}

std::vector<std::pair<Index, double>> pairs_from(const OJson& j, const char* a, const char* b) {
  std::vector<std::pair<Index, double>> out;
  for (const auto& e : j) out.emplace_back(e.at(a).get<Index>(), e.at(b).get<double>());
  return out;
}

}  // namespace

OJson to_json(const Report& r) {
  OJson j;
  j["spec"] = r.spec_name;
  j["headline"] = r.headline;
  j["verdict"] = r.verdict;
  j["theorem"] = r.theorem;
  put(j, "witness", r.witness);
  put(j, "k", r.k);
  put(j, "j0", r.j0);
  put(j, "obstruction", r.obstruction);
  OJson cert;
  cert["left_gamma_sq_limit"] = limit_json(r.left_gamma_sq_limit);
  cert["right_gamma_sq_limit"] = limit_json(r.right_gamma_sq_limit);
  put(cert, "sup_gamma_sq", r.sup_gamma_sq);
  put(cert, "sup_gamma_sq_decimal", r.sup_gamma_sq_decimal);
  put(cert, "sup_argmax", r.sup_argmax);
  put(cert, "flat_zero_from", r.flat_zero_from);
  cert["replay"] = r.replay;
  j["certificate"] = cert;
  if (r.oracle) {
    const OracleSummary& o = *r.oracle;
    OJson oj;
    oj["half_width"] = o.half_width;
    oj["dim"] = o.dim;
    oj["tol"] = o.tol;
    oj["insufficient_interior"] = o.insufficient_interior;
    oj["q_diag_residual"] = o.q_diag_residual;
    oj["q_offdiag_residual"] = o.q_offdiag_residual;
    oj["gamma_residual"] = o.gamma_residual;
    oj["gamma_unresolved"] = o.gamma_unresolved;
    oj["flat_zero_max"] = o.flat_zero_max;
    oj["invariance_violations"] = pairs_json(o.invariance_violations, "n", "magnitude");
    oj["norm_trace"] = pairs_json(o.norm_trace, "N", "norm");
    oj["concordance"] = o.concordance;
    oj["concordance_detail"] = o.concordance_detail;
    j["oracle"] = oj;
  } else {
    j["oracle"] = nullptr;
  }
  j["annotations"] = r.annotations;
  return j;
}

Report report_from_json(const OJson& j) {
  Report r;
  r.spec_name = j.at("spec").get<std::string>();
  r.headline = j.at("headline").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.theorem = j.at("theorem").get<std::string>();
  r.witness = take<Index>(j, "witness");
  r.k = take<Index>(j, "k");
  r.j0 = take<Index>(j, "j0");
  r.obstruction = take<Index>(j, "obstruction");
  const OJson& cert = j.at("certificate");
  r.left_gamma_sq_limit = limit_from(cert.at("left_gamma_sq_limit"));
  r.right_gamma_sq_limit = limit_from(cert.at("right_gamma_sq_limit"));
  r.sup_gamma_sq = take<std::string>(cert, "sup_gamma_sq");
  r.sup_gamma_sq_decimal = take<std::string>(cert, "sup_gamma_sq_decimal");
  r.sup_argmax = take<Index>(cert, "sup_argmax");
  r.flat_zero_from = take<Index>(cert, "flat_zero_from");
  r.replay = cert.at("replay").get<std::string>();
  if (const OJson& oj = j.at("oracle"); !oj.is_null()) {
    OracleSummary o;
    o.half_width = oj.at("half_width").get<Index>();
    o.dim = oj.at("dim").get<Index>();
    o.tol = oj.at("tol").get<double>();
    o.insufficient_interior = oj.at("insufficient_interior").get<bool>();
    o.q_diag_residual = oj.at("q_diag_residual").get<double>();
    o.q_offdiag_residual = oj.at("q_offdiag_residual").get<double>();
    o.gamma_residual = oj.at("gamma_residual").get<double>();
    o.gamma_unresolved = oj.at("gamma_unresolved").get<Index>();
    o.flat_zero_max = oj.at("flat_zero_max").get<double>();
    o.invariance_violations = pairs_from(oj.at("invariance_violations"), "n", "magnitude");
    o.norm_trace = pairs_from(oj.at("norm_trace"), "N", "norm");
    o.concordance = oj.at("concordance").get<std::string>();
    o.concordance_detail = oj.at("concordance_detail").get<std::string>();
    r.oracle = o;
  }
  r.annotations = j.at("annotations").get<std::vector<std::string>>();
  return r;
}

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "spec: " << (r.spec_name.empty() ? "(unnamed)" : r.spec_name) << "\n";
  os << "verdict: " << r.headline << "\n";
  os << "class: " << r.verdict << "\n";
  os << "theorem: " << r.theorem << "\n";
  if (r.witness) os << "witness: " << *r.witness << "\n";
  if (r.k) os << "k: " << *r.k << "\n";
  if (r.j0) os << "j0: " << *r.j0 << "\n";
  if (r.obstruction) os << "obstruction: " << *r.obstruction << "\n";
  if (r.left_gamma_sq_limit) {
    os << "left gamma^2 limit: " << r.left_gamma_sq_limit->exact << " ("
       << r.left_gamma_sq_limit->decimal << ")\n";
  }
  if (r.right_gamma_sq_limit) {
    os << "right gamma^2 limit: " << r.right_gamma_sq_limit->exact << " ("
       << r.right_gamma_sq_limit->decimal << ")\n";
  }
  if (r.sup_gamma_sq) {
    os << "sup gamma^2: " << *r.sup_gamma_sq << " (" << *r.sup_gamma_sq_decimal << ")";
    if (r.sup_argmax) {
      os << " attained at n = " << *r.sup_argmax;
    } else {
      os << " not attained";
    }
    os << "\n";
  }
  if (r.flat_zero_from) os << "flat zero from: " << *r.flat_zero_from << "\n";
  os << "replay: " << r.replay << "\n";
  if (r.oracle) {
    const OracleSummary& o = *r.oracle;
    os << "oracle: N = " << o.half_width << ", dim = " << o.dim << ", tol = " << fmt_double(o.tol)
       << "\n";
    if (o.insufficient_interior) {
      os << "oracle: insufficient interior\n";
    } else {
      os << "oracle: Q diagonal residual " << fmt_double(o.q_diag_residual)
         << ", off-diagonal " << fmt_double(o.q_offdiag_residual) << "\n";
      os << "oracle: gamma residual " << fmt_double(o.gamma_residual) << ", flat-region max "
         << fmt_double(o.flat_zero_max) << "\n";
      if (o.gamma_unresolved > 0) {
        os << "oracle: " << o.gamma_unresolved << " interior indices below the null threshold\n";
      }
    }
    for (const auto& [n, mag] : o.invariance_violations) {
      os << "oracle: invariance violation at n = " << n << ", |Q T e_n| = " << fmt_double(mag)
         << "\n";
    }
    for (const auto& [n, norm] : o.norm_trace) {
      os << "oracle: norm N = " << n << ": " << fmt_double(norm) << " (evidence)\n";
    }
    if (o.concordance == "AGREES") {
      os << "oracle AGREES with symbolic verdict\n";
    } else if (o.concordance == "DISAGREES") {
      os << "oracle DISAGREES with symbolic verdict: " << o.concordance_detail << "\n";
    } else {
      os << "oracle: no concordance claimed (" << o.concordance_detail << ")\n";
    }
  }
  for (const auto& a : r.annotations) os << "note: " << a << "\n";
  return os.str();
}

}  // namespace wshift
