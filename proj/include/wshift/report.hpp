#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wshift/classifier.hpp"
#include "wshift/oracle.hpp"

namespace wshift {

struct LimitEntry {
  bool finite = true;
  std::string exact;    // rational string, or "+inf" / "-inf"
  std::string decimal;
  friend bool operator==(const LimitEntry&, const LimitEntry&) = default;
};

struct OracleSummary {
  Index half_width = 0;
  Index dim = 0;
  double tol = 0.0;
  bool insufficient_interior = false;
  double q_diag_residual = 0.0;
  double q_offdiag_residual = 0.0;
  double gamma_residual = 0.0;
  Index gamma_unresolved = 0;
  double flat_zero_max = 0.0;
  std::vector<std::pair<Index, double>> invariance_violations;
  std::vector<std::pair<Index, double>> norm_trace;
  /// "AGREES", "DISAGREES" or "NOT_CLAIMED".
  std::string concordance;
  std::string concordance_detail;
  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct Report {
  std::string spec_name;
  std::string headline;
  std::string verdict;
  std::string theorem;
  std::optional<Index> witness;
  std::optional<Index> k;
  std::optional<Index> j0;
  std::optional<Index> obstruction;
  std::optional<LimitEntry> left_gamma_sq_limit;
  std::optional<LimitEntry> right_gamma_sq_limit;
  std::optional<std::string> sup_gamma_sq;
  std::optional<std::string> sup_gamma_sq_decimal;
  std::optional<Index> sup_argmax;
  std::optional<Index> flat_zero_from;
  std::string replay;
  std::optional<OracleSummary> oracle;
  std::vector<std::string> annotations;
  friend bool operator==(const Report&, const Report&) = default;
};

/// One-line human summary, e.g. "NearSubnormal (Theorem 2), k = 0, left γ limit 0".
std::string headline(const Verdict& v);

Report make_report(const WeightSpec& spec, const Verdict& v, const ReplayResult& replay);

/// Indices the truncation interior must cover before the oracle may claim concordance.
std::pair<Index, Index> required_interior(const WeightSpec& spec, const Verdict& v);

/// Compares the symbolic verdict with the oracle's findings.
OracleSummary summarize_oracle(const WeightSpec& spec, const Verdict& v,
                               const TruncationReport& tr);

/// Summary for a spec whose truncated commutator is not PSD.
OracleSummary summarize_not_psd(const Verdict& v, Index half_width, Index bad_index);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);
std::string render_text(const Report& r);

}  // namespace wshift
