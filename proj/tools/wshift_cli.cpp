#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wshift/classifier.hpp"
#include "wshift/fixtures.hpp"
#include "wshift/oracle.hpp"
#include "wshift/report.hpp"
#include "wshift/specfile.hpp"

namespace fs = std::filesystem;
using namespace wshift;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

WeightSpec load_validated(const std::string& path) {
  WeightSpec spec;
  try {
    spec = load_spec(path);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
  const ValidationReport vr = validate(spec);
  if (!vr.ok()) {
    std::string msg = path + ": invalid spec";
    for (const auto& v : vr.violations) msg += "\n  " + v.code + ": " + v.message;
    throw InputError(msg);
  }
  return spec;
}

void emit(const Report& r, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << render_text(r);
  }
}

int cmd_classify(const std::string& path, const std::string& format) {
  const WeightSpec spec = load_validated(path);
  const Verdict v = classify(spec);
  const ReplayResult rr = replay(v.certificate, spec);
  emit(make_report(spec, v, rr), format);
  return rr.consistent ? kExitOk : kExitInconsistent;
}

struct OracleFlags {
  Index max_dim = 1601;
  double tol = kDefaultRelativeTol;
  std::vector<Index> sweep{50, 200, 800};
  std::string format = "text";
};

int cmd_oracle(const std::string& path, OracleFlags flags) {
  const WeightSpec spec = load_validated(path);
  if (flags.max_dim < 5) throw InputError("--max-dim must be at least 5");
  if (!(flags.tol > 0)) throw InputError("--tol must be positive");
  const Verdict v = classify(spec);
  const ReplayResult rr = replay(v.certificate, spec);
  Report report = make_report(spec, v, rr);

  std::vector<Index> widths;
  for (Index n : flags.sweep) {
    if (n >= 2 && 2 * n + 1 <= flags.max_dim) widths.push_back(n);
  }
  std::sort(widths.begin(), widths.end());
  widths.erase(std::unique(widths.begin(), widths.end()), widths.end());
  if (widths.empty()) widths.push_back((flags.max_dim - 1) / 2);

  try {
    const TruncationReport tr = truncation_report(spec, widths, flags.tol);
    report.oracle = summarize_oracle(spec, v, tr);
  } catch (const NotHyponormalAtIndex& e) {
    report.oracle = summarize_not_psd(v, widths.back(), e.index());
  }
  emit(report, flags.format);
  if (!rr.consistent || report.oracle->concordance == "DISAGREES") return kExitInconsistent;
  return kExitOk;
}

int cmd_examples(const std::string& which, const std::string& dir, const std::string& lambda,
                 const std::string& mu) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir + ": " + ec.message());
  Rational l, m;
  try {
    l = parse_rational(lambda);
    m = parse_rational(mu);
  } catch (const Error& e) {
    throw InputError(std::string("--lambda/--mu: ") + e.what());
  }
  if (!(0 < l && l < m)) throw InputError("--lambda and --mu need 0 < lambda < mu");

  for (auto& f : fixtures::all()) {
    if (which != "all" && which != f.id) continue;
    if (f.id == "3") f.spec = fixtures::example3(l, m);
    const fs::path out = fs::path(dir) / f.file_name;
    std::ofstream os(out);
    if (!os) throw InputError("cannot write " + out.string());
    os << dump_spec(f.spec);
    if (!os) throw InputError("cannot write " + out.string());
    std::cout << out.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifier for bilateral weighted shifts"};
  app.require_subcommand(1);

  std::string path, format = "text";
  auto* classify_cmd = app.add_subcommand("classify", "Classify a spec file");
  classify_cmd->add_option("file", path, "Spec file")->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  OracleFlags oflags;
  auto* oracle_cmd = app.add_subcommand("oracle", "Classify and cross-check with finite truncations");
  oracle_cmd->add_option("file", path, "Spec file")->required();
  oracle_cmd->add_option("--max-dim", oflags.max_dim, "Largest truncation dimension");
  oracle_cmd->add_option("--tol", oflags.tol, "Null-space threshold relative to max |beta|^2");
  oracle_cmd->add_option("--sweep", oflags.sweep, "Half-widths N")->delimiter(',');
  oracle_cmd->add_option("--format", oflags.format)->check(CLI::IsMember({"text", "json"}));

  std::string which = "all", dir = ".", lambda = "1", mu = "2";
  auto* examples_cmd = app.add_subcommand("examples", "Write the built-in fixtures");
  examples_cmd->add_option("--which", which)->check(CLI::IsMember({"1", "2", "3", "thm4", "all"}));
  examples_cmd->add_option("--emit", dir, "Output directory");
  examples_cmd->add_option("--lambda", lambda, "Example 3 lambda");
  examples_cmd->add_option("--mu", mu, "Example 3 mu");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(path, format);
    if (*oracle_cmd) return cmd_oracle(path, oflags);
    return cmd_examples(which, dir, lambda, mu);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
