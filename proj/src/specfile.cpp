#include "wshift/specfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace wshift {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("field " + field + ": " + what);
}

void reject_unknown(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail(where.empty() ? key : where + "." + key, "unknown field");
  }
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  const std::string field = where.empty() ? key : where + "." + key;
  if (it == obj.end()) fail(field, "missing");
  return *it;
}

Rational rational_field(const Json& value, const std::string& field) {
  if (!value.is_string()) fail(field, "expected a rational string such as \"-1/3\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

Polynomial polynomial_field(const Json& value, const std::string& field) {
  if (!value.is_array()) fail(field, "expected an array of rational strings");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < value.size(); ++i) {
    coeffs.push_back(rational_field(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return Polynomial(std::move(coeffs));
}

TailSpec tail_field(const Json& value, const std::string& field) {
  if (!value.is_object()) fail(field, "expected an object");
  const Json& kind = require(value, "kind", field);
  if (!kind.is_string()) fail(field + ".kind", "expected \"constant\" or \"rational\"");
  const std::string k = kind.get<std::string>();
  if (k == "constant") {
    reject_unknown(value, {"kind", "value"}, field);
    return TailSpec::constant(rational_field(require(value, "value", field), field + ".value"));
  }
  if (k == "rational") {
    reject_unknown(value, {"kind", "num", "den"}, field);
    const Polynomial num = polynomial_field(require(value, "num", field), field + ".num");
    const Polynomial den = polynomial_field(require(value, "den", field), field + ".den");
    if (den.is_zero()) fail(field + ".den", "zero denominator polynomial");
    return TailSpec::rational(RationalFunction(num, den));
  }
  fail(field + ".kind", "expected \"constant\" or \"rational\", got \"" + k + "\"");
}

std::string string_field(const Json& obj, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_string()) fail(key, "expected a string");
  return it->get<std::string>();
}

nlohmann::ordered_json polynomial_json(const Polynomial& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
  if (arr.empty()) arr.push_back("0");
  return arr;
}

nlohmann::ordered_json tail_json(const TailSpec& tail) {
  nlohmann::ordered_json out;
  if (tail.is_constant()) {
    out["kind"] = "constant";
    out["value"] = to_string(tail.as_constant().value);
  } else {
    out["kind"] = "rational";
    out["num"] = polynomial_json(tail.as_rational().f.num());
    out["den"] = polynomial_json(tail.as_rational().f.den());
  }
  return out;
}

}  // namespace

WeightSpec parse_spec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("spec file must hold a JSON object");
  reject_unknown(doc, {"name", "notes", "window_start", "window_values", "left_tail", "right_tail"},
                 "");

  WeightSpec spec;
  const Json& start = require(doc, "window_start", "");
  if (!start.is_number_integer()) fail("window_start", "expected an integer");
  spec.window_start = start.get<Index>();
  const Json& values = require(doc, "window_values", "");
  if (!values.is_array()) fail("window_values", "expected an array of rational strings");
  for (std::size_t i = 0; i < values.size(); ++i) {
    spec.window_values.push_back(
        rational_field(values[i], "window_values[" + std::to_string(i) + "]"));
  }
  spec.left_tail = tail_field(require(doc, "left_tail", ""), "left_tail");
  spec.right_tail = tail_field(require(doc, "right_tail", ""), "right_tail");
  spec.name = string_field(doc, "name");
  spec.notes = string_field(doc, "notes");
  return spec;
}

WeightSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

nlohmann::ordered_json spec_to_json(const WeightSpec& spec) {
  nlohmann::ordered_json out;
  if (!spec.name.empty()) out["name"] = spec.name;
  if (!spec.notes.empty()) out["notes"] = spec.notes;
  out["window_start"] = spec.window_start;
  auto values = nlohmann::ordered_json::array();
  for (const auto& v : spec.window_values) values.push_back(to_string(v));
  out["window_values"] = values;
  out["left_tail"] = tail_json(spec.left_tail);
  out["right_tail"] = tail_json(spec.right_tail);
  return out;
}

std::string dump_spec(const WeightSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

}  // namespace wshift
