#include "sumset/report_io.hpp"

#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "sumset/errors.hpp"

namespace sumset {
namespace {

using nlohmann::json;

json values_json(std::span<const Element> v) { return json(std::vector<Element>(v.begin(), v.end())); }

json set_list(const std::vector<GroundSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

json inclusion_json(const InclusionCheck& c) {
  return {{"name", c.name},
          {"status", to_string(c.status)},
          {"note", c.note},
          {"subset_cardinality", c.subset_cardinality},
          {"missing", c.missing}};
}

json family_json(const WitnessFamilyCheck& f) {
  return {{"family", f.family},
          {"side", f.side},
          {"h", f.sumset_h},
          {"status", to_string(f.status)},
          {"witnesses", f.witnesses},
          {"all_members", f.all_members},
          {"strictly_increasing", f.strictly_increasing},
          {"interval_ok", f.interval_ok},
          {"gap_count", f.gap_count},
          {"required_gap_count", f.required_gap_count}};
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::int64_t to_int(std::string_view token, std::string_view key) {
  std::int64_t v{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("manifest key '" + std::string(key) + "': bad value '" + std::string(token) +
                     "'; expected an integer, a range a..b, or a list a,b,c");
  }
  return v;
}

std::vector<std::int64_t> parse_values(std::string_view text, std::string_view key) {
  std::vector<std::int64_t> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = to_int(item.substr(0, dots), key);
      const auto hi = to_int(item.substr(dots + 2), key);
      if (hi < lo) throw ParseError("manifest key '" + std::string(key) + "': empty range");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(to_int(item, key));
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

json to_record(const GroundSet& a, const SumParams& params, const SumsetResult& s) {
  json j = {{"command", "compute"},
            {"set", a.to_string()},
            {"h", params.h()},
            {"r", params.r()},
            {"m", params.m()},
            {"epsilon", params.epsilon()},
            {"values", values_json(s.values())},
            {"cardinality", s.cardinality()}};
  if (auto lo = s.min_value()) j["min"] = *lo;
  if (auto hi = s.max_value()) j["max"] = *hi;
  return j;
}

json to_record(const BoundReport& rep) {
  return {{"command", "verify-direct"},
          {"bound", to_string(rep.kind)},
          {"set", rep.set.to_string()},
          {"h", rep.h},
          {"r", rep.r},
          {"cardinality", rep.computed_cardinality},
          {"bound_value", rep.bound_value},
          {"slack", rep.slack()},
          {"verdict", rep.violated() ? "violated" : rep.equality() ? "equality" : "strict"}};
}

json to_record(const ComplementReport& rep, const GroundSet& a) {
  return {{"command", "verify-complement"},
          {"set", a.to_string()},
          {"h", rep.params.h()},
          {"r", rep.params.r()},
          {"complement_h", rep.complement_h},
          {"cardinality", rep.cardinality},
          {"complement_cardinality", rep.complement_cardinality},
          {"verdict", rep.holds() ? "holds" : "fails"}};
}

json to_record(const Lemma1Report& rep, const GroundSet& a) {
  return {{"command", "verify-lemma1"},
          {"set", a.to_string()},
          {"m", rep.m},
          {"r", rep.r},
          {"h", rep.m * rep.r},
          {"generalized_cardinality", rep.generalized_cardinality},
          {"iterated_cardinality", rep.iterated_cardinality},
          {"symmetric_difference", rep.symmetric_difference},
          {"verdict", rep.equal ? "equal" : "differ"}};
}

json to_record(const WitnessReport& rep, const GroundSet& a) {
  json fams = json::array();
  for (const auto& f : rep.families) fams.push_back(family_json(f));
  json j = {{"command", "verify-inclusions"},
            {"set", a.to_string()},
            {"h", rep.params.h()},
            {"r", rep.params.r()},
            {"m", rep.params.m()},
            {"epsilon", rep.params.epsilon()},
            {"case", rep.proof_case},
            {"prefix_inclusion", inclusion_json(rep.prefix_inclusion)},
            {"b_inclusion", inclusion_json(rep.b_inclusion)},
            {"families", fams},
            {"verdict", rep.failed() ? "failed" : "passed"}};
  if (rep.complement) {
    j["complement"] = {{"complement_h", rep.complement->complement_h},
                       {"cardinality", rep.complement->cardinality},
                       {"complement_cardinality", rep.complement->complement_cardinality}};
  }
  return j;
}

json to_record(const Decomposition& d, const GroundSet& a, const MultiplicityVector& mult) {
  json parts = json::array();
  for (const auto& part : d.parts) {
    json vals = json::array();
    for (auto i : part) vals.push_back(a[i]);
    parts.push_back(vals);
  }
  json trace = json::array();
  for (const auto& s : d.trace) {
    trace.push_back({{"step", s.step},
                     {"counts_before", s.counts_before},
                     {"counts_after", s.counts_after},
                     {"positive_before", s.positive_before},
                     {"max_after", s.max_after},
                     {"condition_positive", s.positive_before >= d.m},
                     {"condition_max", s.max_after <= d.r - s.step}});
  }
  return {{"command", "decompose"},
          {"set", a.to_string()},
          {"counts", std::vector<std::int64_t>(mult.counts().begin(), mult.counts().end())},
          {"r", d.r},
          {"m", d.m},
          {"h", d.m * d.r},
          {"element", d.total},
          {"parts", parts},
          {"part_sums", d.part_sums},
          {"trace", trace}};
}

json to_record(const ScanReport& rep) {
  json j = {{"command", "scan-" + rep.kind},
            {"k", rep.k},
            {"h", rep.h},
            {"r", rep.r},
            {"within_hypothesis", rep.within_hypothesis},
            {"target", rep.target},
            {"candidates", rep.candidates},
            {"equality_sets", set_list(rep.equality_sets)},
            {"ap_verdicts", rep.ap_verdicts},
            {"counterexamples", set_list(rep.counterexamples)},
            {"bound_violations", set_list(rep.bound_violations)},
            {"verdict", rep.failed() ? "failed" : "passed"}};
  if (rep.kind == "extremal") j["max_diameter"] = rep.max_diameter;
  else j["p"] = rep.p;
  return j;
}

std::string format_values(std::span<const Element> values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << '}';
  return os.str();
}

std::string format_table(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "bound" << std::setw(28) << "set" << std::right
     << std::setw(5) << "h" << std::setw(5) << "r" << std::setw(8) << "|S|" << std::setw(8)
     << "bound" << std::setw(7) << "slack" << "  verdict\n";
  for (const auto& rep : reports) {
    os << std::left << std::setw(18) << to_string(rep.kind) << std::setw(28)
       << rep.set.to_string() << std::right << std::setw(5) << rep.h << std::setw(5) << rep.r
       << std::setw(8) << rep.computed_cardinality << std::setw(8) << rep.bound_value
       << std::setw(7) << rep.slack() << "  "
       << (rep.violated() ? "VIOLATED" : rep.equality() ? "equality" : "strict") << '\n';
  }
  return os.str();
}

ScanManifest parse_manifest(std::string_view text) {
  ScanManifest m;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string s = strip(line);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ParseError("manifest line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = s.substr(0, eq);
    const std::string value = s.substr(eq + 1);
    if (key == "kind") {
      if (value != "extremal" && value != "inverse-eh")
        throw ParseError("manifest kind must be 'extremal' or 'inverse-eh', got '" + value + "'");
      m.kind = value;
    } else if (key == "k") {
      m.k = parse_values(value, key);
    } else if (key == "h") {
      m.h = parse_values(value, key);
    } else if (key == "r") {
      m.r = parse_values(value, key);
    } else if (key == "max_diameter" || key == "diameter") {
      m.max_diameter = parse_values(value, key);
    } else if (key == "p") {
      m.p = parse_values(value, key);
    } else if (key == "cap") {
      m.cap = static_cast<std::uint64_t>(to_int(value, key));
    } else {
      throw ParseError("manifest line " + std::to_string(lineno) + ": unknown key '" + key +
                       "'; expected kind, k, h, r, max_diameter, p, or cap");
    }
  }
  if (m.kind.empty()) throw ParseError("manifest is missing 'kind'");
  if (m.k.empty() || m.h.empty())
    throw ParseError("manifest must give 'k' and 'h'");
  if (m.kind == "extremal" && (m.r.empty() || m.max_diameter.empty()))
    throw ParseError("extremal manifest must give 'r' and 'max_diameter'");
  if (m.kind == "inverse-eh" && m.p.empty()) throw ParseError("inverse-eh manifest must give 'p'");
  return m;
}

}  // namespace sumset
