#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sumset/decomposition.hpp"
#include "sumset/scan.hpp"
#include "sumset/sumset.hpp"
#include "sumset/verify.hpp"

namespace sumset {

// Machine-readable records: one JSON object per instance, written one per
// line by the CLI.
nlohmann::json to_record(const GroundSet& a, const SumParams& params, const SumsetResult& s);
nlohmann::json to_record(const BoundReport& rep);
nlohmann::json to_record(const ComplementReport& rep, const GroundSet& a);
nlohmann::json to_record(const Lemma1Report& rep, const GroundSet& a);
nlohmann::json to_record(const WitnessReport& rep, const GroundSet& a);
nlohmann::json to_record(const Decomposition& d, const GroundSet& a, const MultiplicityVector& mult);
nlohmann::json to_record(const ScanReport& rep);

std::string format_values(std::span<const Element> values);

/// Fixed-width table of bound reports, one row per instance.
std::string format_table(const std::vector<BoundReport>& reports);

/// Scan grid read from "key = value" lines. Values are an integer, a range
/// "a..b", or a list "a,b,c". '#' starts a comment.
///
///   kind = extremal        # or inverse-eh
///   k = 5
///   r = 2..3
///   h = 2..13
///   max_diameter = 15      # extremal
///   p = 11,13              # inverse-eh
///   cap = 100000000
struct ScanManifest {
  std::string kind;
  std::vector<std::int64_t> k;
  std::vector<std::int64_t> h;
  std::vector<std::int64_t> r;
  std::vector<std::int64_t> max_diameter;
  std::vector<std::int64_t> p;
  std::uint64_t cap = ScanOptions{}.cap;
};

ScanManifest parse_manifest(std::string_view text);

}  // namespace sumset
