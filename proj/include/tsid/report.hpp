#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsid/counting.hpp"
#include "tsid/covers.hpp"
#include "tsid/property.hpp"
#include "tsid/quasirandom.hpp"

namespace tsid {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema_id = "tsid-report/1";

// Exact values are {"num": "...", "den": "..."}; fields ending in _approx
// are floating-point conveniences only.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

std::string to_string(Property p);
std::string to_string(Verdict v);
std::string to_string(CountMode m);
Property property_from_string(const std::string& s);
CountMode count_mode_from_string(const std::string& s);

Json to_json(const PropertyReport& r);
Json to_json(const CountResult& r);
Json to_json(const EpsilonResult& r);
Json to_json(const ImpartialResult& r);
Json to_json(const BlowupFalsifier& f);
Json to_json(const InterpolationResult& r);
Json to_json(const std::vector<ForcingRow>& rows);
Json to_json(const CoverCheck& c);
Json to_json(const TtClaimReport& r);
Json to_json(const TwoPathCheck& c);
Json to_json(const MultiplicityProbe& p);

enum class OutputFormat { Json, Text };

/// A validated job: the subcommand, its positional arguments and flags,
/// and the global settings.
struct RunConfig {
  std::string command;
  std::vector<std::string> args;
  std::map<std::string, std::string> flags;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = default_work_budget;
  int threads = 0;
  std::string output;  // empty means stdout
  OutputFormat format = OutputFormat::Json;

  bool operator==(const RunConfig&) const = default;
};

Json to_json(const RunConfig& c);
RunConfig run_config_from_json(const Json& j);

/// {"schema", "config", "kind", "result"}. The thread count and output
/// path are left out of the embedded config: they do not affect results.
Json make_envelope(const RunConfig& c, const std::string& kind, Json result);

/// Flat "path: value" lines for the text format.
std::string render_text(const Json& j);

struct WitnessCheck {
  bool present = false;
  bool confirmed = false;
  Rational ratio;
  std::string message;
};

/// Recounts the witness of a property report (labeled or pinned count
/// against 2^{-e} n^{v-|I|}) and confirms that the ratio exceeds 1.
WitnessCheck reverify_witness(const Json& property_report);

}  // namespace tsid
