#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "quasiramsey/pipeline.hpp"

namespace quasiramsey {

inline constexpr const char* kCodeVersion = "quasiramsey-1.0.0";

nlohmann::json to_json(const ExtractionStep& step);
nlohmann::json to_json(const ExtractionResult& r);
nlohmann::json to_json(const SplitOutcome& s);
nlohmann::json to_json(const HalvingResult& h);
nlohmann::json to_json(const ThinningReport& t);
nlohmann::json to_json(const PipelineParams& p);
nlohmann::json to_json(const PipelineTrace& t);

/// Certificate schema:
///   {version, input_hash, side, k, vertices, achieved, target, target_kind,
///    verified, params, trace}
/// plus "n" (graph order) and "route". input_hash is the FNV-1a 64-bit hash
/// of the graph6 string, written as 16 lowercase hex digits.
nlohmann::json to_json(const Certificate& c);

// Reads every top-level field back; the trace is informational and is not
// reconstructed. Throws InputError on missing or mistyped fields.
Certificate parse_certificate(const nlohmann::json& j);

std::string hash_hex(std::uint64_t h);

// One line of the R* results cache (JSON lines, append-only).
struct RStarRecord {
  Rational c;
  int k = 0;
  int n_max = 0;
  std::optional<int> value;
  std::string witness_graph6;
  std::string timestamp;
  std::string code_version = kCodeVersion;
};

nlohmann::json to_json(const RStarRecord& r);
// The most recent record for (c, k, n_max), if the cache file has one.
std::optional<RStarRecord> cache_lookup(const std::string& path, Rational c, int k, int n_max);
void cache_append(const std::string& path, const RStarRecord& r);
std::string utc_timestamp();

}  // namespace quasiramsey
