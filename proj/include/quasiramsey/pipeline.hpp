#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "quasiramsey/bisect.hpp"
#include "quasiramsey/discrepancy.hpp"
#include "quasiramsey/extraction.hpp"
#include "quasiramsey/oracle.hpp"
#include "quasiramsey/thinning.hpp"

namespace quasiramsey {

enum class TargetKind { half, half_plus };
enum class BackendKind { automatic, exact, random };
enum class Route { none, homogeneous, thinning, halving, fallback };

std::string_view to_string(TargetKind kind);
std::string_view to_string(BackendKind kind);
std::string_view to_string(SearchMode mode);
std::string_view to_string(Route route);

struct PipelineParams {
  double nu = 160.0;
  SearchMode mode = SearchMode::automatic;
  std::uint64_t seed = 0;
  int starts = 16;
  BackendKind backend = BackendKind::automatic;
  std::uint64_t random_budget = 256;
  int bits = kDefaultRoundingBits;
  bool fallback = true;
  TargetKind target = TargetKind::half;
  double guard = kEnumerationGuard;
  // The nu schedule halves until it drops below this, then tries 0.
  double nu_floor = 1.0 / 32.0;
};

// nu, nu/2, nu/4, ... while >= floor, then 0.
std::vector<double> nu_schedule(double nu, double floor);

/// (k-1)/2, or (k-1)/2 + D' sqrt((k-1)/ln k) with D = n/(k ln k), D' = 1/sqrt(D).
double certificate_target(TargetKind kind, int k, int n);
// Exact for `half`; the irrational `half_plus` target is met only with margin.
bool meets_target(int achieved, TargetKind kind, int k, int n);

// One pass of split-then-finish on a single side's extracted set.
struct ChainRun {
  Side side = Side::original;
  ExtractionResult candidate;
  int x = 0, a = 0, b = 0;
  double t = 0.0;
  SplitOutcome split;
  std::optional<ThinningReport> thinning;
  std::optional<HalvingResult> halving;
  std::vector<int> vertices;  // original labels
  int achieved = 0;
  bool meets = false;
};

struct Attempt {
  double nu = 0.0;
  std::vector<ExtractionStep> steps;
  std::int64_t mass_original = 0;
  std::int64_t mass_complement = 0;
  std::vector<double> decay;
  std::vector<ChainRun> runs;
};

struct PipelineTrace {
  bool homogeneous_tried = false;
  std::optional<HomogeneousSet> homogeneous;
  std::vector<Attempt> attempts;
  bool fallback_tried = false;
  std::optional<BestSubset> fallback_original;
  std::optional<BestSubset> fallback_complement;
  std::vector<std::string> notes;
};

struct Certificate {
  int version = 1;
  std::uint64_t input_hash = 0;
  int n = 0;
  int k = 0;
  Side side = Side::original;
  std::vector<int> vertices;
  int achieved = 0;
  double target = 0.0;
  TargetKind target_kind = TargetKind::half;
  bool verified = false;
  Route route = Route::none;
  PipelineParams params;
  PipelineTrace trace;
};

// FNV-1a (64-bit) of the graph6 encoding.
std::uint64_t graph_hash(const Graph& g);

/// Finds k vertices of g or its complement whose induced minimum degree
/// meets the target, and reports honestly when it cannot.
///
/// Order of work: the homogeneous-set shortcut when k <= log2(n)/2; then, for
/// each nu on the schedule, extraction for a verified set of order >= 2k on
/// each qualifying side, a greedy split with a = k + (l mod k), and thinning
/// (A side) or halving search (B side); finally the exhaustive oracle on both
/// sides when fallback is enabled and the search fits its guard. Among
/// candidates, certificates meeting the target win, then higher achieved
/// degree, then the original side.
///
/// Throws InputError when k < 2 or n < k; GuardExceeded propagates from an
/// exact-mode extraction that does not fit.
Certificate quasi_ramsey_extract(const Graph& g, int k, const PipelineParams& params = {});

/// Independent check of a certificate against g. Recomputes the side graph's
/// induced minimum degree and the target from scratch and returns whether the
/// claim holds (including that `achieved` matches). Throws InputError for a
/// malformed certificate (bad vertex labels, duplicates, k mismatch).
bool verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace quasiramsey
