#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "quasiramsey/discrepancy.hpp"
#include "quasiramsey/graph.hpp"

namespace quasiramsey {

enum class Side { original, complement };

std::string_view to_string(Side side);
inline Side opposite(Side s) { return s == Side::original ? Side::complement : Side::original; }

// Minimum degree of G[s] or of complement(G)[s].
int min_degree_on_side(const Graph& g, Side side, const VertexSet& s);

struct ArgmaxOptions {
  SearchMode mode = SearchMode::automatic;
  std::uint64_t seed = 0;
  int starts = 16;
  int exact_limit = 24;           // exact mode refuses larger graphs
  int auto_exact_threshold = 20;  // automatic mode goes exact at or below this order
};

/// A nonempty X maximising D_nu(X) = |D(X)| - nu |X|^{3/2}.
///
/// Exact mode scans all 2^n - 1 subsets in lexicographic order; ties go to
/// the larger |D|, then to the first set seen. Heuristic mode keeps the best
/// local optimum of `starts` seeded hill climbs. When nu is so large that no
/// set of size >= 2 can beat a singleton, {0} is returned directly in either
/// mode (it is the exact answer).
VertexSet argmax_skew(const Graph& g, double nu, const ArgmaxOptions& opts = {});

struct ExtractionStep {
  int index = 0;
  std::vector<int> removed;  // X_i, original labels
  HalfInteger disc;          // D(X_i) in the input graph
  double skew = 0.0;         // D_nu(X_i)
  int remaining = 0;         // |V_{i+1}|
};

// Repeatedly removes argmax_skew sets until fewer than n/2 vertices remain.
// Step i uses seed derive_seed(opts.seed, i). Throws InputError when n < 2.
std::vector<ExtractionStep> extract_sequence(const Graph& g, double nu, const ArgmaxOptions& opts = {});

// D(X_i) as seen from `side`; the complement flips its sign.
HalfInteger side_disc(const ExtractionStep& step, Side side);
// I+ on `side`: step positions with positive side discrepancy.
std::vector<int> positive_steps(const std::vector<ExtractionStep>& trace, Side side);
std::int64_t positive_mass(const std::vector<ExtractionStep>& trace, Side side);
// sum_{i in I+} |X_i| >= n/4
bool mass_condition(const std::vector<ExtractionStep>& trace, Side side, int n);
// D(X_{i_{l+3}}) / D(X_{i_l}) over consecutive I+ entries.
std::vector<double> decay_ratios(const std::vector<ExtractionStep>& trace, Side side);

/// deg >= (l-1)/2 + nu sqrt(l-1), decided by squaring rather than by
/// rounding the square root.
bool meets_variable_bound(int min_degree, int order, double nu);
double variable_bound(int order, double nu);

struct ExtractionResult {
  Side side = Side::original;
  std::vector<int> subset;  // original labels
  int order = 0;
  int achieved_min_degree = 0;
  double target = 0.0;  // (l-1)/2 + nu sqrt(l-1)
  bool verified = false;
  int step_index = -1;
  double nu = 0.0;
};

// Every I+ step of `side` with |X_i| >= min_order, verified against g.
std::vector<ExtractionResult> side_candidates(const Graph& g, const std::vector<ExtractionStep>& trace,
                                              Side side, int min_order, double nu);

struct ExtractionOutcome {
  std::optional<ExtractionResult> found;
  std::optional<ExtractionResult> best_candidate;  // largest verified set of any order
  std::vector<ExtractionStep> trace;
  std::int64_t mass_original = 0;
  std::int64_t mass_complement = 0;
  std::vector<double> decay;  // diagnostics on the side that was scanned first
};

/// Runs the removal sequence once (it is the same for g and its complement,
/// since D_nu only sees |D|), then scans I+ on each side that carries at least
/// n/4 of the removed mass, original side first, for a verified X_i of order
/// >= k. No result is reported as found unless recomputation confirms it.
ExtractionOutcome variable_quasi_ramsey(const Graph& g, int k, double nu, const ArgmaxOptions& opts = {});

}  // namespace quasiramsey
