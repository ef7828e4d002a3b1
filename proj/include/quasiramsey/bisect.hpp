#pragma once

#include <optional>
#include <vector>

#include "quasiramsey/bitset.hpp"
#include "quasiramsey/graph.hpp"

namespace quasiramsey {

// Relative slack for comparisons against computed degree thresholds. A
// threshold within this distance of a multiple of 1/2 is taken to be that
// multiple; any other threshold is far from every integer degree.
inline constexpr double kThresholdEpsilon = 0x1.0p-40;

// degree >= threshold, after snapping as above.
bool clears_threshold(double degree, double threshold);

enum class SplitSide { A, B };

struct SplitOutcome {
  SplitSide side = SplitSide::A;
  VertexSet subset;    // the returned side, labels of the input graph
  VertexSet a_final;   // A at loop exit (B is its complement)
  int swaps = 0;
  double guarantee = 0.0;  // a/2 - 1 + alpha t, or b/2 - 1 + (1 - alpha) t
  bool hypothesis_met = false;  // delta(g) >= (n-1)/2 + t
  bool condition_holds = false; // every vertex of `subset` clears `guarantee`
  std::vector<std::int64_t> potential;  // e(G[A]) initially and after every swap
};

/// Greedy swap bipartition into |A| = a, |B| = b.
///
/// While some x in A has deg_A(x) below a/2 - 1 + alpha t and some y in B has
/// deg_B(y) below b/2 - 1 + (1 - alpha) t, swap the lexicographically
/// smallest such pair. Under the hypothesis delta >= (n-1)/2 + t each swap
/// raises e(G[A]) by at least 1, so the loop ends within C(a,2) swaps. When
/// the hypothesis fails, only pairs whose swap raises e(G[A]) are taken, which
/// keeps termination unconditional; `condition_holds` then reports honestly
/// whether a side came out clean. A is returned when both sides qualify.
///
/// `init` defaults to the first a vertices. Throws InputError unless a + b = n.
SplitOutcome greedy_swap_split(const Graph& g, int a, int b, double t, double alpha,
                               const std::optional<VertexSet>& init = std::nullopt);

struct HalvingLevel {
  int level = 0;
  std::vector<int> vertices;  // G_i, labels of the host graph
  int order = 0;              // l_i
  double t = 0.0;             // t_i
  int a = 0, b = 0;           // a_i, b_i
  SplitSide side = SplitSide::A;
  int swaps = 0;
  bool hypothesis_met = false;
  bool condition_holds = false;
};

struct HalvingResult {
  std::vector<int> subset;  // the final k vertices, labels of the host graph
  std::vector<HalvingLevel> levels;
  int depth = 0;            // j
  double t0 = 0.0;
  double t_final = 0.0;     // t_j from t_{i+1} = (t_i - 1)/2
  double t_floor = 0.0;     // t_0 2^-j - 1
  bool level_bound_ok = true;   // j <= log2(l_0/k) + 1
  int achieved_min_degree = 0;  // delta(host[subset]), recomputed
  double measured_surplus = 0.0;  // achieved - (k-1)/2
};

/// Halving search on host[start]: split l_i into a_i = floor(l_i/2k) k and
/// b_i = ceil(l_i/2k) k with alpha = 1/2, descend into the returned side,
/// and stop at exactly k vertices. Requires |start| to be a positive multiple
/// of k; throws InputError otherwise.
HalvingResult halving_search(const Graph& host, const VertexSet& start, int k, double t0);

}  // namespace quasiramsey
