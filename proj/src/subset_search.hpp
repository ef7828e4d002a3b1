#pragma once

// Local search over vertex subsets for the skew discrepancy objective,
// shared by extraction (argmax of D_nu) and the heuristic branch of
// max_subset_discrepancy (nu = 0 with a size cap).

#include <cstdint>

#include "quasiramsey/bitset.hpp"
#include "quasiramsey/graph.hpp"

namespace quasiramsey::detail {

struct SkewCandidate {
  VertexSet set;
  HalfInteger disc;
  double skew = 0.0;
  std::size_t size = 0;
};

// Strict preference: higher D_nu; for equal sizes the |D| comparison is exact;
// equal D_nu across sizes falls back to larger |D|.
bool skew_better(double skew_a, HalfInteger abs_a, std::size_t size_a,
                 double skew_b, HalfInteger abs_b, std::size_t size_b);

inline bool skew_better(const SkewCandidate& a, const SkewCandidate& b) {
  return skew_better(a.skew, a.disc.abs(), a.size, b.skew, b.disc.abs(), b.size);
}

// Best-improvement hill climb over add / remove / swap moves, 1 <= |X| <= max_size.
// Swaps are only scanned when no add or remove improves.
SkewCandidate climb_skew(const Graph& g, double nu, int max_size, const VertexSet& start);

// Seeded random starts; ties between starts go to the lexicographically
// smaller set.
SkewCandidate multistart_skew(const Graph& g, double nu, int max_size, int starts,
                              std::uint64_t seed);

}  // namespace quasiramsey::detail
