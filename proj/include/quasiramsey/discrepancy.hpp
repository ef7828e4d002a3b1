#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "quasiramsey/bitset.hpp"
#include "quasiramsey/graph.hpp"

namespace quasiramsey {

/// An ordered family of subsets A_0, ..., A_{m-1} of the ground set [ground_size].
///
/// Each set is kept sorted and duplicate-free. The index of a set is part of
/// its identity: restricting or rounding never reorders the family.
struct SetSystem {
  int ground_size = 0;
  std::vector<std::vector<int>> sets;

  SetSystem() = default;
  // Sorts and deduplicates each set; throws InputError on out-of-range members.
  SetSystem(int ground, std::vector<std::vector<int>> family);

  std::size_t size() const { return sets.size(); }

  // Text form: "l m" on the first line, then m lines of 0-based indices.
  static SetSystem parse(std::istream& in);
  std::string to_text() const;
};

/// A +-1 colouring of the ground set.
struct Coloring {
  std::vector<std::int8_t> values;

  Coloring() = default;
  explicit Coloring(std::vector<std::int8_t> v);  // throws unless every entry is +-1
  std::size_t size() const { return values.size(); }
};

/// A 0/1 point of the ground set.
struct Selection {
  std::vector<std::uint8_t> values;

  std::size_t size() const { return values.size(); }
  std::vector<int> chosen() const;
};

/// A point of [0,1]^ground.
struct FractionalPoint {
  std::vector<double> values;

  FractionalPoint() = default;
  explicit FractionalPoint(std::vector<double> v);  // throws unless entries lie in [0,1]
  static FractionalPoint constant(std::size_t ground, double p);
};

struct ColoringResult {
  int value = 0;
  Coloring coloring;
};

// max_i |sum_{j in A_i} chi(j)|
int eval_disc(const SetSystem& h, const Coloring& chi);

inline constexpr int kExactGroundLimit = 22;

/// Exhaustive minimum over all 2^l colourings.
///
/// Returns the lexicographically first optimal colouring under -1 < +1.
/// Since chi and -chi score the same, that colouring always starts with -1,
/// so only half the cube is scanned. Throws GuardExceeded above `max_ground`.
ColoringResult disc_exact(const SetSystem& h, int max_ground = kExactGroundLimit);

// Best of `budget` uniform colourings; the value is re-evaluated, never assumed.
ColoringResult disc_random(const SetSystem& h, std::uint64_t budget, std::uint64_t seed);

// H|_X with X relabeled to [0, |X|) in ascending order. `subset` must be
// sorted and inside the ground set.
SetSystem restrict(const SetSystem& h, std::span<const int> subset);

// A colouring oracle. `round` distinguishes successive calls from one
// rounding run so seeded backends stay deterministic.
using ColoringBackend = std::function<ColoringResult(const SetSystem&, int round)>;

ColoringBackend exact_backend(int max_ground = kExactGroundLimit);
ColoringBackend random_backend(std::uint64_t budget, std::uint64_t seed);
// Exact when the restricted ground fits, random otherwise.
ColoringBackend auto_backend(std::uint64_t budget, std::uint64_t seed,
                             int max_ground = kExactGroundLimit);

inline constexpr int kDefaultRoundingBits = 20;

struct RoundingResult {
  Selection x;
  double achieved = 0.0;           // ||A(x - c)||_inf, recomputed
  double bound = 0.0;              // quantisation term + sum_t 2^-t disc_t
  double quantization_bound = 0.0; // max_i |A_i| 2^-bits
  std::vector<int> round_disc;     // backend value per round, least significant digit first
  std::vector<int> round_support;  // size of the coloured support per round
};

/// Rounds a fractional point to a 0/1 point one binary digit at a time.
///
/// c is quantised to `bits` binary digits. Starting from the least
/// significant digit, the coordinates carrying a 1 in that digit are coloured
/// by the backend; +1 rounds the coordinate up by that digit's weight and -1
/// rounds it down, which clears the digit. Each round moves every A_i-sum by
/// at most 2^-t times the backend's value on the restricted system.
RoundingResult lindisc_round(const SetSystem& h, const FractionalPoint& c,
                             const ColoringBackend& backend, int bits = kDefaultRoundingBits);

struct ProportionalSelection {
  VertexSet y;
  double deviation = 0.0;  // max_i ||A_i ∩ Y| - p|A_i||, recomputed
  RoundingResult rounding;
};

// Y with every |A_i ∩ Y| close to p|A_i|, via lindisc_round at c = (p, ..., p).
ProportionalSelection select_proportional(const SetSystem& sets, double p,
                                          const ColoringBackend& backend,
                                          int bits = kDefaultRoundingBits);

enum class SearchMode { exact, heuristic, automatic };

struct SubsetDiscrepancy {
  VertexSet set;
  HalfInteger value;  // signed D(set)
  bool exact = true;  // false: heuristic lower bound on the maximum
  HalfInteger magnitude() const { return value.abs(); }
};

/// max over |S| <= t of |D(S)|.
///
/// Exact mode enumerates every subset of size <= t in lexicographic order and
/// keeps the first maximiser; it throws GuardExceeded when that count passes
/// `guard`. Heuristic mode runs seeded local search and reports a lower bound.
/// Automatic picks exact when it fits the guard.
SubsetDiscrepancy max_subset_discrepancy(const Graph& g, int t, SearchMode mode = SearchMode::exact,
                                         std::uint64_t seed = 0, double guard = 1e8);

// sum_{j <= t} C(n, j), saturating at a large double.
double count_subsets_up_to(int n, int t);

}  // namespace quasiramsey
