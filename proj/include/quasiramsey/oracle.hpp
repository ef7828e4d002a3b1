#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasiramsey/extraction.hpp"
#include "quasiramsey/graph.hpp"

namespace quasiramsey {

inline constexpr double kEnumerationGuard = 1e8;

// C(n, k) as a double, saturating.
double binomial(int n, int k);

struct BestSubset {
  std::vector<int> subset;  // ascending
  int min_degree = 0;
};

/// The k-subset S maximising delta(G[S]), lexicographically first among ties.
///
/// Branch and bound over ascending extensions: a partial set is dropped when
/// no completion can beat the incumbent, using deg_S(s) + min(|N(s) ∩ rest|,
/// picks left) per chosen vertex. Runs unconditionally when C(n,k) <= guard;
/// larger instances run with a budget of `guard` search nodes and throw
/// GuardExceeded if it runs out. Returns nullopt when k > n.
std::optional<BestSubset> best_min_degree_subset(const Graph& g, int k, double guard = kEnumerationGuard);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // "1/2", "0", "3/4"; throws InputError unless 0 <= value <= 1.
  static Rational parse(const std::string& text);
  std::string to_string() const;
};

// value >= c (k - 1), exactly.
bool meets_fraction(int value, int k, Rational c);

// Some k-subset has min degree >= c (k - 1) in g or in its complement.
bool fixed_quasi_ramsey_holds(const Graph& g, int k, Rational c, double guard = kEnumerationGuard);

struct RStarQuery {
  Rational c;
  int k = 1;
  int n_max = 1;
};

inline constexpr int kRStarMaxOrder = 7;

struct RStarAnswer {
  std::optional<int> value;       // empty: undecided up to n_max
  int n_max = 0;
  std::string witness_graph6;     // a failing graph on value - 1 vertices
  std::vector<bool> passes;       // passes[n]: every n-vertex graph satisfies the predicate
};

/// Least n <= n_max such that every graph on n' vertices, for every n' in
/// [n, n_max], satisfies fixed_quasi_ramsey_holds. Each size is enumerated
/// explicitly (one graph of each complementary pair); the witness is the
/// failing graph with the smallest code at n - 1. Sizes above
/// kRStarMaxOrder throw GuardExceeded unless c (k-1) <= 0, where no
/// enumeration is needed.
RStarAnswer compute_rstar(const RStarQuery& q, int threads = 1);

// The n-vertex graph whose bit i is the i-th pair in graph6 order.
Graph graph_from_code(int n, std::uint64_t code);

struct HomogeneousSet {
  Side side = Side::original;  // original: clique in g; complement: independent set
  std::vector<int> subset;
};

// A k-clique of g, else a k-clique of its complement; lexicographically
// first on each side. Throws GuardExceeded after `guard` search nodes.
std::optional<HomogeneousSet> homogeneous_set_search(const Graph& g, int k, double guard = kEnumerationGuard);
std::optional<std::vector<int>> find_clique(const Graph& g, int k, double guard = kEnumerationGuard);

}  // namespace quasiramsey
