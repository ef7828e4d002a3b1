#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quasiramsey/bitset.hpp"

namespace quasiramsey {

// Soft cap on graph order; bitset rows cost n^2/8 bytes.
inline constexpr int kMaxOrder = 50000;

/// An exact value in (1/2)Z, stored doubled.
///
/// Graph discrepancies e(X) - C(|X|,2)/2 and e(X,Y) - |X||Y|/2 always land
/// here, so comparisons between them never go through floating point.
struct HalfInteger {
  std::int64_t twice = 0;

  static constexpr HalfInteger from_twice(std::int64_t t) { return HalfInteger{t}; }
  static constexpr HalfInteger from_int(std::int64_t v) { return HalfInteger{2 * v}; }

  double to_double() const { return static_cast<double>(twice) / 2.0; }
  HalfInteger abs() const { return HalfInteger{twice < 0 ? -twice : twice}; }
  std::string to_string() const;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return {a.twice - b.twice}; }
  friend constexpr HalfInteger operator-(HalfInteger a) { return {-a.twice}; }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
};

/// Simple undirected graph on vertices [0, n) with bitset adjacency rows.
///
/// Edges are added during construction; everything downstream treats a
/// Graph as an immutable value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }

  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  // Throws InputError on self-loops or out-of-range endpoints.
  void add_edge(int u, int v);

  const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(rows_[static_cast<std::size_t>(v)].size()); }
  // |N(v) ∩ s|
  int degree_in(int v, const VertexSet& s) const {
    return static_cast<int>(rows_[static_cast<std::size_t>(v)].intersection_size(s));
  }

  std::int64_t edge_count() const;
  // e(X): edges with both ends in s.
  std::int64_t edge_count(const VertexSet& s) const;
  // e(X, Y) for disjoint x, y.
  std::int64_t edges_between(const VertexSet& x, const VertexSet& y) const;

  // δ(G); 0 for the empty graph.
  int min_degree() const;

  VertexSet all_vertices() const { return VertexSet::full(static_cast<std::size_t>(n_)); }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

// Vertices of s relabeled to [0, |s|) in ascending original order.
Graph induced(const Graph& g, const VertexSet& s);
Graph induced(const Graph& g, std::span<const int> vertices);

// Minimum over v in s of |N(v) ∩ s|; 0 when s is empty.
int min_degree_within(const Graph& g, const VertexSet& s);

// D(X) = e(X) - C(|X|,2)/2
HalfInteger discrepancy(const Graph& g, const VertexSet& x);
// Closed form shared by every producer of D values.
inline HalfInteger discrepancy_from_counts(std::int64_t edges, std::int64_t size) {
  return HalfInteger::from_twice(2 * edges - size * (size - 1) / 2);
}

// D_nu(X) = |D(X)| - nu |X|^{3/2}
double skew_discrepancy(const Graph& g, const VertexSet& x, double nu);
double skew_value(HalfInteger d, std::size_t size, double nu);

// D(X, Y) = e(X, Y) - |X||Y|/2; throws InputError when x and y overlap.
HalfInteger relative_discrepancy(const Graph& g, const VertexSet& x, const VertexSet& y);

/// G(n, p) with each pair (i, j), i < j, visited in graph6 column order
/// (0,1), (0,2), (1,2), (0,3), ... and kept when one Rng draw falls below p.
Graph sample_gnp(int n, double p, std::uint64_t seed);

}  // namespace quasiramsey
