#include "quasiramsey/graph.hpp"

#include <algorithm>
#include <cmath>

#include "quasiramsey/errors.hpp"
#include "quasiramsey/random.hpp"

namespace quasiramsey {

std::string HalfInteger::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw InputError("graph order " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxOrder) + "]");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InputError("edge endpoint outside [0, " + std::to_string(n_) + ")");
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)].insert(v);
  rows_[static_cast<std::size_t>(v)].insert(u);
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& row : rows_) twice += static_cast<std::int64_t>(row.size());
  return twice / 2;
}

std::int64_t Graph::edge_count(const VertexSet& s) const {
  std::int64_t twice = 0;
  s.for_each([&](int v) { twice += degree_in(v, s); });
  return twice / 2;
}

std::int64_t Graph::edges_between(const VertexSet& x, const VertexSet& y) const {
  std::int64_t total = 0;
  x.for_each([&](int v) { total += degree_in(v, y); });
  return total;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced(const Graph& g, const VertexSet& s) {
  if (s.universe() != static_cast<std::size_t>(g.order()))
    throw InputError("vertex set universe does not match graph order");
  return induced(g, s.members());
}

Graph induced(const Graph& g, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  for (int v : vertices)
    if (v < 0 || v >= g.order())
      throw InputError("vertex " + std::to_string(v) + " outside graph of order " +
                       std::to_string(g.order()));
  Graph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
        out.add_edge(i, j);
  return out;
}

int min_degree_within(const Graph& g, const VertexSet& s) {
  int best = -1;
  s.for_each([&](int v) {
    int d = g.degree_in(v, s);
    if (best < 0 || d < best) best = d;
  });
  return best < 0 ? 0 : best;
}

HalfInteger discrepancy(const Graph& g, const VertexSet& x) {
  return discrepancy_from_counts(g.edge_count(x), static_cast<std::int64_t>(x.size()));
}

double skew_value(HalfInteger d, std::size_t size, double nu) {
  const double s = static_cast<double>(size);
  return d.abs().to_double() - nu * s * std::sqrt(s);
}

double skew_discrepancy(const Graph& g, const VertexSet& x, double nu) {
  return skew_value(discrepancy(g, x), x.size(), nu);
}

HalfInteger relative_discrepancy(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw InputError("relative discrepancy needs disjoint sets");
  const auto e = g.edges_between(x, y);
  const auto sx = static_cast<std::int64_t>(x.size());
  const auto sy = static_cast<std::int64_t>(y.size());
  return HalfInteger::from_twice(2 * e - sx * sy);
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  Graph g(n);
  Rng rng(seed);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng.bernoulli(p)) g.add_edge(i, j);
  return g;
}

}  // namespace quasiramsey
