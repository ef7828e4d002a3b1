#include <cmath>

#include "doctest.h"
#include "quasiramsey/bisect.hpp"
#include "quasiramsey/errors.hpp"
#include "quasiramsey/random.hpp"

using namespace quasiramsey;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Counted directly from the adjacency matrix.
long edges_in(const Graph& g, const VertexSet& s) {
  long e = 0;
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) e += g.adjacent(m[i], m[j]);
  return e;
}

}  // namespace

TEST_CASE("greedy_swap_split trivial cases") {
  const SplitOutcome k4 = greedy_swap_split(complete(4), 2, 2, 1.5, 0.5);
  CHECK(k4.side == SplitSide::A);
  CHECK(k4.swaps == 0);
  CHECK(k4.guarantee == doctest::Approx(0.75));
  CHECK(k4.subset.members() == std::vector<int>{0, 1});
  CHECK(k4.condition_holds);

  const SplitOutcome e4 = greedy_swap_split(Graph(4), 2, 2, 0.0, 0.5);
  CHECK(e4.swaps == 0);
  CHECK(e4.condition_holds);
  CHECK_THROWS_AS(greedy_swap_split(Graph(4), 2, 3, 0.0, 0.5), InputError);
}

TEST_CASE("greedy_swap_split on G(30, 1/2) at its own hypothesis") {
  const Graph g = sample_gnp(30, 0.5, 3);
  const double t = g.min_degree() - 29.0 / 2.0;
  const SplitOutcome s = greedy_swap_split(g, 15, 15, t, 0.5);
  CHECK(s.swaps <= 15 * 14 / 2);
  for (std::size_t i = 1; i < s.potential.size(); ++i) CHECK(s.potential[i] > s.potential[i - 1]);
  CHECK(s.potential.front() == edges_in(g, VertexSet::from_list(30, std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14})));
  CHECK(s.potential.back() == edges_in(g, s.a_final));
  if (s.condition_holds) {
    s.subset.for_each([&](int v) { CHECK(g.degree_in(v, s.subset) >= s.guarantee - 1e-9); });
  }
}

TEST_CASE("greedy_swap_split property sweep with the hypothesis enforced") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(30));
    const Graph g = sample_gnp(n, 0.6 + 0.4 * rng.unit(), 5000 + trial);
    const double t = g.min_degree() - (n - 1) / 2.0;
    const int a = 1 + static_cast<int>(rng.below(n - 1));
    const double alpha = rng.unit();
    const SplitOutcome s = greedy_swap_split(g, a, n - a, t, alpha);
    CHECK(s.hypothesis_met);
    CHECK(s.condition_holds);
    CHECK(s.swaps <= a * (a - 1) / 2);
    CHECK(static_cast<int>(s.potential.size()) == s.swaps + 1);
    for (std::size_t i = 1; i < s.potential.size(); ++i) CHECK(s.potential[i] > s.potential[i - 1]);
    const double guarantee = s.side == SplitSide::A ? a / 2.0 - 1 + alpha * t : (n - a) / 2.0 - 1 + (1 - alpha) * t;
    CHECK(s.guarantee == doctest::Approx(guarantee));
    CHECK(static_cast<int>(s.subset.size()) == (s.side == SplitSide::A ? a : n - a));
    s.subset.for_each([&](int v) { CHECK(g.degree_in(v, s.subset) >= guarantee - 1e-9); });
  }
}

TEST_CASE("halving_search arithmetic") {
  const Graph g = complete(12);
  const HalvingResult base = halving_search(g, VertexSet::from_list(12, std::vector<int>{0, 1, 2}), 3, 1.0);
  CHECK(base.depth == 0);
  CHECK(base.levels.empty());
  CHECK(base.t_final == 1.0);
  CHECK(base.subset == std::vector<int>{0, 1, 2});

  const HalvingResult one = halving_search(g, VertexSet::from_list(12, std::vector<int>{0, 1, 2, 3, 4, 5}), 3, 1.0);
  REQUIRE(one.levels.size() == 1);
  CHECK(one.levels[0].a == 3);
  CHECK(one.levels[0].b == 3);

  const HalvingResult all = halving_search(g, VertexSet::full(12), 3, 1.0);
  CHECK(all.subset.size() == 3);
  CHECK(all.achieved_min_degree == 2);
  CHECK(all.level_bound_ok);
  CHECK(all.t_final >= all.t_floor - 1e-12);
  CHECK_THROWS_AS(halving_search(g, VertexSet::full(12), 5, 1.0), InputError);
}

TEST_CASE("halving_search levels follow t_{i+1} = (t_i - 1)/2 and a_i + b_i = l_i") {
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + trial % 4;
    const int l = k * (2 + trial % 5);
    const Graph g = sample_gnp(l, 0.85, 900 + trial);
    const double t0 = g.min_degree() - (l - 1) / 2.0;
    const HalvingResult h = halving_search(g, VertexSet::full(l), k, t0);
    CHECK(static_cast<int>(h.subset.size()) == k);
    double t = t0;
    int order = l;
    for (const auto& lv : h.levels) {
      CHECK(lv.t == doctest::Approx(t));
      CHECK(lv.order == order);
      CHECK(lv.a + lv.b == order);
      CHECK(lv.a % k == 0);
      CHECK(lv.b % k == 0);
      CHECK(lv.a == (order / (2 * k)) * k);
      order = lv.side == SplitSide::A ? lv.a : lv.b;
      t = (t - 1) / 2;
    }
    CHECK(h.t_final == doctest::Approx(t));
    CHECK(h.t_final >= h.t0 * std::pow(2.0, -h.depth) - 1 - 1e-9);
    int achieved = 1 << 20;
    for (int v : h.subset) {
      int d = 0;
      for (int u : h.subset) d += g.adjacent(u, v);
      achieved = std::min(achieved, d);
    }
    CHECK(achieved == h.achieved_min_degree);
  }
}
