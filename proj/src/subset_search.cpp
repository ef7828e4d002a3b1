#include "subset_search.hpp"

#include <algorithm>
#include <vector>

#include "quasiramsey/random.hpp"

namespace quasiramsey::detail {

bool skew_better(double skew_a, HalfInteger abs_a, std::size_t size_a,
                 double skew_b, HalfInteger abs_b, std::size_t size_b) {
  if (size_a == size_b) return abs_a > abs_b;
  if (skew_a != skew_b) return skew_a > skew_b;
  return abs_a > abs_b;
}

SkewCandidate climb_skew(const Graph& g, double nu, int max_size, const VertexSet& start) {
  const int n = g.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  start.for_each([&](int v) { in[static_cast<std::size_t>(v)] = 1; });
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree_in(v, start);

  std::int64_t edges = g.edge_count(start);
  std::int64_t size = static_cast<std::int64_t>(start.size());

  auto key = [&](std::int64_t e, std::int64_t s) {
    HalfInteger d = discrepancy_from_counts(e, s);
    return SkewCandidate{VertexSet{}, d, skew_value(d, static_cast<std::size_t>(s), nu),
                         static_cast<std::size_t>(s)};
  };
  auto apply = [&](int v, bool add) {
    in[static_cast<std::size_t>(v)] = add ? 1 : 0;
    const int delta = add ? 1 : -1;
    g.neighbors(v).for_each([&](int w) { deg[static_cast<std::size_t>(w)] += delta; });
  };

  SkewCandidate current = key(edges, size);
  for (;;) {
    int add_v = -1, remove_v = -1;
    SkewCandidate best = current;
    for (int v = 0; v < n; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (!in[vi] && size < max_size) {
        auto cand = key(edges + deg[vi], size + 1);
        if (skew_better(cand, best)) { best = cand; add_v = v; remove_v = -1; }
      } else if (in[vi] && size > 1) {
        auto cand = key(edges - deg[vi], size - 1);
        if (skew_better(cand, best)) { best = cand; remove_v = v; add_v = -1; }
      }
    }
    if (add_v < 0 && remove_v < 0) {
      for (int u = 0; u < n; ++u) {
        if (!in[static_cast<std::size_t>(u)]) continue;
        for (int v = 0; v < n; ++v) {
          if (in[static_cast<std::size_t>(v)]) continue;
          const std::int64_t e = edges - deg[static_cast<std::size_t>(u)] +
                                 deg[static_cast<std::size_t>(v)] - (g.adjacent(u, v) ? 1 : 0);
          auto cand = key(e, size);
          if (skew_better(cand, best)) { best = cand; remove_v = u; add_v = v; }
        }
      }
      if (add_v < 0) break;
    }
    if (remove_v >= 0) {
      apply(remove_v, false);
      --size;
      edges -= deg[static_cast<std::size_t>(remove_v)];
    }
    if (add_v >= 0) {
      edges += deg[static_cast<std::size_t>(add_v)];
      apply(add_v, true);
      ++size;
    }
    current = best;
  }

  VertexSet out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (in[static_cast<std::size_t>(v)]) out.insert(v);
  current.set = std::move(out);
  return current;
}

SkewCandidate multistart_skew(const Graph& g, double nu, int max_size, int starts,
                              std::uint64_t seed) {
  const int n = g.order();
  SkewCandidate best;
  bool have = false;
  for (int r = 0; r < std::max(starts, 1); ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (rng.bernoulli(0.5)) members.push_back(v);
    if (members.empty()) members.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    if (static_cast<int>(members.size()) > max_size) {
      rng.shuffle(members);
      members.resize(static_cast<std::size_t>(max_size));
    }
    auto start = VertexSet::from_list(static_cast<std::size_t>(n), members);
    auto cand = climb_skew(g, nu, max_size, start);
    if (!have || skew_better(cand, best) ||
        (!skew_better(best, cand) && lex_less(cand.set.members(), best.set.members()))) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

}  // namespace quasiramsey::detail
