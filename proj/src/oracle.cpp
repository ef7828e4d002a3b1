#include "quasiramsey/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

#include "quasiramsey/errors.hpp"
#include "quasiramsey/graph6.hpp"

namespace quasiramsey {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    if (r > 1e300) return 1e300;
  }
  return r;
}

namespace {

constexpr int kOracleMaxOrder = 4096;

struct MinDegreeSearch {
  const Graph& g;
  int n;
  int k;
  bool budgeted;
  double budget;
  std::vector<std::vector<int>> suffix;  // suffix[v][j] = |N(v) ∩ [j, n)|
  std::vector<int> chosen;
  std::vector<int> deg;
  int best = -1;
  std::vector<int> best_set;
  double nodes = 0;

  MinDegreeSearch(const Graph& graph, int size, bool limited, double node_budget)
      : g(graph), n(graph.order()), k(size), budgeted(limited), budget(node_budget) {
    suffix.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int v = 0; v < n; ++v)
      for (int j = n - 1; j >= 0; --j)
        suffix[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] =
            suffix[static_cast<std::size_t>(v)][static_cast<std::size_t>(j) + 1] + (g.adjacent(v, j) ? 1 : 0);
  }

  void visit(int next) {
    const int picked = static_cast<int>(chosen.size());
    if (picked == k) {
      const int value = deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
      if (value > best) {
        best = value;
        best_set = chosen;
      }
      return;
    }
    const int left = k - picked - 1;
    for (int v = next; v <= n - (k - picked); ++v) {
      if (best == k - 1) return;
      if (budgeted && ++nodes > budget)
        throw GuardExceeded("min-degree search exceeded its budget of " + std::to_string(static_cast<long long>(budget)) +
                            " nodes (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
      const auto after = static_cast<std::size_t>(v) + 1;
      int dv = 0;
      int ub = k;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        const int c = chosen[i];
        const int link = g.adjacent(c, v) ? 1 : 0;
        dv += link;
        ub = std::min(ub, deg[i] + link + std::min(suffix[static_cast<std::size_t>(c)][after], left));
      }
      ub = std::min(ub, dv + std::min(suffix[static_cast<std::size_t>(v)][after], left));
      if (ub <= best) continue;
      for (std::size_t i = 0; i < chosen.size(); ++i) deg[i] += g.adjacent(chosen[i], v) ? 1 : 0;
      chosen.push_back(v);
      deg.push_back(dv);
      visit(v + 1);
      chosen.pop_back();
      deg.pop_back();
      for (std::size_t i = 0; i < chosen.size(); ++i) deg[i] -= g.adjacent(chosen[i], v) ? 1 : 0;
    }
  }
};

}  // namespace

std::optional<BestSubset> best_min_degree_subset(const Graph& g, int k, double guard) {
  const int n = g.order();
  if (k < 0) throw InputError("k must be non-negative");
  if (k > n) return std::nullopt;
  if (k == 0) return BestSubset{{}, 0};
  if (n > kOracleMaxOrder)
    throw GuardExceeded("min-degree oracle supports n <= " + std::to_string(kOracleMaxOrder));
  MinDegreeSearch search(g, k, binomial(n, k) > guard, guard);
  search.visit(0);
  return BestSubset{search.best_set, search.best};
}

Rational Rational::parse(const std::string& text) {
  Rational r;
  std::istringstream in(text);
  char slash = 0;
  if (!(in >> r.num)) throw InputError("bad rational \"" + text + "\"");
  if (in >> slash) {
    if (slash != '/' || !(in >> r.den)) throw InputError("bad rational \"" + text + "\"");
  }
  std::string rest;
  if (in >> rest) throw InputError("bad rational \"" + text + "\"");
  if (r.den <= 0 || r.num < 0 || r.num > r.den) throw InputError("rational must lie in [0, 1]: " + text);
  const auto gcd = std::gcd(r.num, r.den);
  if (gcd > 1) {
    r.num /= gcd;
    r.den /= gcd;
  }
  return r;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool meets_fraction(int value, int k, Rational c) {
  return static_cast<std::int64_t>(value) * c.den >= c.num * static_cast<std::int64_t>(k - 1);
}

bool fixed_quasi_ramsey_holds(const Graph& g, int k, Rational c, double guard) {
  const auto here = best_min_degree_subset(g, k, guard);
  if (!here) return false;
  if (meets_fraction(here->min_degree, k, c)) return true;
  const auto there = best_min_degree_subset(complement(g), k, guard);
  return there && meets_fraction(there->min_degree, k, c);
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((code >> bit) & 1U) g.add_edge(i, j);
  return g;
}

namespace {

// Predicate for tiny graphs on adjacency masks; k-subsets are precomputed.
struct TinyChecker {
  int n;
  int k;
  Rational c;
  std::vector<std::uint32_t> subsets;

  TinyChecker(int order, int size, Rational frac) : n(order), k(size), c(frac) {
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
      if (std::popcount(s) == k) subsets.push_back(s);
  }

  bool holds(std::uint64_t code) const {
    std::uint32_t adj[32] = {};
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((code >> bit) & 1U) {
          adj[i] |= std::uint32_t{1} << j;
          adj[j] |= std::uint32_t{1} << i;
        }
    for (std::uint32_t s : subsets) {
      int lo = k, hi = 0;
      for (std::uint32_t w = s; w; w &= w - 1) {
        const int d = std::popcount(adj[std::countr_zero(w)] & s);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      if (meets_fraction(lo, k, c) || meets_fraction(k - 1 - hi, k, c)) return true;
    }
    return false;
  }
};

// Smallest failing code in [0, count), or count when all pass.
std::uint64_t first_failure(const TinyChecker& check, std::uint64_t count, int threads) {
  threads = std::max(1, threads);
  std::atomic<std::uint64_t> found{count};
  const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (static_cast<std::uint64_t>(threads) * 16));
  std::atomic<std::uint64_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t lo = cursor.fetch_add(chunk);
      if (lo >= count || lo >= found.load()) return;
      const std::uint64_t hi = std::min(count, lo + chunk);
      for (std::uint64_t code = lo; code < hi; ++code) {
        if (!check.holds(code)) {
          std::uint64_t cur = found.load();
          while (code < cur && !found.compare_exchange_weak(cur, code)) {}
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return found.load();
}

}  // namespace

RStarAnswer compute_rstar(const RStarQuery& q, int threads) {
  if (q.k < 1) throw InputError("k must be at least 1");
  if (q.n_max < 0) throw InputError("n_max must be non-negative");
  const bool trivial = q.c.num == 0 || q.k == 1;
  if (!trivial && q.n_max > kRStarMaxOrder)
    throw GuardExceeded("R* enumeration needs all graphs on up to " + std::to_string(q.n_max) +
                        " vertices; limit is " + std::to_string(kRStarMaxOrder));

  RStarAnswer ans;
  ans.n_max = q.n_max;
  ans.passes.assign(static_cast<std::size_t>(q.n_max) + 1, false);
  std::vector<std::string> witness(static_cast<std::size_t>(q.n_max) + 1);
  for (int n = 0; n <= q.n_max; ++n) {
    if (n < q.k) {
      witness[static_cast<std::size_t>(n)] = emit_graph6(Graph(n));
      continue;
    }
    if (trivial) {
      ans.passes[static_cast<std::size_t>(n)] = true;
      continue;
    }
    const int pairs = n * (n - 1) / 2;
    // Complementary graphs differ in the top bit, so half the codes cover all pairs.
    const std::uint64_t count = std::uint64_t{1} << (pairs - 1);
    const TinyChecker check(n, q.k, q.c);
    const std::uint64_t fail = first_failure(check, count, threads);
    if (fail == count) {
      ans.passes[static_cast<std::size_t>(n)] = true;
    } else {
      witness[static_cast<std::size_t>(n)] = emit_graph6(graph_from_code(n, fail));
    }
  }
  if (!ans.passes[static_cast<std::size_t>(q.n_max)]) return ans;
  int n = q.n_max;
  while (n > 0 && ans.passes[static_cast<std::size_t>(n) - 1]) --n;
  ans.value = n;
  ans.witness_graph6 = witness[static_cast<std::size_t>(n) - 1];
  return ans;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  int k;
  double guard;
  double nodes = 0;
  std::vector<int> chosen;

  bool grow(VertexSet candidates) {
    if (static_cast<int>(chosen.size()) == k) return true;
    while (static_cast<int>(chosen.size() + candidates.size()) >= k) {
      int v = -1;
      for (std::size_t w = 0; w < candidates.words().size() && v < 0; ++w)
        if (candidates.words()[w]) v = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(candidates.words()[w])));
      if (v < 0) return false;
      if (++nodes > guard)
        throw GuardExceeded("clique search exceeded its budget of " + std::to_string(static_cast<long long>(guard)) + " nodes");
      candidates.erase(v);
      chosen.push_back(v);
      if (grow(candidates & g.neighbors(v))) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, int k, double guard) {
  if (k < 0) throw InputError("k must be non-negative");
  if (k > g.order()) return std::nullopt;
  CliqueSearch search{g, k, guard, 0, {}};
  if (search.grow(g.all_vertices())) return search.chosen;
  return std::nullopt;
}

std::optional<HomogeneousSet> homogeneous_set_search(const Graph& g, int k, double guard) {
  if (auto c = find_clique(g, k, guard)) return HomogeneousSet{Side::original, *c};
  if (auto c = find_clique(complement(g), k, guard)) return HomogeneousSet{Side::complement, *c};
  return std::nullopt;
}

}  // namespace quasiramsey
