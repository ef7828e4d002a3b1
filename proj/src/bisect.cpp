#include "quasiramsey/bisect.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quasiramsey/errors.hpp"

namespace quasiramsey {

bool clears_threshold(double degree, double threshold) {
  const double snapped = std::round(threshold * 2.0) / 2.0;
  if (std::abs(threshold - snapped) <= kThresholdEpsilon * std::max(1.0, std::abs(threshold)))
    threshold = snapped;
  return degree >= threshold;
}

namespace {

// Hypothesis check is tolerant: each swap still gains more than 1/2 - 3 eps,
// which integrality turns into a full edge.
bool hypothesis_holds(const Graph& g, double t) {
  const double need = (g.order() - 1) / 2.0 + t;
  const double slack = kThresholdEpsilon * std::max(1.0, std::abs(need));
  return static_cast<double>(g.min_degree()) >= need - slack;
}

}  // namespace

SplitOutcome greedy_swap_split(const Graph& g, int a, int b, double t, double alpha,
                               const std::optional<VertexSet>& init) {
  const int n = g.order();
  if (a < 0 || b < 0 || a + b != n)
    throw InputError("split sizes " + std::to_string(a) + " + " + std::to_string(b) +
                     " do not sum to n = " + std::to_string(n));
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in [0, 1]");

  VertexSet in_a(static_cast<std::size_t>(n));
  if (init) {
    if (init->universe() != static_cast<std::size_t>(n) || init->size() != static_cast<std::size_t>(a))
      throw InputError("initial A must be a subset of size a");
    in_a = *init;
  } else {
    for (int v = 0; v < a; ++v) in_a.insert(v);
  }

  const double thr_a = a / 2.0 - 1.0 + alpha * t;
  const double thr_b = b / 2.0 - 1.0 + (1.0 - alpha) * t;

  SplitOutcome out;
  out.hypothesis_met = hypothesis_holds(g, t);

  std::vector<int> deg_a(static_cast<std::size_t>(n)), deg_b(static_cast<std::size_t>(n));
  const VertexSet in_b0 = in_a.complemented();
  for (int v = 0; v < n; ++v) {
    deg_a[static_cast<std::size_t>(v)] = g.degree_in(v, in_a);
    deg_b[static_cast<std::size_t>(v)] = g.degree_in(v, in_b0);
  }
  std::int64_t potential = g.edge_count(in_a);
  out.potential.push_back(potential);

  auto violates_a = [&](int x) { return !clears_threshold(deg_a[static_cast<std::size_t>(x)], thr_a); };
  auto violates_b = [&](int y) { return !clears_threshold(deg_b[static_cast<std::size_t>(y)], thr_b); };
  auto gain = [&](int x, int y) {
    return static_cast<std::int64_t>(deg_a[static_cast<std::size_t>(y)]) - deg_a[static_cast<std::size_t>(x)] -
           (g.adjacent(x, y) ? 1 : 0);
  };

  for (;;) {
    int px = -1, py = -1;
    for (int x = 0; x < n && px < 0; ++x) {
      if (!in_a.contains(x) || !violates_a(x)) continue;
      for (int y = 0; y < n; ++y) {
        if (in_a.contains(y) || !violates_b(y)) continue;
        if (gain(x, y) <= 0) continue;
        px = x;
        py = y;
        break;
      }
    }
    if (px < 0) break;

    potential += gain(px, py);
    in_a.erase(px);
    in_a.insert(py);
    g.neighbors(px).for_each([&](int w) {
      --deg_a[static_cast<std::size_t>(w)];
      ++deg_b[static_cast<std::size_t>(w)];
    });
    g.neighbors(py).for_each([&](int w) {
      ++deg_a[static_cast<std::size_t>(w)];
      --deg_b[static_cast<std::size_t>(w)];
    });
    ++out.swaps;
    out.potential.push_back(potential);
  }

  bool a_clean = true, b_clean = true;
  for (int v = 0; v < n; ++v) {
    if (in_a.contains(v)) a_clean = a_clean && !violates_a(v);
    else b_clean = b_clean && !violates_b(v);
  }
  out.a_final = in_a;
  if (a_clean || !b_clean) {
    out.side = SplitSide::A;
    out.subset = in_a;
    out.guarantee = thr_a;
    out.condition_holds = a_clean;
  } else {
    out.side = SplitSide::B;
    out.subset = in_a.complemented();
    out.guarantee = thr_b;
    out.condition_holds = true;
  }
  return out;
}

HalvingResult halving_search(const Graph& host, const VertexSet& start, int k, double t0) {
  if (k < 1) throw InputError("k must be at least 1");
  if (start.universe() != static_cast<std::size_t>(host.order()))
    throw InputError("start set universe does not match host order");
  const auto l0 = static_cast<int>(start.size());
  if (l0 < k || l0 % k != 0)
    throw InputError("halving search needs |start| to be a positive multiple of k (|start| = " +
                     std::to_string(l0) + ", k = " + std::to_string(k) + ")");

  HalvingResult out;
  out.t0 = t0;
  std::vector<int> current = start.members();
  double t = t0;
  int level = 0;
  while (static_cast<int>(current.size()) > k) {
    const int l = static_cast<int>(current.size());
    const int blocks = l / k;
    const int a = (blocks / 2) * k;
    const int b = ((blocks + 1) / 2) * k;
    const Graph gi = induced(host, current);
    const SplitOutcome split = greedy_swap_split(gi, a, b, t, 0.5);

    HalvingLevel rec;
    rec.level = level;
    rec.vertices = current;
    rec.order = l;
    rec.t = t;
    rec.a = a;
    rec.b = b;
    rec.side = split.side;
    rec.swaps = split.swaps;
    rec.hypothesis_met = split.hypothesis_met;
    rec.condition_holds = split.condition_holds;
    out.levels.push_back(std::move(rec));

    std::vector<int> next;
    split.subset.for_each([&](int local) { next.push_back(current[static_cast<std::size_t>(local)]); });
    current = std::move(next);
    t = (t - 1.0) / 2.0;
    ++level;
  }

  out.subset = current;
  out.depth = level;
  out.t_final = t;
  out.t_floor = t0 * std::ldexp(1.0, -level) - 1.0;
  out.level_bound_ok = level <= std::log2(static_cast<double>(l0) / k) + 1.0 + 1e-12;
  out.achieved_min_degree =
      min_degree_within(host, VertexSet::from_list(static_cast<std::size_t>(host.order()), current));
  out.measured_surplus = out.achieved_min_degree - (k - 1) / 2.0;
  return out;
}

}  // namespace quasiramsey
