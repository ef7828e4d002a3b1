#include "quasiramsey/extraction.hpp"

#include <bit>
#include <cmath>

#include "quasiramsey/errors.hpp"
#include "quasiramsey/random.hpp"
#include "subset_search.hpp"

namespace quasiramsey {

std::string_view to_string(Side side) {
  return side == Side::original ? "original" : "complement";
}

int min_degree_on_side(const Graph& g, Side side, const VertexSet& s) {
  const int inside = min_degree_within(g, s);
  if (side == Side::original || s.empty()) return inside;
  // The complement degree is |s| - 1 - d, so its minimum needs the maximum d.
  int most = 0;
  s.for_each([&](int v) { most = std::max(most, g.degree_in(v, s)); });
  return static_cast<int>(s.size()) - 1 - most;
}

namespace {

// True when no set of size >= 2 can reach the singleton value -nu.
bool singleton_forced(int n, double nu) {
  const double single = skew_value(HalfInteger{}, 1, nu);
  for (std::int64_t s = 2; s <= n; ++s) {
    const double ceiling = skew_value(HalfInteger::from_twice(s * (s - 1) / 2), static_cast<std::size_t>(s), nu);
    if (!(ceiling < single)) return false;
  }
  return true;
}

struct ExactSkewScan {
  int n;
  double nu;
  std::vector<std::uint32_t> adj;
  std::uint32_t best_mask = 0;
  detail::SkewCandidate best;
  bool have = false;

  void visit(int next, std::uint32_t mask, std::int64_t edges, int size) {
    for (int v = next; v < n; ++v) {
      const std::int64_t e = edges + std::popcount(adj[static_cast<std::size_t>(v)] & mask);
      const std::uint32_t m = mask | (std::uint32_t{1} << v);
      const HalfInteger d = discrepancy_from_counts(e, size + 1);
      detail::SkewCandidate cand{VertexSet{}, d, skew_value(d, static_cast<std::size_t>(size + 1), nu),
                                 static_cast<std::size_t>(size + 1)};
      if (!have || detail::skew_better(cand, best)) {
        best = cand;
        best_mask = m;
        have = true;
      }
      visit(v + 1, m, e, size + 1);
    }
  }
};

VertexSet exact_argmax(const Graph& g, double nu) {
  const int n = g.order();
  ExactSkewScan scan{n, nu, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0), 0, {}, false};
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int u) { scan.adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u; });
  scan.visit(0, 0, 0, 0);
  VertexSet out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if ((scan.best_mask >> v) & 1U) out.insert(v);
  return out;
}

}  // namespace

VertexSet argmax_skew(const Graph& g, double nu, const ArgmaxOptions& opts) {
  const int n = g.order();
  if (n == 0) throw InputError("argmax over an empty graph");
  if (nu < 0) throw InputError("nu must be non-negative");
  SearchMode mode = opts.mode;
  if (mode == SearchMode::automatic)
    mode = n <= opts.auto_exact_threshold ? SearchMode::exact : SearchMode::heuristic;
  if (mode == SearchMode::exact && n > std::min(opts.exact_limit, 31))
    throw GuardExceeded("exact skew argmax needs 2^" + std::to_string(n) +
                        " subsets; limit is n <= " + std::to_string(opts.exact_limit));

  if (singleton_forced(n, nu)) {
    VertexSet one(static_cast<std::size_t>(n));
    one.insert(0);
    return one;
  }
  if (mode == SearchMode::exact) return exact_argmax(g, nu);
  return detail::multistart_skew(g, nu, n, opts.starts, opts.seed).set;
}

std::vector<ExtractionStep> extract_sequence(const Graph& g, double nu, const ArgmaxOptions& opts) {
  const int n = g.order();
  if (n < 2) throw InputError("extraction needs at least 2 vertices");
  std::vector<int> alive(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) alive[static_cast<std::size_t>(v)] = v;

  std::vector<ExtractionStep> steps;
  do {
    const Graph h = induced(g, alive);
    ArgmaxOptions step_opts = opts;
    step_opts.seed = derive_seed(opts.seed, static_cast<std::uint64_t>(steps.size()));
    const VertexSet x = argmax_skew(h, nu, step_opts);

    ExtractionStep step;
    step.index = static_cast<int>(steps.size());
    step.disc = discrepancy(h, x);
    step.skew = skew_value(step.disc, x.size(), nu);
    std::vector<int> rest;
    for (int local = 0; local < h.order(); ++local) {
      const int original = alive[static_cast<std::size_t>(local)];
      if (x.contains(local)) step.removed.push_back(original);
      else rest.push_back(original);
    }
    alive = std::move(rest);
    step.remaining = static_cast<int>(alive.size());
    steps.push_back(std::move(step));
  } while (2 * static_cast<std::int64_t>(alive.size()) >= n);
  return steps;
}

HalfInteger side_disc(const ExtractionStep& step, Side side) {
  return side == Side::original ? step.disc : -step.disc;
}

std::vector<int> positive_steps(const std::vector<ExtractionStep>& trace, Side side) {
  std::vector<int> out;
  for (std::size_t i = 0; i < trace.size(); ++i)
    if (side_disc(trace[i], side) > HalfInteger{}) out.push_back(static_cast<int>(i));
  return out;
}

std::int64_t positive_mass(const std::vector<ExtractionStep>& trace, Side side) {
  std::int64_t mass = 0;
  for (int i : positive_steps(trace, side))
    mass += static_cast<std::int64_t>(trace[static_cast<std::size_t>(i)].removed.size());
  return mass;
}

bool mass_condition(const std::vector<ExtractionStep>& trace, Side side, int n) {
  return 4 * positive_mass(trace, side) >= n;
}

std::vector<double> decay_ratios(const std::vector<ExtractionStep>& trace, Side side) {
  const auto idx = positive_steps(trace, side);
  std::vector<double> out;
  for (std::size_t l = 0; l + 3 < idx.size(); ++l) {
    const double first = side_disc(trace[static_cast<std::size_t>(idx[l])], side).to_double();
    const double later = side_disc(trace[static_cast<std::size_t>(idx[l + 3])], side).to_double();
    out.push_back(later / first);
  }
  return out;
}

double variable_bound(int order, double nu) {
  const double m = static_cast<double>(order - 1);
  return m / 2.0 + nu * std::sqrt(std::max(m, 0.0));
}

bool meets_variable_bound(int min_degree, int order, double nu) {
  const std::int64_t lhs = 2 * static_cast<std::int64_t>(min_degree) - (order - 1);
  if (lhs < 0) return false;
  if (nu == 0.0 || order <= 1) return true;
  const long double l = static_cast<long double>(lhs);
  const long double r2 = 4.0L * static_cast<long double>(nu) * static_cast<long double>(nu) *
                         static_cast<long double>(order - 1);
  return l * l >= r2;
}

std::vector<ExtractionResult> side_candidates(const Graph& g, const std::vector<ExtractionStep>& trace,
                                              Side side, int min_order, double nu) {
  std::vector<ExtractionResult> out;
  for (int i : positive_steps(trace, side)) {
    const auto& step = trace[static_cast<std::size_t>(i)];
    const int order = static_cast<int>(step.removed.size());
    if (order < min_order) continue;
    ExtractionResult r;
    r.side = side;
    r.subset = step.removed;
    r.order = order;
    r.achieved_min_degree =
        min_degree_on_side(g, side, VertexSet::from_list(static_cast<std::size_t>(g.order()), step.removed));
    r.target = variable_bound(order, nu);
    r.verified = meets_variable_bound(r.achieved_min_degree, order, nu);
    r.step_index = i;
    r.nu = nu;
    out.push_back(std::move(r));
  }
  return out;
}

ExtractionOutcome variable_quasi_ramsey(const Graph& g, int k, double nu, const ArgmaxOptions& opts) {
  if (k < 1) throw InputError("k must be at least 1");
  ExtractionOutcome out;
  out.trace = extract_sequence(g, nu, opts);
  out.mass_original = positive_mass(out.trace, Side::original);
  out.mass_complement = positive_mass(out.trace, Side::complement);

  bool decay_set = false;
  for (Side side : {Side::original, Side::complement}) {
    if (!mass_condition(out.trace, side, g.order())) continue;
    if (!decay_set) {
      out.decay = decay_ratios(out.trace, side);
      decay_set = true;
    }
    for (auto& cand : side_candidates(g, out.trace, side, 1, nu)) {
      if (!cand.verified) continue;
      if (!out.found && cand.order >= k) out.found = cand;
      if (!out.best_candidate || cand.order > out.best_candidate->order) out.best_candidate = cand;
    }
  }
  return out;
}

}  // namespace quasiramsey
