#include "quasiramsey/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "quasiramsey/errors.hpp"
#include "quasiramsey/graph6.hpp"

namespace quasiramsey {

std::string_view to_string(TargetKind kind) { return kind == TargetKind::half ? "half" : "half-plus"; }

std::string_view to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::exact: return "exact";
    case BackendKind::random: return "random";
    default: return "auto";
  }
}

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::exact: return "exact";
    case SearchMode::heuristic: return "heuristic";
    default: return "auto";
  }
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::homogeneous: return "homogeneous";
    case Route::thinning: return "thinning";
    case Route::halving: return "halving";
    case Route::fallback: return "fallback";
    default: return "none";
  }
}

std::vector<double> nu_schedule(double nu, double floor) {
  if (nu < 0) throw InputError("nu must be non-negative");
  std::vector<double> out;
  for (double v = nu; v > 0 && v >= floor; v /= 2) out.push_back(v);
  out.push_back(0.0);
  return out;
}

double certificate_target(TargetKind kind, int k, int n) {
  const double half = (k - 1) / 2.0;
  if (kind == TargetKind::half) return half;
  const double lnk = std::log(static_cast<double>(k));
  const double d = n / (k * lnk);
  return half + std::sqrt((k - 1) / lnk) / std::sqrt(d);
}

bool meets_target(int achieved, TargetKind kind, int k, int n) {
  if (kind == TargetKind::half) return 2 * achieved >= k - 1;
  return clears_threshold(achieved, certificate_target(kind, k, n));
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit_graph6(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

ColoringBackend make_backend(const PipelineParams& p) {
  switch (p.backend) {
    case BackendKind::exact: return exact_backend();
    case BackendKind::random: return random_backend(p.random_budget, p.seed);
    default: return auto_backend(p.random_budget, p.seed);
  }
}

Graph side_graph_on(const Graph& g, Side side, const std::vector<int>& vertices) {
  Graph h = induced(g, vertices);
  return side == Side::original ? h : complement(h);
}

ChainRun run_chain(const Graph& g, const ExtractionResult& cand, int k, double nu, const PipelineParams& p) {
  ChainRun run;
  run.side = cand.side;
  run.candidate = cand;
  const Graph h = side_graph_on(g, cand.side, cand.subset);
  const int l = h.order();
  run.x = l % k;
  run.a = k + run.x;
  run.b = l - run.a;
  run.t = nu * std::sqrt(static_cast<double>(l - 1));
  run.split = greedy_swap_split(h, run.a, run.b, run.t, 0.5);

  std::vector<int> local;
  if (run.split.side == SplitSide::A) {
    const std::vector<int> a_members = run.split.subset.members();
    ThinningOptions topts;
    topts.backend = make_backend(p);
    topts.bits = p.bits;
    topts.eta = nu / 4.0;
    run.thinning = thin_to_k(induced(h, a_members), k, topts);
    for (int z : run.thinning->z) local.push_back(a_members[static_cast<std::size_t>(z)]);
  } else {
    const double t0 = nu * std::sqrt(static_cast<double>(l - 1)) / 2.0 - 0.5;
    run.halving = halving_search(h, run.split.subset, k, t0);
    local = run.halving->subset;
  }
  for (int v : local) run.vertices.push_back(cand.subset[static_cast<std::size_t>(v)]);
  std::sort(run.vertices.begin(), run.vertices.end());
  run.achieved = min_degree_on_side(g, cand.side, VertexSet::from_list(static_cast<std::size_t>(g.order()), run.vertices));
  run.meets = meets_target(run.achieved, p.target, k, g.order());
  return run;
}

struct Pick {
  bool have = false;
  bool meets = false;
  int achieved = -1;
  Side side = Side::original;
  std::vector<int> vertices;
  Route route = Route::none;

  // Meeting the target first, then achieved degree, then the original side,
  // then the lexicographically smaller set.
  void offer(bool m, int ach, Side s, const std::vector<int>& verts, Route r) {
    bool better = !have;
    if (!better && m != meets) better = m;
    else if (!better && ach != achieved) better = ach > achieved;
    else if (!better && s != side) better = s == Side::original;
    else if (!better) better = lex_less(verts, vertices);
    if (better) {
      have = true;
      meets = m;
      achieved = ach;
      side = s;
      vertices = verts;
      route = r;
    }
  }
};

}  // namespace

Certificate quasi_ramsey_extract(const Graph& g, int k, const PipelineParams& p) {
  const int n = g.order();
  if (k < 2) throw InputError("k must be at least 2");
  if (n < k) throw InputError("graph has " + std::to_string(n) + " vertices, fewer than k = " + std::to_string(k));
  if (p.nu < 0) throw InputError("nu must be non-negative");

  Certificate cert;
  cert.input_hash = graph_hash(g);
  cert.n = n;
  cert.k = k;
  cert.target_kind = p.target;
  cert.target = certificate_target(p.target, k, n);
  cert.params = p;
  auto& trace = cert.trace;
  Pick pick;

  auto finish = [&]() {
    if (pick.have) {
      cert.side = pick.side;
      cert.vertices = pick.vertices;
      cert.achieved = pick.achieved;
      cert.route = pick.route;
      cert.verified = pick.meets;
    }
    return cert;
  };

  // A clique or coclique of order k is itself a certificate.
  if (k <= 0.5 * std::log2(static_cast<double>(n))) {
    trace.homogeneous_tried = true;
    try {
      for (Side side : {Side::original, Side::complement}) {
        const Graph sg = side == Side::original ? g : complement(g);
        if (auto c = find_clique(sg, k, p.guard)) {
          if (!trace.homogeneous) trace.homogeneous = HomogeneousSet{side, *c};
          pick.offer(meets_target(k - 1, p.target, k, n), k - 1, side, *c, Route::homogeneous);
        }
      }
    } catch (const GuardExceeded& e) {
      trace.notes.push_back(std::string("homogeneous search: ") + e.what());
    }
    if (pick.meets) return finish();
  }

  ArgmaxOptions aopts;
  aopts.mode = p.mode;
  aopts.seed = p.seed;
  aopts.starts = p.starts;
  for (double nu : nu_schedule(p.nu, p.nu_floor)) {
    Attempt attempt;
    attempt.nu = nu;
    attempt.steps = extract_sequence(g, nu, aopts);
    attempt.mass_original = positive_mass(attempt.steps, Side::original);
    attempt.mass_complement = positive_mass(attempt.steps, Side::complement);
    bool decay_set = false;
    for (Side side : {Side::original, Side::complement}) {
      if (!mass_condition(attempt.steps, side, n)) continue;
      if (!decay_set) {
        attempt.decay = decay_ratios(attempt.steps, side);
        decay_set = true;
      }
      for (const auto& cand : side_candidates(g, attempt.steps, side, 2 * k, nu)) {
        if (!cand.verified) continue;
        ChainRun run = run_chain(g, cand, k, nu, p);
        pick.offer(run.meets, run.achieved, run.side, run.vertices,
                   run.thinning ? Route::thinning : Route::halving);
        attempt.runs.push_back(std::move(run));
        break;
      }
    }
    trace.attempts.push_back(std::move(attempt));
    if (pick.meets) return finish();
  }

  if (p.fallback) {
    trace.fallback_tried = true;
    try {
      trace.fallback_original = best_min_degree_subset(g, k, p.guard);
      trace.fallback_complement = best_min_degree_subset(complement(g), k, p.guard);
      for (Side side : {Side::original, Side::complement}) {
        const auto& best = side == Side::original ? trace.fallback_original : trace.fallback_complement;
        if (best) pick.offer(meets_target(best->min_degree, p.target, k, n), best->min_degree, side,
                             best->subset, Route::fallback);
      }
    } catch (const GuardExceeded& e) {
      trace.notes.push_back(std::string("fallback: ") + e.what());
    }
  }
  return finish();
}

bool verify_certificate(const Graph& g, const Certificate& cert) {
  const int n = g.order();
  if (cert.k < 1) throw InputError("certificate has k < 1");
  if (static_cast<int>(cert.vertices.size()) != cert.k)
    throw InputError("certificate lists " + std::to_string(cert.vertices.size()) + " vertices for k = " +
                     std::to_string(cert.k));
  std::set<int> seen;
  for (int v : cert.vertices) {
    if (v < 0 || v >= n) throw InputError("certificate vertex " + std::to_string(v) + " outside the graph");
    if (!seen.insert(v).second) throw InputError("certificate repeats vertex " + std::to_string(v));
  }
  if (cert.n != n || cert.input_hash != graph_hash(g)) return false;

  int low = cert.k;
  for (int u : cert.vertices) {
    int d = 0;
    for (int v : cert.vertices)
      if (u != v && g.adjacent(u, v) == (cert.side == Side::original)) ++d;
    low = std::min(low, d);
  }
  const double half = (cert.k - 1) / 2.0;
  double target = half;
  if (cert.target_kind == TargetKind::half_plus) {
    // D' sqrt((k-1)/ln k) with D' = sqrt(k ln k / n) collapses to sqrt(k(k-1)/n).
    target = half + std::sqrt(static_cast<double>(cert.k) * (cert.k - 1) / n);
  }
  if (std::abs(target - cert.target) > 1e-9 * std::max(1.0, std::abs(target))) return false;
  if (low != cert.achieved) return false;
  if (cert.target_kind == TargetKind::half) return 2 * low >= cert.k - 1;
  return low >= target + 0x1.0p-40 * std::max(1.0, target);
}

}  // namespace quasiramsey
