#include "quasiramsey/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "quasiramsey/discrepancy.hpp"
#include "quasiramsey/errors.hpp"
#include "quasiramsey/graph6.hpp"
#include "quasiramsey/oracle.hpp"
#include "quasiramsey/parallel.hpp"
#include "quasiramsey/pipeline.hpp"
#include "quasiramsey/random.hpp"
#include "quasiramsey/serialize.hpp"

namespace quasiramsey {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

struct Line {
  int number = 0;  // 1-based physical line
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    auto t = trim(raw);
    if (!t.empty()) lines.push_back({number, std::move(t)});
  }
  return lines;
}

std::vector<Line> read_input(const std::string& path, std::istream& in) {
  if (path.empty()) return read_lines(in);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return read_lines(f);
}

// Parses every line up front so a bad line stops the run before any work.
std::vector<Graph> parse_graphs(const std::vector<Line>& lines) {
  std::vector<Graph> graphs;
  graphs.reserve(lines.size());
  for (const auto& l : lines) {
    try {
      graphs.push_back(parse_graph6(l.text));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(l.number) + ": " + e.what());
    }
  }
  return graphs;
}

// Inclusive integer range "a:b" or a single value "a".
std::pair<int, int> parse_range(const std::string& text, const char* name) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, colon);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw InputError("");
    int b = a;
    if (colon != std::string::npos) {
      const std::string hi = text.substr(colon + 1);
      b = std::stoi(hi, &used);
      if (used != hi.size()) throw InputError("");
    }
    if (b < a) throw InputError("");
    return {a, b};
  } catch (const std::exception&) {
    throw InputError(std::string("bad --") + name + " range \"" + text + "\" (expected a or a:b with a <= b)");
  }
}

SearchMode mode_from(const std::string& s) {
  if (s == "exact") return SearchMode::exact;
  if (s == "heuristic") return SearchMode::heuristic;
  return SearchMode::automatic;
}

BackendKind backend_from(const std::string& s) {
  if (s == "exact") return BackendKind::exact;
  if (s == "random") return BackendKind::random;
  return BackendKind::automatic;
}

ColoringBackend coloring_backend(BackendKind kind, std::uint64_t budget, std::uint64_t seed) {
  switch (kind) {
    case BackendKind::exact: return exact_backend();
    case BackendKind::random: return random_backend(budget, seed);
    case BackendKind::automatic: break;
  }
  return auto_backend(budget, seed);
}

struct Outcome {
  int code = kExitOk;
  std::string out;
  std::string err;
};

int worst(int a, int b) {
  // guard > input > unverified > ok
  auto rank = [](int c) { return c == kExitGuard ? 3 : c == kExitInput ? 2 : c; };
  return rank(a) >= rank(b) ? a : b;
}

// Runs one job per index in parallel and replays output in input order.
int run_jobs(std::size_t count, const std::function<Outcome(std::size_t)>& job, std::ostream& out,
             std::ostream& err) {
  std::vector<Outcome> results(count);
  parallel_for(count, thread_count(), [&](std::size_t i) {
    try {
      results[i] = job(i);
    } catch (const GuardExceeded& e) {
      results[i] = {kExitGuard, "", std::string("guard exceeded: ") + e.what()};
    } catch (const InputError& e) {
      results[i] = {kExitInput, "", std::string("input error: ") + e.what()};
    }
  });
  int code = kExitOk;
  for (const auto& r : results) {
    out << r.out;
    if (!r.err.empty()) err << r.err << '\n';
    code = worst(code, r.code);
  }
  return code;
}

struct ExtractArgs {
  int k = 0;
  double nu = 160.0;
  std::string mode = "auto";
  std::uint64_t seed = 0;
  bool no_fallback = false;
  std::string target = "half";
  std::string backend = "auto";
  std::uint64_t budget = 256;
  int starts = 16;
  std::string in;
};

int cmd_extract(const ExtractArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto lines = read_input(a.in, in);
  const auto graphs = parse_graphs(lines);
  PipelineParams p;
  p.nu = a.nu;
  p.mode = mode_from(a.mode);
  p.seed = a.seed;
  p.fallback = !a.no_fallback;
  p.target = a.target == "half-plus" ? TargetKind::half_plus : TargetKind::half;
  p.backend = backend_from(a.backend);
  p.random_budget = a.budget;
  p.starts = a.starts;
  return run_jobs(
      graphs.size(),
      [&](std::size_t i) {
        Outcome o;
        try {
          const Certificate c = quasi_ramsey_extract(graphs[i], a.k, p);
          o.out = to_json(c).dump() + "\n";
          o.code = c.verified ? kExitOk : kExitUnverified;
        } catch (const InputError& e) {
          o = {kExitInput, "", "line " + std::to_string(lines[i].number) + ": " + e.what()};
        }
        return o;
      },
      out, err);
}

int cmd_verify(const std::string& graphs_path, const std::string& certs_path, std::istream& in,
               std::ostream& out, std::ostream& err) {
  const auto glines = read_input(graphs_path, in);
  const auto graphs = parse_graphs(glines);
  std::ifstream cf;
  if (!certs_path.empty()) {
    cf.open(certs_path);
    if (!cf) throw InputError("cannot open " + certs_path);
  }
  const auto clines = certs_path.empty() ? read_lines(in) : read_lines(cf);
  if (clines.size() != graphs.size())
    throw InputError(std::to_string(clines.size()) + " certificates for " + std::to_string(graphs.size()) +
                     " graphs");
  return run_jobs(
      graphs.size(),
      [&](std::size_t i) {
        const std::string where = "certificate line " + std::to_string(clines[i].number) + ": ";
        const json j = json::parse(clines[i].text, nullptr, false);
        if (j.is_discarded()) return Outcome{kExitInput, "", where + "not valid JSON"};
        try {
          const Certificate c = parse_certificate(j);
          const bool ok = verify_certificate(graphs[i], c);
          return Outcome{ok ? kExitOk : kExitUnverified, std::string(ok ? "verified" : "unverified") + "\n", ""};
        } catch (const InputError& e) {
          return Outcome{kExitInput, "", where + e.what()};
        }
      },
      out, err);
}

json best_json(const std::optional<BestSubset>& b) {
  if (!b) return nullptr;
  return {{"subset", b->subset}, {"min_degree", b->min_degree}};
}

int cmd_oracle(int k, const std::string& c_text, const std::string& path, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const auto lines = read_input(path, in);
  const auto graphs = parse_graphs(lines);
  std::optional<Rational> c;
  if (!c_text.empty()) c = Rational::parse(c_text);
  return run_jobs(
      graphs.size(),
      [&](std::size_t i) {
        const Graph& g = graphs[i];
        const auto orig = best_min_degree_subset(g, k);
        const auto comp = best_min_degree_subset(complement(g), k);
        json j = {{"n", g.order()}, {"k", k}, {"original", best_json(orig)}, {"complement", best_json(comp)}};
        int code = kExitOk;
        if (c) {
          const bool holds = (orig && meets_fraction(orig->min_degree, k, *c)) ||
                             (comp && meets_fraction(comp->min_degree, k, *c));
          j["c"] = c->to_string();
          j["holds"] = holds;
          if (!holds) code = kExitUnverified;
        }
        if (!orig) code = kExitUnverified;
        return Outcome{code, j.dump() + "\n", ""};
      },
      out, err);
}

struct RStarArgs {
  std::string c = "1/2";
  int k = 2;
  int n_max = 4;
  std::string cache = "rstar_cache.jsonl";
  bool no_cache = false;
  bool json_out = false;
};

int cmd_rstar(const RStarArgs& a, std::ostream& out) {
  const Rational c = Rational::parse(a.c);
  if (a.k < 1) throw InputError("--k must be at least 1");
  if (a.n_max < 1) throw InputError("--nmax must be at least 1");
  std::optional<RStarRecord> rec;
  if (!a.no_cache) rec = cache_lookup(a.cache, c, a.k, a.n_max);
  if (!rec) {
    const RStarAnswer ans = compute_rstar({c, a.k, a.n_max}, thread_count());
    RStarRecord r;
    r.c = c;
    r.k = a.k;
    r.n_max = a.n_max;
    r.value = ans.value;
    r.witness_graph6 = ans.witness_graph6;
    r.timestamp = utc_timestamp();
    if (!a.no_cache) cache_append(a.cache, r);
    rec = r;
  }
  if (a.json_out) {
    json j = to_json(*rec);
    j.erase("timestamp");  // keeps stdout identical across runs
    out << j.dump() << '\n';
  } else {
    out << (rec->value ? std::to_string(*rec->value) : std::string("unknown")) << '\n';
  }
  return rec->value ? kExitOk : kExitUnverified;
}

int cmd_gen(int n, double p, std::uint64_t seed, int count, std::ostream& out) {
  if (n < 0 || n > kMaxOrder) throw InputError("--n out of range");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("--p must lie in [0,1]");
  if (count < 1) throw InputError("--count must be at least 1");
  for (int i = 0; i < count; ++i) out << emit_graph6(sample_gnp(n, p, seed + static_cast<std::uint64_t>(i))) << '\n';
  return kExitOk;
}

int cmd_disc(const std::string& backend, std::uint64_t budget, std::uint64_t seed, std::optional<double> p,
             const std::string& path, std::istream& in, std::ostream& out) {
  SetSystem h;
  if (path.empty()) {
    h = SetSystem::parse(in);
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    h = SetSystem::parse(f);
  }
  const BackendKind kind = backend_from(backend);
  json j = {{"ground_size", h.ground_size}, {"sets", h.size()}, {"backend", to_string(kind)}};
  if (p) {
    if (!(*p >= 0.0 && *p <= 1.0)) throw InputError("--p must lie in [0,1]");
    const auto sel = select_proportional(h, *p, coloring_backend(kind, budget, seed));
    j["p"] = *p;
    j["selection"] = sel.y.members();
    j["deviation"] = sel.deviation;
    j["bound"] = sel.rounding.bound;
    j["round_disc"] = sel.rounding.round_disc;
  } else {
    const ColoringResult r = coloring_backend(kind, budget, seed)(h, 0);
    j["disc"] = r.value;
    j["coloring"] = r.coloring.values;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

struct ExperimentArgs {
  std::string kind;
  std::string n = "10";
  std::string k = "4";
  int trials = 1;
  std::uint64_t seed = 0;
  std::string c = "1";
  std::string out;
};

// (k-1)/2 + sqrt(3 c (k-1) ln ln k), with ln ln k clamped at 0 for k < e.
double lower_bound_threshold(int k, double c) {
  const double lnln = k >= 3 ? std::log(std::log(static_cast<double>(k))) : 0.0;
  return (k - 1) / 2.0 + std::sqrt(3.0 * c * (k - 1) * std::max(0.0, lnln));
}

int cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  const auto [n_lo, n_hi] = parse_range(a.n, "n");
  const auto [k_lo, k_hi] = parse_range(a.k, "k");
  if (a.trials < 1) throw InputError("--trials must be at least 1");
  double c = 1.0;
  try {
    c = std::stod(a.c);
  } catch (const std::exception&) {
    const Rational r = Rational::parse(a.c);
    c = static_cast<double>(r.num) / static_cast<double>(r.den);
  }

  struct Row {
    int n, k;
    std::uint64_t seed;
  };
  std::vector<Row> rows;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int k = k_lo; k <= k_hi; ++k)
      for (int t = 0; t < a.trials; ++t) rows.push_back({n, k, a.seed + static_cast<std::uint64_t>(t)});

  std::string header;
  std::function<Outcome(std::size_t)> job;
  if (a.kind == "lower_bound_scan") {
    if (n_lo < 1 || n_hi > 20 || k_lo < 1 || k_hi > 10)
      throw GuardExceeded("lower_bound_scan brute-forces every k-subset; it needs 1 <= n <= 20 and 1 <= k <= 10");
    header = "n,k,seed,best_min_degree,threshold,violates\n";
    job = [&](std::size_t i) {
      const Row& r = rows[i];
      if (r.k > r.n) return Outcome{kExitOk, "", ""};
      const Graph g = sample_gnp(r.n, 0.5, r.seed);
      const int best = std::max(best_min_degree_subset(g, r.k)->min_degree,
                                best_min_degree_subset(complement(g), r.k)->min_degree);
      const double thr = lower_bound_threshold(r.k, c);
      std::ostringstream s;
      s << r.n << ',' << r.k << ',' << r.seed << ',' << best << ',' << format_double(thr) << ','
        << (best >= thr ? 1 : 0) << '\n';
      return Outcome{kExitOk, s.str(), ""};
    };
  } else if (a.kind == "pipeline_success_rate") {
    if (k_lo < 2) throw InputError("pipeline_success_rate needs k >= 2");
    header = "n,k,seed,verified,achieved,target,route,side\n";
    job = [&](std::size_t i) {
      const Row& r = rows[i];
      if (r.k > r.n) return Outcome{kExitOk, "", ""};
      const Graph g = sample_gnp(r.n, 0.5, r.seed);
      PipelineParams p;
      p.seed = r.seed;
      const Certificate cert = quasi_ramsey_extract(g, r.k, p);
      const bool ok = cert.verified && verify_certificate(g, cert);
      std::ostringstream s;
      s << r.n << ',' << r.k << ',' << r.seed << ',' << (ok ? 1 : 0) << ',' << cert.achieved << ','
        << format_double(cert.target) << ',' << to_string(cert.route) << ',' << to_string(cert.side) << '\n';
      return Outcome{kExitOk, s.str(), ""};
    };
  } else if (a.kind == "disc_backend_compare") {
    // n ranges over the ground size, k over the number of sets.
    if (n_lo < 1 || k_lo < 1) throw InputError("disc_backend_compare needs positive ranges");
    header = "ground,sets,seed,exact,random,sqrt_bound\n";
    job = [&](std::size_t i) {
      const Row& r = rows[i];
      Rng rng(r.seed);
      std::vector<std::vector<int>> family(r.k);
      for (auto& set : family)
        for (int v = 0; v < r.n; ++v)
          if (rng.bernoulli(0.5)) set.push_back(v);
      const SetSystem h(r.n, std::move(family));
      std::string exact = "";
      if (r.n <= kExactGroundLimit) exact = std::to_string(disc_exact(h).value);
      const int rnd = disc_random(h, 256, r.seed).value;
      std::ostringstream s;
      s << r.n << ',' << r.k << ',' << r.seed << ',' << exact << ',' << rnd << ','
        << format_double(6.0 * std::sqrt(static_cast<double>(r.n))) << '\n';
      return Outcome{kExitOk, s.str(), ""};
    };
  } else {
    throw InputError("unknown experiment kind \"" + a.kind +
                     "\" (lower_bound_scan, pipeline_success_rate, disc_backend_compare)");
  }

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw InputError("cannot open " + a.out);
  }
  std::ostream& dest = a.out.empty() ? out : file;
  dest << header;
  return run_jobs(rows.size(), job, dest, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Find k-vertex induced subgraphs of minimum degree at least (k-1)/2 in a graph or its complement", "quasiramsey"};
  app.require_subcommand(1);

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "Run the extraction pipeline on graph6 lines; one JSON certificate per line");
  extract->add_option("--k", ex.k, "Subgraph order")->required();
  extract->add_option("--nu", ex.nu, "Initial skew parameter");
  extract->add_option("--mode", ex.mode, "Argmax search mode")->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  extract->add_option("--seed", ex.seed, "Seed for heuristic search and randomized colouring");
  extract->add_flag("--no-fallback", ex.no_fallback, "Skip the exhaustive fallback");
  extract->add_option("--target", ex.target, "Certificate target")->check(CLI::IsMember({"half", "half-plus"}));
  extract->add_option("--backend", ex.backend, "Colouring backend")->check(CLI::IsMember({"auto", "exact", "random"}));
  extract->add_option("--budget", ex.budget, "Random colourings tried per round");
  extract->add_option("--starts", ex.starts, "Hill-climb starts in heuristic mode")->check(CLI::PositiveNumber);
  extract->add_option("--in", ex.in, "Read graph6 from this file instead of stdin");

  std::string v_graphs, v_certs;
  auto* verify = app.add_subcommand("verify", "Check JSON certificates against graph6 lines, pairing them by position");
  verify->add_option("--graphs", v_graphs, "File of graph6 lines")->required();
  verify->add_option("--certs", v_certs, "File of certificate lines (default stdin)");

  int o_k = 0;
  std::string o_c, o_in;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive best min-degree k-subset on each side");
  oracle->add_option("--k", o_k, "Subset order")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--c", o_c, "Also test min degree >= c(k-1), c given as a/b");
  oracle->add_option("--in", o_in, "Read graph6 from this file instead of stdin");

  RStarArgs rs;
  auto* rstar = app.add_subcommand("rstar", "Least n for which every graph on n..nmax vertices meets c(k-1) on k vertices");
  rstar->add_option("--c", rs.c, "Degree fraction a/b");
  rstar->add_option("--k", rs.k, "Subgraph order")->required();
  rstar->add_option("--nmax", rs.n_max, "Largest order enumerated")->required();
  rstar->add_option("--cache", rs.cache, "JSON-lines results cache");
  rstar->add_flag("--no-cache", rs.no_cache, "Neither read nor append the cache");
  rstar->add_flag("--json", rs.json_out, "Print the full record as JSON");

  int g_n = 0, g_count = 1;
  double g_p = 0.5;
  std::uint64_t g_seed = 0;
  auto* gen = app.add_subcommand("gen", "Emit G(n,p) samples as graph6");
  gen->add_option("--n", g_n, "Order")->required();
  gen->add_option("--p", g_p, "Edge probability");
  gen->add_option("--seed", g_seed, "Seed; sample i uses seed + i");
  gen->add_option("--count", g_count, "Number of samples");

  std::string d_backend = "auto", d_in;
  std::uint64_t d_budget = 256, d_seed = 0;
  std::optional<double> d_p;
  auto* disc = app.add_subcommand("disc", "Colour or proportionally select a set system (\"l m\" then m lines)");
  disc->add_option("--backend", d_backend, "Colouring backend")->check(CLI::IsMember({"auto", "exact", "random"}));
  disc->add_option("--budget", d_budget, "Random colourings tried");
  disc->add_option("--seed", d_seed, "Seed for the random backend");
  disc->add_option("--p", d_p, "Select a p-fraction of every set instead of colouring");
  disc->add_option("--in", d_in, "Read the set system from this file instead of stdin");

  ExperimentArgs xa;
  auto* experiment = app.add_subcommand("experiment", "Random-graph experiments written as CSV");
  experiment->add_option("kind", xa.kind, "lower_bound_scan | pipeline_success_rate | disc_backend_compare")
      ->required();
  experiment->add_option("--n", xa.n, "Order range a:b");
  experiment->add_option("--k", xa.k, "k range a:b");
  experiment->add_option("--trials", xa.trials, "Trials per (n,k); trial t uses seed + t");
  experiment->add_option("--seed", xa.seed, "Base seed");
  experiment->add_option("--c", xa.c, "Constant in the lower_bound_scan threshold");
  experiment->add_option("--out", xa.out, "CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*extract) return cmd_extract(ex, in, out, err);
    if (*verify) return cmd_verify(v_graphs, v_certs, in, out, err);
    if (*oracle) return cmd_oracle(o_k, o_c, o_in, in, out, err);
    if (*rstar) return cmd_rstar(rs, out);
    if (*gen) return cmd_gen(g_n, g_p, g_seed, g_count, out);
    if (*disc) return cmd_disc(d_backend, d_budget, d_seed, d_p, d_in, in, out);
    if (*experiment) return cmd_experiment(xa, out, err);
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace quasiramsey
