#include "quasiramsey/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "quasiramsey/errors.hpp"

namespace quasiramsey {

using nlohmann::json;

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const ExtractionStep& step) {
  return {{"index", step.index},
          {"removed", step.removed},
          {"disc", step.disc.to_double()},
          {"skew", step.skew},
          {"remaining", step.remaining}};
}

json to_json(const ExtractionResult& r) {
  return {{"side", to_string(r.side)}, {"subset", r.subset},   {"order", r.order},
          {"achieved", r.achieved_min_degree}, {"target", r.target}, {"verified", r.verified},
          {"step", r.step_index},      {"nu", r.nu}};
}

json to_json(const SplitOutcome& s) {
  return {{"side", s.side == SplitSide::A ? "A" : "B"},
          {"subset", s.subset.members()},
          {"swaps", s.swaps},
          {"guarantee", s.guarantee},
          {"hypothesis_met", s.hypothesis_met},
          {"condition_holds", s.condition_holds},
          {"potential", s.potential}};
}

json to_json(const HalvingResult& h) {
  json levels = json::array();
  for (const auto& lv : h.levels)
    levels.push_back({{"level", lv.level},
                      {"order", lv.order},
                      {"t", lv.t},
                      {"a", lv.a},
                      {"b", lv.b},
                      {"side", lv.side == SplitSide::A ? "A" : "B"},
                      {"swaps", lv.swaps},
                      {"hypothesis_met", lv.hypothesis_met},
                      {"condition_holds", lv.condition_holds}});
  return {{"subset", h.subset},         {"levels", levels},
          {"depth", h.depth},           {"t0", h.t0},
          {"t_final", h.t_final},       {"t_floor", h.t_floor},
          {"level_bound_ok", h.level_bound_ok}, {"achieved", h.achieved_min_degree},
          {"measured_surplus", h.measured_surplus}};
}

json to_json(const ThinningReport& t) {
  json j = {{"order", t.order},
            {"k", t.k},
            {"p", t.p},
            {"eta", t.eta},
            {"beta_target", t.beta_target},
            {"hypothesis_met", t.hypothesis_met},
            {"deletion_branch", t.deletion_branch},
            {"y", t.y},
            {"realized_deviation", t.realized_deviation},
            {"window_ok", t.window_ok},
            {"z", t.z},
            {"removed", t.removed},
            {"achieved", t.achieved_min_degree},
            {"literal_bound", t.literal_bound}};
  j["guarantee_with_beta"] = t.guarantee_with_beta ? json(*t.guarantee_with_beta) : json(nullptr);
  return j;
}

json to_json(const PipelineParams& p) {
  return {{"nu", p.nu},
          {"mode", to_string(p.mode)},
          {"seed", p.seed},
          {"starts", p.starts},
          {"backend", to_string(p.backend)},
          {"random_budget", p.random_budget},
          {"bits", p.bits},
          {"fallback", p.fallback},
          {"target", to_string(p.target)},
          {"guard", p.guard},
          {"nu_floor", p.nu_floor}};
}

namespace {

json best_json(const std::optional<BestSubset>& b) {
  if (!b) return nullptr;
  return {{"subset", b->subset}, {"min_degree", b->min_degree}};
}

}  // namespace

json to_json(const PipelineTrace& t) {
  json attempts = json::array();
  for (const auto& a : t.attempts) {
    json steps = json::array();
    for (const auto& s : a.steps) steps.push_back(to_json(s));
    json runs = json::array();
    for (const auto& r : a.runs) {
      json run = {{"side", to_string(r.side)},
                  {"candidate", to_json(r.candidate)},
                  {"x", r.x},
                  {"a", r.a},
                  {"b", r.b},
                  {"t", r.t},
                  {"split", to_json(r.split)},
                  {"vertices", r.vertices},
                  {"achieved", r.achieved},
                  {"meets", r.meets}};
      if (r.thinning) run["thinning"] = to_json(*r.thinning);
      if (r.halving) run["halving"] = to_json(*r.halving);
      runs.push_back(std::move(run));
    }
    attempts.push_back({{"nu", a.nu},
                        {"steps", steps},
                        {"mass_original", a.mass_original},
                        {"mass_complement", a.mass_complement},
                        {"decay", a.decay},
                        {"runs", runs}});
  }
  json j = {{"homogeneous_tried", t.homogeneous_tried},
            {"attempts", attempts},
            {"fallback_tried", t.fallback_tried},
            {"fallback_original", best_json(t.fallback_original)},
            {"fallback_complement", best_json(t.fallback_complement)},
            {"notes", t.notes}};
  j["homogeneous"] = t.homogeneous
                         ? json{{"side", to_string(t.homogeneous->side)}, {"subset", t.homogeneous->subset}}
                         : json(nullptr);
  return j;
}

json to_json(const Certificate& c) {
  return {{"version", c.version},
          {"input_hash", hash_hex(c.input_hash)},
          {"n", c.n},
          {"k", c.k},
          {"side", to_string(c.side)},
          {"vertices", c.vertices},
          {"achieved", c.achieved},
          {"target", c.target},
          {"target_kind", to_string(c.target_kind)},
          {"verified", c.verified},
          {"route", to_string(c.route)},
          {"params", to_json(c.params)},
          {"trace", to_json(c.trace)}};
}

namespace {

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw InputError(std::string("certificate is missing \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("certificate field \"") + name + "\" has the wrong type");
  }
}

SearchMode parse_mode(const std::string& s) {
  if (s == "exact") return SearchMode::exact;
  if (s == "heuristic") return SearchMode::heuristic;
  if (s == "auto") return SearchMode::automatic;
  throw InputError("unknown search mode \"" + s + "\"");
}

BackendKind parse_backend(const std::string& s) {
  if (s == "exact") return BackendKind::exact;
  if (s == "random") return BackendKind::random;
  if (s == "auto") return BackendKind::automatic;
  throw InputError("unknown backend \"" + s + "\"");
}

TargetKind parse_target(const std::string& s) {
  if (s == "half") return TargetKind::half;
  if (s == "half-plus") return TargetKind::half_plus;
  throw InputError("unknown target kind \"" + s + "\"");
}

Route parse_route(const std::string& s) {
  for (Route r : {Route::none, Route::homogeneous, Route::thinning, Route::halving, Route::fallback})
    if (to_string(r) == s) return r;
  throw InputError("unknown route \"" + s + "\"");
}

}  // namespace

Certificate parse_certificate(const json& j) {
  if (!j.is_object()) throw InputError("certificate must be a JSON object");
  Certificate c;
  c.version = field<int>(j, "version");
  if (c.version != 1) throw InputError("unsupported certificate version " + std::to_string(c.version));
  const auto hex = field<std::string>(j, "input_hash");
  try {
    std::size_t used = 0;
    c.input_hash = std::stoull(hex, &used, 16);
    if (used != hex.size()) throw InputError("bad input_hash");
  } catch (const std::logic_error&) {
    throw InputError("bad input_hash \"" + hex + "\"");
  }
  c.n = field<int>(j, "n");
  c.k = field<int>(j, "k");
  const auto side = field<std::string>(j, "side");
  if (side != "original" && side != "complement") throw InputError("bad side \"" + side + "\"");
  c.side = side == "original" ? Side::original : Side::complement;
  c.vertices = field<std::vector<int>>(j, "vertices");
  c.achieved = field<int>(j, "achieved");
  c.target = field<double>(j, "target");
  c.target_kind = parse_target(field<std::string>(j, "target_kind"));
  c.verified = field<bool>(j, "verified");
  c.route = parse_route(field<std::string>(j, "route"));
  const auto params = field<json>(j, "params");
  c.params.nu = field<double>(params, "nu");
  c.params.mode = parse_mode(field<std::string>(params, "mode"));
  c.params.seed = field<std::uint64_t>(params, "seed");
  c.params.starts = field<int>(params, "starts");
  c.params.backend = parse_backend(field<std::string>(params, "backend"));
  c.params.random_budget = field<std::uint64_t>(params, "random_budget");
  c.params.bits = field<int>(params, "bits");
  c.params.fallback = field<bool>(params, "fallback");
  c.params.target = parse_target(field<std::string>(params, "target"));
  c.params.guard = field<double>(params, "guard");
  c.params.nu_floor = field<double>(params, "nu_floor");
  if (!j.contains("trace")) throw InputError("certificate is missing \"trace\"");
  return c;
}

json to_json(const RStarRecord& r) {
  return {{"c", r.c.to_string()},
          {"k", r.k},
          {"n", r.value ? json(*r.value) : json(nullptr)},
          {"n_max", r.n_max},
          {"verdict", r.value ? "verified up to n_max" : "unknown"},
          {"witness_graph6", r.witness_graph6},
          {"timestamp", r.timestamp},
          {"code_version", r.code_version}};
}

std::optional<RStarRecord> cache_lookup(const std::string& path, Rational c, int k, int n_max) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::optional<RStarRecord> found;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    try {
      const Rational rc = Rational::parse(j.at("c").get<std::string>());
      if (rc.num != c.num || rc.den != c.den || j.at("k").get<int>() != k ||
          j.at("n_max").get<int>() != n_max)
        continue;
      RStarRecord r;
      r.c = rc;
      r.k = k;
      r.n_max = n_max;
      if (!j.at("n").is_null()) r.value = j.at("n").get<int>();
      r.witness_graph6 = j.at("witness_graph6").get<std::string>();
      r.timestamp = j.at("timestamp").get<std::string>();
      r.code_version = j.at("code_version").get<std::string>();
      found = r;
    } catch (const std::exception&) {
      continue;
    }
  }
  return found;
}

void cache_append(const std::string& path, const RStarRecord& r) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw InputError("cannot open results cache " + path);
  out << to_json(r).dump() << '\n';
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace quasiramsey
