#include "quasiramsey/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <sstream>

#include "quasiramsey/errors.hpp"
#include "quasiramsey/random.hpp"
#include "subset_search.hpp"

namespace quasiramsey {

SetSystem::SetSystem(int ground, std::vector<std::vector<int>> family)
    : ground_size(ground), sets(std::move(family)) {
  if (ground < 0) throw InputError("negative ground size");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto& s = sets[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && (s.front() < 0 || s.back() >= ground))
      throw InputError("set " + std::to_string(i) + " leaves the ground set [0, " +
                       std::to_string(ground) + ")");
  }
}

SetSystem SetSystem::parse(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw InputError("set system: missing header line");
  std::istringstream header(line);
  long long ground = -1, m = -1;
  if (!(header >> ground >> m) || ground < 0 || m < 0)
    throw InputError("set system: header must be \"l m\" with non-negative integers");
  std::vector<std::vector<int>> family;
  family.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    // Empty sets are written as blank lines, so read raw lines here.
    if (!std::getline(in, line)) throw InputError("set system: expected " + std::to_string(m) + " sets");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream row(line);
    std::vector<int> members;
    long long v = 0;
    while (row >> v) members.push_back(static_cast<int>(v));
    if (!row.eof()) throw InputError("set system: bad token on set line " + std::to_string(i));
    family.push_back(std::move(members));
  }
  return SetSystem(static_cast<int>(ground), std::move(family));
}

std::string SetSystem::to_text() const {
  std::ostringstream out;
  out << ground_size << ' ' << sets.size() << '\n';
  for (const auto& s : sets) {
    for (std::size_t j = 0; j < s.size(); ++j) out << (j ? " " : "") << s[j];
    out << '\n';
  }
  return out.str();
}

Coloring::Coloring(std::vector<std::int8_t> v) : values(std::move(v)) {
  for (auto x : values)
    if (x != 1 && x != -1) throw InputError("colouring entries must be +1 or -1");
}

std::vector<int> Selection::chosen() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < values.size(); ++j)
    if (values[j]) out.push_back(static_cast<int>(j));
  return out;
}

FractionalPoint::FractionalPoint(std::vector<double> v) : values(std::move(v)) {
  for (double x : values)
    if (!(x >= 0.0 && x <= 1.0)) throw InputError("fractional point entries must lie in [0,1]");
}

FractionalPoint FractionalPoint::constant(std::size_t ground, double p) {
  return FractionalPoint(std::vector<double>(ground, p));
}

int eval_disc(const SetSystem& h, const Coloring& chi) {
  if (chi.size() != static_cast<std::size_t>(h.ground_size))
    throw InputError("colouring length " + std::to_string(chi.size()) + " != ground size " +
                     std::to_string(h.ground_size));
  int worst = 0;
  for (const auto& s : h.sets) {
    int sum = 0;
    for (int j : s) sum += chi.values[static_cast<std::size_t>(j)];
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

namespace {

// Any set of odd size forces |chi(A)| >= 1.
int parity_floor(const SetSystem& h) {
  for (const auto& s : h.sets)
    if (s.size() % 2 == 1) return 1;
  return 0;
}

}  // namespace

ColoringResult disc_exact(const SetSystem& h, int max_ground) {
  const int l = h.ground_size;
  if (l > max_ground || l > 31)
    throw GuardExceeded("exact discrepancy needs 2^" + std::to_string(l) +
                        " colourings; ground size limit is " + std::to_string(max_ground));
  if (l == 0) return {0, Coloring{}};

  // Element j sits at bit (l-1-j), so counting up the code walks colourings
  // in lexicographic order with bit 1 meaning +1.
  std::vector<std::uint32_t> masks;
  std::vector<int> sizes;
  for (const auto& s : h.sets) {
    std::uint32_t m = 0;
    for (int j : s) m |= std::uint32_t{1} << (l - 1 - j);
    masks.push_back(m);
    sizes.push_back(static_cast<int>(s.size()));
  }
  const int floor = parity_floor(h);
  int best = INT32_MAX;
  std::uint32_t best_code = 0;
  const std::uint32_t half = std::uint32_t{1} << (l - 1);
  for (std::uint32_t code = 0; code < half; ++code) {
    int worst = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const int v = std::abs(2 * std::popcount(code & masks[i]) - sizes[i]);
      if (v > worst) {
        worst = v;
        if (worst >= best) break;
      }
    }
    if (worst < best) {
      best = worst;
      best_code = code;
      if (best == floor) break;
    }
  }
  std::vector<std::int8_t> chi(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) chi[static_cast<std::size_t>(j)] = ((best_code >> (l - 1 - j)) & 1U) ? 1 : -1;
  return {best, Coloring(std::move(chi))};
}

ColoringResult disc_random(const SetSystem& h, std::uint64_t budget, std::uint64_t seed) {
  const auto l = static_cast<std::size_t>(h.ground_size);
  Rng rng(seed);
  const int floor = parity_floor(h);
  ColoringResult best{INT32_MAX, {}};
  std::vector<std::int8_t> chi(l);
  for (std::uint64_t trial = 0; trial < std::max<std::uint64_t>(budget, 1); ++trial) {
    std::uint64_t word = 0;
    for (std::size_t j = 0; j < l; ++j) {
      if (j % 64 == 0) word = rng.next();
      chi[j] = ((word >> (j % 64)) & 1U) ? 1 : -1;
    }
    Coloring c(chi);
    const int value = eval_disc(h, c);
    if (value < best.value) {
      best = {value, std::move(c)};
      if (value == floor) break;
    }
  }
  return best;
}

SetSystem restrict(const SetSystem& h, std::span<const int> subset) {
  std::vector<int> relabel(static_cast<std::size_t>(h.ground_size), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const int v = subset[i];
    if (v < 0 || v >= h.ground_size) throw InputError("restriction leaves the ground set");
    if (i > 0 && subset[i - 1] >= v) throw InputError("restriction subset must be strictly ascending");
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  SetSystem out;
  out.ground_size = static_cast<int>(subset.size());
  out.sets.reserve(h.sets.size());
  for (const auto& s : h.sets) {
    std::vector<int> r;
    for (int j : s)
      if (relabel[static_cast<std::size_t>(j)] >= 0) r.push_back(relabel[static_cast<std::size_t>(j)]);
    out.sets.push_back(std::move(r));
  }
  return out;
}

ColoringBackend exact_backend(int max_ground) {
  return [max_ground](const SetSystem& h, int) { return disc_exact(h, max_ground); };
}

ColoringBackend random_backend(std::uint64_t budget, std::uint64_t seed) {
  return [budget, seed](const SetSystem& h, int round) {
    return disc_random(h, budget, derive_seed(seed, static_cast<std::uint64_t>(round)));
  };
}

ColoringBackend auto_backend(std::uint64_t budget, std::uint64_t seed, int max_ground) {
  return [=](const SetSystem& h, int round) {
    if (h.ground_size <= max_ground) return disc_exact(h, max_ground);
    return disc_random(h, budget, derive_seed(seed, static_cast<std::uint64_t>(round)));
  };
}

RoundingResult lindisc_round(const SetSystem& h, const FractionalPoint& c,
                             const ColoringBackend& backend, int bits) {
  if (bits < 1 || bits > 52) throw InputError("rounding bits must lie in [1, 52]");
  const auto l = static_cast<std::size_t>(h.ground_size);
  if (c.values.size() != l) throw InputError("fractional point length != ground size");

  const std::int64_t scale = std::int64_t{1} << bits;
  std::vector<std::int64_t> q(l);
  for (std::size_t j = 0; j < l; ++j)
    q[j] = std::llround(c.values[j] * static_cast<double>(scale));

  RoundingResult out;
  std::size_t widest = 0;
  for (const auto& s : h.sets) widest = std::max(widest, s.size());
  out.quantization_bound = static_cast<double>(widest) / static_cast<double>(scale);
  out.bound = out.quantization_bound;

  for (int digit = 0; digit < bits; ++digit) {
    const std::int64_t unit = std::int64_t{1} << digit;
    std::vector<int> support;
    for (std::size_t j = 0; j < l; ++j)
      if (q[j] & unit) support.push_back(static_cast<int>(j));
    out.round_support.push_back(static_cast<int>(support.size()));
    if (support.empty()) {
      out.round_disc.push_back(0);
      continue;
    }
    const SetSystem sub = restrict(h, support);
    const ColoringResult colored = backend(sub, digit);
    if (colored.coloring.size() != support.size())
      throw InputError("colouring backend returned a colouring of the wrong length");
    // Certify the round by evaluation rather than trusting the backend's value.
    const int value = eval_disc(sub, colored.coloring);
    out.round_disc.push_back(value);
    out.bound += static_cast<double>(value) * static_cast<double>(unit) / static_cast<double>(scale);
    for (std::size_t i = 0; i < support.size(); ++i) {
      auto& coord = q[static_cast<std::size_t>(support[i])];
      coord += colored.coloring.values[i] > 0 ? unit : -unit;
    }
  }

  out.x.values.resize(l);
  for (std::size_t j = 0; j < l; ++j) out.x.values[j] = q[j] == scale ? 1 : 0;

  for (const auto& s : h.sets) {
    double err = 0.0;
    for (int j : s) err += static_cast<double>(out.x.values[static_cast<std::size_t>(j)]) - c.values[static_cast<std::size_t>(j)];
    out.achieved = std::max(out.achieved, std::abs(err));
  }
  return out;
}

ProportionalSelection select_proportional(const SetSystem& sets, double p,
                                          const ColoringBackend& backend, int bits) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("selection probability must lie in [0, 1]");
  ProportionalSelection out;
  out.rounding = lindisc_round(sets, FractionalPoint::constant(static_cast<std::size_t>(sets.ground_size), p),
                               backend, bits);
  const auto chosen = out.rounding.x.chosen();
  out.y = VertexSet::from_list(static_cast<std::size_t>(sets.ground_size), chosen);
  for (const auto& s : sets.sets) {
    std::size_t hit = 0;
    for (int j : s) hit += out.y.contains(j) ? 1 : 0;
    out.deviation = std::max(out.deviation,
                             std::abs(static_cast<double>(hit) - p * static_cast<double>(s.size())));
  }
  return out;
}

double count_subsets_up_to(int n, int t) {
  double total = 0.0, term = 1.0;
  for (int j = 0; j <= std::min(n, t); ++j) {
    total += term;
    if (total > 1e18) return 1e18;
    term = term * static_cast<double>(n - j) / static_cast<double>(j + 1);
  }
  return total;
}

namespace {

struct SubsetScan {
  const Graph& g;
  int t;
  std::vector<int> current;
  std::int64_t edges = 0;
  std::vector<int> best_set;
  HalfInteger best_value;

  // Pre-order DFS over ascending extensions visits subsets in lexicographic order.
  void visit(int next) {
    for (int v = next; v < g.order(); ++v) {
      std::int64_t gained = 0;
      for (int u : current) gained += g.adjacent(u, v) ? 1 : 0;
      current.push_back(v);
      edges += gained;
      const HalfInteger d = discrepancy_from_counts(edges, static_cast<std::int64_t>(current.size()));
      if (d.abs() > best_value.abs()) {
        best_value = d;
        best_set = current;
      }
      if (static_cast<int>(current.size()) < t) visit(v + 1);
      edges -= gained;
      current.pop_back();
    }
  }
};

}  // namespace

SubsetDiscrepancy max_subset_discrepancy(const Graph& g, int t, SearchMode mode,
                                         std::uint64_t seed, double guard) {
  if (t < 0) throw InputError("subset size bound must be non-negative");
  const int n = g.order();
  const double count = count_subsets_up_to(n, t);
  if (mode == SearchMode::automatic) mode = count <= guard ? SearchMode::exact : SearchMode::heuristic;

  if (mode == SearchMode::exact) {
    if (count > guard) {
      std::ostringstream msg;
      msg << "exact max-subset discrepancy would enumerate " << count
          << " subsets (n=" << n << ", t=" << t << "); guard is " << guard;
      throw GuardExceeded(msg.str());
    }
    SubsetScan scan{g, t, {}, 0, {}, HalfInteger{}};
    if (t > 0) scan.visit(0);
    return {VertexSet::from_list(static_cast<std::size_t>(n), scan.best_set), scan.best_value, true};
  }

  SubsetDiscrepancy out{VertexSet(static_cast<std::size_t>(n)), HalfInteger{}, false};
  if (n == 0 || t <= 1) return out;
  auto found = detail::multistart_skew(g, 0.0, std::min(t, n), 16, seed);
  if (found.disc.abs() > out.value.abs()) {
    out.value = discrepancy(g, found.set);
    out.set = std::move(found.set);
  }
  return out;
}

}  // namespace quasiramsey
