#include <cmath>

#include "brute.hpp"
#include "doctest.h"
#include "quasiramsey/errors.hpp"
#include "quasiramsey/extraction.hpp"
#include "quasiramsey/random.hpp"

using namespace quasiramsey;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

ArgmaxOptions exact_opts() {
  ArgmaxOptions o;
  o.mode = SearchMode::exact;
  return o;
}

// Global argmax of D_nu: larger skew, then larger |D|, then lexicographically first.
std::vector<int> brute_argmax(const Graph& g, double nu) {
  const auto r = brute::rows(g);
  const int n = g.order();
  std::vector<int> best;
  double best_skew = 0;
  long best_abs = -1;
  for (brute::Mask m = 1; m < (brute::Mask{1} << n); ++m) {
    const long d = std::abs(brute::disc2(r, m));
    const double s = std::popcount(m);
    const double skew = d / 2.0 - nu * s * std::sqrt(s);
    const auto vs = brute::members(m);
    bool better = best.empty() || skew > best_skew + 1e-12;
    if (!better && std::abs(skew - best_skew) <= 1e-12) {
      better = d > best_abs || (d == best_abs && brute::lex_less(vs, best));
    }
    if (better) {
      best = vs;
      best_skew = skew;
      best_abs = d;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("argmax_skew on small graphs") {
  CHECK(argmax_skew(complete(4), 0.0, exact_opts()).members() == std::vector<int>{0, 1, 2, 3});
  CHECK(argmax_skew(Graph(3), 0.0, exact_opts()).members() == std::vector<int>{0, 1, 2});
  CHECK(argmax_skew(sample_gnp(9, 0.5, 1), 100.0, exact_opts()).members() == std::vector<int>{0});
}

TEST_CASE("argmax_skew exact mode equals exhaustive argmax") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 9;
    const double nu = (trial % 4) * 0.25;
    const Graph g = sample_gnp(n, 0.5, 200 + trial);
    const auto got = argmax_skew(g, nu, exact_opts());
    const auto want = brute_argmax(g, nu);
    // Same skew and |D| as the brute-force optimum.
    CHECK(skew_discrepancy(g, got, nu) == doctest::Approx(skew_discrepancy(g, VertexSet::from_list(n, want), nu)));
    CHECK(discrepancy(g, got).abs() == discrepancy(g, VertexSet::from_list(n, want)).abs());
  }
}

TEST_CASE("argmax_skew heuristic is deterministic and never beats the optimum") {
  ArgmaxOptions h;
  h.mode = SearchMode::heuristic;
  h.seed = 9;
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = sample_gnp(12, 0.5, 600 + trial);
    const auto a = argmax_skew(g, 0.5, h);
    CHECK(a == argmax_skew(g, 0.5, h));
    const auto best = VertexSet::from_list(12, brute_argmax(g, 0.5));
    CHECK(skew_discrepancy(g, a, 0.5) <= skew_discrepancy(g, best, 0.5) + 1e-9);
  }
  ArgmaxOptions too_big = exact_opts();
  CHECK_THROWS_AS(argmax_skew(sample_gnp(30, 0.5, 1), 0.0, too_big), GuardExceeded);
}

TEST_CASE("extract_sequence") {
  const auto k4 = extract_sequence(complete(4), 0.0, exact_opts());
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].removed == std::vector<int>{0, 1, 2, 3});
  CHECK(k4[0].remaining == 0);
  const auto two = extract_sequence(Graph(2), 0.0, exact_opts());
  REQUIRE(two.size() == 1);
  CHECK(two[0].remaining == 0);
  CHECK_THROWS_AS(extract_sequence(Graph(1), 0.0), InputError);

  const Graph g = sample_gnp(14, 0.5, 3);
  const auto a = extract_sequence(g, 0.5, exact_opts());
  const auto b = extract_sequence(g, 0.5, exact_opts());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].removed == b[i].removed);
  // Removed sets are disjoint, recorded D is exact, and the loop stops below n/2.
  VertexSet seen(14);
  for (const auto& s : a) {
    const VertexSet x = VertexSet::from_list(14, s.removed);
    CHECK_FALSE(seen.intersects(x));
    seen |= x;
    CHECK(discrepancy(g, x) == s.disc);
    CHECK(14 - static_cast<int>(seen.size()) == s.remaining);
  }
  CHECK(2 * a.back().remaining < 14);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) CHECK(2 * a[i].remaining >= 14);
}

TEST_CASE("complement duality of the removal sequence") {
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = sample_gnp(12, 0.5, 70 + trial);
    const auto a = extract_sequence(g, 0.25, exact_opts());
    const auto b = extract_sequence(complement(g), 0.25, exact_opts());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].removed == b[i].removed);
      CHECK(a[i].disc == -b[i].disc);
      CHECK(side_disc(a[i], Side::complement) == side_disc(b[i], Side::original));
    }
  }
}

TEST_CASE("variable bound by exact comparison") {
  CHECK(meets_variable_bound(3, 4, 0.0));  // 3 >= 3/2
  CHECK_FALSE(meets_variable_bound(1, 4, 0.0));
  CHECK(meets_variable_bound(2, 5, 0.0));  // 2 >= 2
  CHECK_FALSE(meets_variable_bound(2, 5, 0.01));
  CHECK(meets_variable_bound(4, 5, 1.0));   // 4 >= 2 + 2
  CHECK_FALSE(meets_variable_bound(3, 5, 1.0));
  CHECK(variable_bound(5, 1.0) == doctest::Approx(4.0));
  for (int order = 2; order < 30; ++order)
    for (int deg = 0; deg < order; ++deg)
      for (double nu : {0.0, 0.125, 0.5, 0.75, 1.0, 2.0})
        CHECK(meets_variable_bound(deg, order, nu) ==
              (deg - (order - 1) / 2.0 >= nu * std::sqrt(order - 1.0) - 1e-12 &&
               deg - (order - 1) / 2.0 >= nu * std::sqrt(order - 1.0) * (1 - 1e-12)));
}

TEST_CASE("variable_quasi_ramsey") {
  for (int k : {2, 3, 4}) {
    const auto full = variable_quasi_ramsey(complete(2 * k), k, 0.0, exact_opts());
    REQUIRE(full.found);
    CHECK(full.found->side == Side::original);
    CHECK(full.found->order == 2 * k);
    const auto empty = variable_quasi_ramsey(Graph(2 * k), k, 0.0, exact_opts());
    REQUIRE(empty.found);
    CHECK(empty.found->side == Side::complement);
    CHECK(empty.found->subset == full.found->subset);
  }
  const Graph g = sample_gnp(60, 0.5, 7);
  const auto out = variable_quasi_ramsey(g, 4, 1.0);
  for (const auto* r : {&out.found, &out.best_candidate}) {
    if (!*r) continue;
    const Graph side = (*r)->side == Side::original ? g : complement(g);
    const int d = min_degree_within(side, VertexSet::from_list(60, (*r)->subset));
    CHECK(d == (*r)->achieved_min_degree);
    CHECK((*r)->verified == meets_variable_bound(d, (*r)->order, 1.0));
  }
  if (out.found) CHECK(out.found->verified);
}

TEST_CASE("mass bookkeeping") {
  const Graph g = sample_gnp(14, 0.5, 33);
  const auto trace = extract_sequence(g, 0.5, exact_opts());
  for (Side side : {Side::original, Side::complement}) {
    std::int64_t mass = 0;
    for (int i : positive_steps(trace, side)) {
      CHECK(side_disc(trace[i], side).twice > 0);
      mass += static_cast<std::int64_t>(trace[i].removed.size());
    }
    CHECK(mass == positive_mass(trace, side));
    CHECK(mass_condition(trace, side, 14) == (4 * mass >= 14));
  }
}
