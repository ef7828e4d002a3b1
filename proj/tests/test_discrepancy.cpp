#include <cmath>
#include <sstream>

#include "brute.hpp"
#include "doctest.h"
#include "quasiramsey/discrepancy.hpp"
#include "quasiramsey/errors.hpp"
#include "quasiramsey/random.hpp"

using namespace quasiramsey;

namespace {

SetSystem random_system(int ground, int m, std::uint64_t seed, double density = 0.5) {
  Rng rng(seed);
  std::vector<std::vector<int>> family(m);
  for (auto& set : family)
    for (int v = 0; v < ground; ++v)
      if (rng.bernoulli(density)) set.push_back(v);
  return SetSystem(ground, family);
}

// min over all 2^l colourings of max_i |sum_{j in A_i} chi_j|.
int brute_disc(const SetSystem& h) {
  int best = 1 << 30;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << h.ground_size); ++m) {
    int worst = 0;
    for (const auto& set : h.sets) {
      int sum = 0;
      for (int v : set) sum += ((m >> v) & 1) ? 1 : -1;
      worst = std::max(worst, std::abs(sum));
    }
    best = std::min(best, worst);
  }
  return best;
}

Coloring coloring(std::vector<int> v) {
  std::vector<std::int8_t> c(v.begin(), v.end());
  return Coloring(c);
}

}  // namespace

TEST_CASE("eval_disc") {
  CHECK(eval_disc(SetSystem(2, {{0, 1}}), coloring({1, -1})) == 0);
  CHECK(eval_disc(SetSystem(2, {{0}, {1}, {0, 1}}), coloring({1, -1})) == 1);
  const SetSystem h = random_system(9, 6, 3);
  std::size_t largest = 0;
  for (const auto& s : h.sets) largest = std::max(largest, s.size());
  CHECK(eval_disc(h, coloring(std::vector<int>(9, 1))) == static_cast<int>(largest));
  CHECK_THROWS_AS(Coloring(std::vector<std::int8_t>{1, 0}), InputError);
}

TEST_CASE("disc_exact matches exhaustive minimisation") {
  CHECK(disc_exact(SetSystem(6, {{0, 1, 2, 3, 4, 5}})).value == 0);
  CHECK(disc_exact(SetSystem(2, {{0}, {1}, {0, 1}})).value == 1);
  CHECK(disc_exact(SetSystem(4, {})).value == 0);
  for (int trial = 0; trial < 40; ++trial) {
    const SetSystem h = random_system(3 + trial % 10, 1 + trial % 7, 500 + trial);
    const ColoringResult r = disc_exact(h);
    CHECK(r.value == brute_disc(h));
    CHECK(eval_disc(h, r.coloring) == r.value);
  }
  CHECK_THROWS_AS(disc_exact(SetSystem(23, {{0}})), GuardExceeded);
}

TEST_CASE("disc_random is certified and reproducible") {
  const SetSystem whole(40, {[] {
                          std::vector<int> all(40);
                          for (int i = 0; i < 40; ++i) all[i] = i;
                          return all;
                        }()});
  const ColoringResult r = disc_random(whole, 200, 1);
  CHECK(eval_disc(whole, r.coloring) == r.value);
  CHECK(r.value <= 3 * std::sqrt(40.0));
  const SetSystem h = random_system(30, 20, 8);
  CHECK(disc_random(h, 1, 5).value == disc_random(h, 1, 5).value);
  CHECK(disc_random(h, 1, 5).coloring.values == disc_random(h, 1, 5).coloring.values);
  CHECK(disc_random(SetSystem(5, {}), 10, 0).value == 0);
}

TEST_CASE("restrict") {
  const SetSystem h(3, {{0, 1, 2}});
  const std::vector<int> x{0, 2};
  const SetSystem r = restrict(h, x);
  CHECK(r.ground_size == 2);
  CHECK(r.sets == std::vector<std::vector<int>>{{0, 1}});
  const SetSystem g = random_system(8, 5, 2);
  const std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(restrict(g, all).sets == g.sets);
  const SetSystem none = restrict(g, std::vector<int>{});
  for (const auto& s : none.sets) CHECK(s.empty());
}

TEST_CASE("lindisc_round") {
  const SetSystem h = random_system(12, 8, 4);
  FractionalPoint integral(std::vector<double>{0, 1, 1, 0, 0, 1, 0, 1, 1, 1, 0, 0});
  const RoundingResult same = lindisc_round(h, integral, exact_backend());
  for (std::size_t j = 0; j < 12; ++j) CHECK(same.x.values[j] == integral.values[j]);
  CHECK(same.achieved == 0.0);

  std::vector<std::vector<int>> singletons;
  for (int i = 0; i < 6; ++i) singletons.push_back({i});
  const SetSystem s(6, singletons);
  const RoundingResult half = lindisc_round(s, FractionalPoint::constant(6, 0.5), exact_backend());
  CHECK(half.achieved == 0.5);

  // |sum x - p l| within the reported bound, recomputed here.
  std::vector<int> all(15);
  for (int i = 0; i < 15; ++i) all[i] = i;
  const SetSystem whole(15, {all});
  const RoundingResult r = lindisc_round(whole, FractionalPoint::constant(15, 0.375), exact_backend());
  double sum = 0;
  for (auto v : r.x.values) sum += v;
  CHECK(std::abs(sum - 0.375 * 15) == doctest::Approx(r.achieved));
  CHECK(r.achieved <= r.bound + 1e-12);

  for (int trial = 0; trial < 20; ++trial) {
    const SetSystem g = random_system(14, 10, 90 + trial);
    Rng rng(trial);
    std::vector<double> c(14);
    for (auto& v : c) v = rng.unit();
    const RoundingResult out = lindisc_round(g, FractionalPoint(c), exact_backend());
    double worst = 0;
    for (const auto& set : g.sets) {
      double d = 0;
      for (int v : set) d += out.x.values[v] - c[v];
      worst = std::max(worst, std::abs(d));
    }
    CHECK(worst == doctest::Approx(out.achieved));
    CHECK(out.achieved <= out.bound + 1e-9);
  }
}

TEST_CASE("select_proportional") {
  const SetSystem h = random_system(16, 10, 12);
  const auto none = select_proportional(h, 0.0, exact_backend());
  CHECK(none.y.empty());
  CHECK(none.deviation == 0.0);
  const auto all = select_proportional(h, 1.0, exact_backend());
  CHECK(all.y.size() == 16);
  CHECK(all.deviation == 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int l = 8 + trial % 13;
    const SetSystem g = random_system(l, l, 300 + trial);
    const double p = 0.3 + 0.02 * trial;
    const auto sel = select_proportional(g, p, exact_backend());
    double worst = 0;
    for (const auto& set : g.sets) {
      int hit = 0;
      for (int v : set) hit += sel.y.contains(v);
      worst = std::max(worst, std::abs(hit - p * static_cast<double>(set.size())));
    }
    CHECK(worst == doctest::Approx(sel.deviation));
    CHECK(sel.deviation <= 6 * std::sqrt(static_cast<double>(l)));
  }
}

TEST_CASE("SetSystem text form") {
  std::istringstream in("4 3\n0 1 2\n\n3 1\n");
  const SetSystem h = SetSystem::parse(in);
  CHECK(h.ground_size == 4);
  CHECK(h.sets == std::vector<std::vector<int>>{{0, 1, 2}, {}, {1, 3}});
  std::istringstream back(h.to_text());
  CHECK(SetSystem::parse(back).sets == h.sets);
  std::istringstream bad("3 1\n0 5\n");
  CHECK_THROWS_AS(SetSystem::parse(bad), InputError);
}

TEST_CASE("max_subset_discrepancy against exhaustive search") {
  Graph empty(6);
  CHECK(max_subset_discrepancy(empty, 6).magnitude() == HalfInteger::from_twice(15));
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  const auto r = max_subset_discrepancy(c5, 5);
  CHECK(r.magnitude() == HalfInteger::from_twice(1));
  CHECK(r.set.members() == std::vector<int>{0, 1});
  CHECK(max_subset_discrepancy(c5, 1).magnitude() == HalfInteger::from_int(0));

  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = sample_gnp(11, 0.5, 40 + trial);
    const auto rows = brute::rows(g);
    const int t = 3 + trial % 8;
    long best = 0;
    for (brute::Mask m = 0; m < (1u << 11); ++m)
      if (std::popcount(m) <= t) best = std::max(best, std::abs(brute::disc2(rows, m)));
    CHECK(max_subset_discrepancy(g, t).magnitude().twice == best);
    const auto h = max_subset_discrepancy(g, t, SearchMode::heuristic, 3);
    CHECK(h.magnitude().twice <= best);
    CHECK(h.value == discrepancy(g, h.set));
    CHECK(h.set.size() <= static_cast<std::size_t>(t));
  }
}
