#pragma once

// Independent brute-force oracles for the tests. They read a graph only
// through adjacent() and recompute everything from scratch over bitmasks.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "quasiramsey/graph.hpp"

namespace brute {

using Mask = std::uint64_t;

inline std::vector<Mask> rows(const quasiramsey::Graph& g) {
  std::vector<Mask> r(g.order(), 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) r[u] |= Mask{1} << v;
  return r;
}

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

inline Mask mask_of(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= Mask{1} << v;
  return m;
}

inline long edges(const std::vector<Mask>& r, Mask s) {
  long twice = 0;
  for (int v : members(s)) twice += std::popcount(r[v] & s);
  return twice / 2;
}

inline int min_degree(const std::vector<Mask>& r, Mask s) {
  int best = 1 << 30;
  for (int v : members(s)) best = std::min(best, std::popcount(r[v] & s));
  return s ? best : 0;
}

// Twice D(X).
inline long disc2(const std::vector<Mask>& r, Mask s) {
  const long k = std::popcount(s);
  return 2 * edges(r, s) - k * (k - 1) / 2;
}

inline bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Every k-subset of [n] in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Best {
  std::vector<int> subset;
  int value = -1;
};

inline Best best_min_degree(const std::vector<Mask>& r, int k) {
  Best best;
  for_each_combination(static_cast<int>(r.size()), k, [&](const std::vector<int>& c) {
    const int d = min_degree(r, mask_of(c));
    if (d > best.value) best = {c, d};
  });
  return best;
}

inline std::vector<Mask> complement(const std::vector<Mask>& r) {
  const int n = static_cast<int>(r.size());
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> c(n);
  for (int v = 0; v < n; ++v) c[v] = all & ~r[v] & ~(Mask{1} << v);
  return c;
}

// graph6 written straight from the format description.
inline std::string graph6(const std::vector<Mask>& r) {
  const int n = static_cast<int>(r.size());
  std::string s;
  if (n <= 62) {
    s += static_cast<char>(63 + n);
  } else {
    s += '~';
    for (int shift = 12; shift >= 0; shift -= 6) s += static_cast<char>(63 + ((n >> shift) & 63));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back((r[i] >> j) & 1);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[i + b];
    s += static_cast<char>(63 + v);
  }
  return s;
}

inline quasiramsey::Graph from_code(int n, std::uint64_t code) {
  quasiramsey::Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((code >> bit) & 1) g.add_edge(i, j);
  return g;
}

}  // namespace brute
