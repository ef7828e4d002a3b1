#pragma once

#include <optional>
#include <vector>

#include "quasiramsey/discrepancy.hpp"
#include "quasiramsey/graph.hpp"

namespace quasiramsey {

struct ThinningOptions {
  ColoringBackend backend = exact_backend();
  int bits = kDefaultRoundingBits;
  // Density surplus in delta >= l/2 + eta sqrt(l). Defaults to the largest
  // value the input supports, (delta - l/2)/sqrt(l).
  std::optional<double> eta;
  // beta in p = (k + 1 + beta)/l. Defaults to 6 sqrt(l).
  std::optional<double> beta_target;
};

struct ThinningReport {
  int order = 0;               // l
  int k = 0;
  double p = 0.0;
  double eta = 0.0;
  double beta_target = 0.0;
  bool hypothesis_met = false; // eta > 0 and delta >= l/2 + eta sqrt(l)
  bool deletion_branch = false;  // p > 1: dropped the last l - k vertices
  std::vector<int> y;          // the proportional selection Y
  double realized_deviation = 0.0;  // certified max_i ||A_i ∩ Y| - p|A_i||
  bool window_ok = true;       // size_window_check on Y
  std::vector<int> z;          // the k returned vertices
  int removed = 0;             // |Y| - k, or l - k on the deletion branch
  int achieved_min_degree = 0; // delta(h[Z]), recomputed
  // Degree floor certified by replaying the selection arithmetic with the
  // realized deviation; empty when the hypothesis or the size window fails.
  std::optional<double> guarantee_with_beta;
  double literal_bound = 0.0;  // k/2 + (eta/sqrt(P) - 19 sqrt(P)) sqrt(k)
};

/// Shrinks h (order l >= k) to exactly k vertices keeping a high minimum degree.
///
/// The family A_0 = V, A_i = N(v_i) for i = 1..l-1 (the last vertex's
/// neighbourhood is left out) is thinned by select_proportional at
/// p = (k + 1 + beta)/l; Z is then the first k vertices of Y minus the last
/// vertex. When p > 1 the last l - k vertices are simply dropped.
ThinningReport thin_to_k(const Graph& h, int k, const ThinningOptions& opts = {});

// k + 1 + beta - beta_hat <= |Y| <= k + 1 + beta + beta_hat. With beta equal
// to beta_hat this is the window [k + 1, k + 1 + 2 beta_hat].
bool size_window_check(std::size_t y_size, int k, double beta_target, double beta_hat);
inline bool size_window_check(std::size_t y_size, int k, double beta_hat) {
  return size_window_check(y_size, k, beta_hat, beta_hat);
}

}  // namespace quasiramsey
