#include "quasiramsey/thinning.hpp"

#include <algorithm>
#include <cmath>

#include "quasiramsey/errors.hpp"

namespace quasiramsey {

bool size_window_check(std::size_t y_size, int k, double beta_target, double beta_hat) {
  const double size = static_cast<double>(y_size);
  const double centre = k + 1 + beta_target;
  const double tol = 1e-9 * std::max(1.0, centre);
  return size >= centre - beta_hat - tol && size <= centre + beta_hat + tol;
}

ThinningReport thin_to_k(const Graph& h, int k, const ThinningOptions& opts) {
  const int l = h.order();
  if (k < 1) throw InputError("k must be at least 1");
  if (k > l) throw InputError("cannot thin " + std::to_string(l) + " vertices to k = " + std::to_string(k));

  ThinningReport rep;
  rep.order = l;
  rep.k = k;
  const double root_l = std::sqrt(static_cast<double>(l));
  const int delta = h.min_degree();
  rep.eta = opts.eta ? *opts.eta : (delta - l / 2.0) / root_l;
  rep.hypothesis_met = rep.eta > 0 && delta >= l / 2.0 + rep.eta * root_l - 1e-9;
  rep.beta_target = opts.beta_target ? *opts.beta_target : 6.0 * root_l;
  rep.p = (k + 1 + rep.beta_target) / l;

  const double big_p = static_cast<double>(l) / k;
  rep.literal_bound = k / 2.0 + (rep.eta / std::sqrt(big_p) - 19.0 * std::sqrt(big_p)) * std::sqrt(static_cast<double>(k));

  if (rep.p > 1.0) {
    rep.deletion_branch = true;
    for (int v = 0; v < k; ++v) rep.z.push_back(v);
    rep.y = rep.z;
    rep.removed = l - k;
    rep.achieved_min_degree = min_degree_within(h, VertexSet::from_list(static_cast<std::size_t>(l), rep.z));
    // Each dropped vertex costs a survivor at most one neighbour.
    if (rep.hypothesis_met) rep.guarantee_with_beta = static_cast<double>(delta - rep.removed);
    return rep;
  }

  std::vector<std::vector<int>> family;
  family.reserve(static_cast<std::size_t>(l));
  {
    std::vector<int> all(static_cast<std::size_t>(l));
    for (int v = 0; v < l; ++v) all[static_cast<std::size_t>(v)] = v;
    family.push_back(std::move(all));
  }
  for (int v = 0; v + 1 < l; ++v) family.push_back(h.neighbors(v).members());
  const SetSystem sets(l, std::move(family));

  const auto sel = select_proportional(sets, rep.p, opts.backend, opts.bits);
  rep.y = sel.y.members();
  rep.realized_deviation = sel.deviation;
  rep.window_ok = size_window_check(rep.y.size(), k, rep.beta_target, rep.realized_deviation);

  const int last = l - 1;
  for (int v : rep.y) {
    if (static_cast<int>(rep.z.size()) == k) break;
    if (v != last) rep.z.push_back(v);
  }
  const bool short_y = static_cast<int>(rep.z.size()) < k;
  // Y can only come up short when the deviation overshoots the window; pad
  // with the first unused vertices so the output still has k members.
  for (int v = 0; short_y && static_cast<int>(rep.z.size()) < k && v < l; ++v) {
    if (v == last || std::binary_search(rep.y.begin(), rep.y.end(), v)) continue;
    rep.z.push_back(v);
  }
  if (short_y) {
    if (static_cast<int>(rep.z.size()) < k) rep.z.push_back(last);
    std::sort(rep.z.begin(), rep.z.end());
  }
  rep.removed = static_cast<int>(rep.y.size()) - k;
  rep.achieved_min_degree = min_degree_within(h, VertexSet::from_list(static_cast<std::size_t>(l), rep.z));

  if (rep.hypothesis_met && !short_y) {
    // |A_i ∩ Y| >= p|A_i| - beta_hat >= (k/l)(l/2 + eta sqrt(l)) - beta_hat,
    // and passing from Y to Z removes at most |Y| - k neighbours.
    rep.guarantee_with_beta = k / 2.0 + rep.eta / std::sqrt(big_p) * std::sqrt(static_cast<double>(k)) -
                              rep.realized_deviation - rep.removed;
  }
  return rep;
}

}  // namespace quasiramsey
