#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "qpas/errors.hpp"
#include "qpas/scalar.hpp"

namespace qpas {

template <class S>
struct cluster_result {
  std::vector<S> representatives;        // ascending
  std::vector<std::size_t> assignment;   // input index -> representative index
};

/// Collapses a value list to distinct representatives. Exact backend: literal
/// dedup, eps ignored. Float backend: chains values whose gaps are <= eps,
/// takes the midpoint of each chain's extremes, and rejects (ambiguous_cluster)
/// any configuration where a chain is wider than 2*eps or two representatives
/// end up 2*eps or closer.
template <class S>
cluster_result<S> cluster_values(const std::vector<S>& values, double eps_snap) {
  cluster_result<S> out;
  out.assignment.resize(values.size());
  if (values.empty()) return out;

  if constexpr (is_exact_v<S>) {
    std::map<S, std::size_t> index;
    for (const S& v : values) index.emplace(v, 0);
    std::size_t k = 0;
    for (auto& [v, idx] : index) {
      idx = k++;
      out.representatives.push_back(v);
    }
    for (std::size_t i = 0; i < values.size(); ++i)
      out.assignment[i] = index.at(values[i]);
    return out;
  } else {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    // Chain by gap, then validate widths and separations.
    std::vector<std::pair<std::size_t, std::size_t>> chains;  // [begin, end) into order
    std::size_t begin = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (values[order[i]] - values[order[i - 1]] > eps_snap) {
        chains.emplace_back(begin, i);
        begin = i;
      }
    }
    chains.emplace_back(begin, order.size());

    for (auto [b, e] : chains) {
      const S lo = values[order[b]];
      const S hi = values[order[e - 1]];
      if (hi - lo > 2 * eps_snap) throw ambiguous_cluster(lo, hi, eps_snap);
      const S rep = (lo + hi) / 2;
      if (!out.representatives.empty()) {
        const S prev = out.representatives.back();
        if (rep - prev <= 2 * eps_snap) throw ambiguous_cluster(prev, rep, eps_snap);
      }
      const std::size_t rep_idx = out.representatives.size();
      out.representatives.push_back(rep);
      for (std::size_t i = b; i < e; ++i) out.assignment[order[i]] = rep_idx;
    }
    return out;
  }
}

}  // namespace qpas
