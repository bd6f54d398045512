#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "netdist/invariants.hpp"
#include "netdist/network.hpp"
#include "netdist/random.hpp"

namespace testutil {

inline netdist::network random_network(netdist::rng& gen, std::size_t n, double lo = -2.0,
                                       double hi = 2.0) {
  netdist::matrix w(n, n);
  for (double& v : w.data) v = gen.uniform(lo, hi);
  return netdist::make_network(std::move(w));
}

// Euclidean distance matrix of random planar points: a genuine metric.
inline netdist::network random_metric_network(netdist::rng& gen, std::size_t n,
                                              double scale = 1.0) {
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = gen.uniform(0.0, scale);
    ys[i] = gen.uniform(0.0, scale);
  }
  netdist::matrix w(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      w(i, j) = std::hypot(xs[i] - xs[j], ys[i] - ys[j]);
    }
  return netdist::make_network(std::move(w));
}

// Random valid correspondence: a random pair set patched up to coverage.
inline netdist::correspondence random_correspondence(netdist::rng& gen, std::size_t n,
                                                     std::size_t m) {
  netdist::correspondence r{n, m, {}};
  std::vector<char> row(n, 0), col(m, 0);
  const std::size_t draws = 1 + gen.below(n * m);
  for (std::size_t k = 0; k < draws; ++k) {
    const std::size_t i = gen.below(n), j = gen.below(m);
    r.pairs.emplace_back(i, j);
    row[i] = 1;
    col[j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!row[i]) {
      const std::size_t j = gen.below(m);
      r.pairs.emplace_back(i, j);
      col[j] = 1;
    }
  for (std::size_t j = 0; j < m; ++j)
    if (!col[j]) r.pairs.emplace_back(gen.below(n), j);
  std::ranges::sort(r.pairs);
  r.pairs.erase(std::unique(r.pairs.begin(), r.pairs.end()), r.pairs.end());
  return r;
}

}  // namespace testutil
