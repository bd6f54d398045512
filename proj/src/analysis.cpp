#include "netdist/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "netdist/exact.hpp"
#include "netdist/invariants.hpp"

namespace netdist {

network normalize_by_diameter(const network& x) {
  const double d = diam(x);
  if (d == 0.0) throw parameter_error("cannot normalize a network with zero diameter");
  matrix w = x.weights;
  for (double& v : w.data) v /= d;
  return network{x.labels, std::move(w)};
}

matrix_method matrix_method_dn() { return matrix_method{std::nullopt, false}; }

matrix_method matrix_method_dnhat() { return matrix_method{std::nullopt, true}; }

matrix_method matrix_method_bound(bound_method m) { return matrix_method{m, false}; }

std::optional<matrix_method> matrix_method_from_string(std::string_view name) {
  if (name == "dn") return matrix_method_dn();
  if (name == "dnhat") return matrix_method_dnhat();
  if (auto b = bound_method_from_string(name)) return matrix_method_bound(*b);
  return std::nullopt;
}

std::string matrix_method_name(const matrix_method& m) {
  if (m.bound) return std::string(to_string(*m.bound));
  return m.exact_bijective ? "dnhat" : "dn";
}

std::vector<std::string> matrix_method_names() {
  std::vector<std::string> names;
  for (bound_method m : all_bound_methods) names.emplace_back(to_string(m));
  names.emplace_back("dn");
  names.emplace_back("dnhat");
  return names;
}

void validate_distance_matrix(const distance_matrix& d) {
  const std::size_t n = d.labels.size();
  if (d.values.rows != n || d.values.cols != n)
    throw validation_error("distance matrix shape does not match its labels");
  for (std::size_t i = 0; i < n; ++i) {
    if (d.values(i, i) != 0.0) throw validation_error("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d.values(i, j);
      if (!std::isfinite(v) || v < 0)
        throw validation_error("distances must be finite and non-negative");
      if (std::abs(v - d.values(j, i)) > 1e-12)
        throw validation_error("distance matrix must be symmetric");
    }
  }
}

namespace {

double pair_value(const network& a, const network& b, const matrix_method& method,
                  std::size_t guard) {
  if (method.bound) return lower_bound(a, b, *method.bound);
  if (method.exact_bijective) return dnhat_exact(a, b);
  return dn_exact(a, b, guard);
}

}  // namespace

distance_matrix compute_distance_matrix(const std::vector<network>& dataset,
                                        const std::vector<std::string>& labels,
                                        const matrix_method& method, bool normalize,
                                        unsigned jobs, std::size_t guard) {
  if (dataset.size() < 2) throw parameter_error("distance matrix needs at least two networks");
  if (labels.size() != dataset.size())
    throw dimension_error("label count does not match dataset size");
  std::vector<network> items;
  items.reserve(dataset.size());
  for (const network& x : dataset) items.push_back(normalize ? normalize_by_diameter(x) : x);

  const std::size_t n = items.size();
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) tasks.emplace_back(i, j);

  matrix values(n, n, 0.0);
  std::exception_ptr failure;
  if (jobs <= 1 || tasks.size() < 2) {
    for (auto [i, j] : tasks) {
      const double v = pair_value(items[i], items[j], method, guard);
      values(i, j) = v;
      values(j, i) = v;
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    std::mutex failure_lock;
    auto worker = [&] {
      while (true) {
        const std::size_t k = cursor.fetch_add(1);
        if (k >= tasks.size()) return;
        auto [i, j] = tasks[k];
        try {
          const double v = pair_value(items[i], items[j], method, guard);
          values(i, j) = v;
          values(j, i) = v;
        } catch (...) {
          const std::scoped_lock hold(failure_lock);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  return distance_matrix{labels, std::move(values)};
}

dendrogram single_linkage(const distance_matrix& d) {
  validate_distance_matrix(d);
  const std::size_t n = d.labels.size();
  if (n < 2) throw size_error("clustering needs at least two items");

  // cluster id -> member leaves; ids above n-1 are merge products.
  std::vector<std::vector<std::size_t>> members(n);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) {
    members[i] = {i};
    active.push_back(i);
  }
  dendrogram tree{d.labels, {}};
  while (active.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::pair<std::size_t, std::size_t> pick{0, 0};
    for (std::size_t ai = 0; ai < active.size(); ++ai)
      for (std::size_t bi = ai + 1; bi < active.size(); ++bi) {
        const std::size_t a = active[ai], b = active[bi];
        double link = std::numeric_limits<double>::infinity();
        for (std::size_t u : members[a])
          for (std::size_t v : members[b]) link = std::min(link, d.values(u, v));
        const std::pair<std::size_t, std::size_t> id{std::min(a, b), std::max(a, b)};
        if (link < best || (link == best && id < pick)) {
          best = link;
          pick = id;
        }
      }
    auto [a, b] = pick;
    members.push_back(members[a]);
    auto& merged = members.back();
    merged.insert(merged.end(), members[b].begin(), members[b].end());
    std::erase(active, a);
    std::erase(active, b);
    active.push_back(members.size() - 1);
    tree.merges.push_back({a, b, best});
  }
  return tree;
}

std::vector<std::size_t> cut_clusters(const dendrogram& tree, std::size_t k) {
  const std::size_t n = tree.labels.size();
  if (k < 1 || k > n) throw parameter_error("cluster count must be between 1 and the leaf count");
  // Apply the first n - k merges with a union-find over cluster ids.
  std::vector<std::size_t> parent(n + tree.merges.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t m = 0; m < n - k; ++m) {
    const auto& ev = tree.merges[m];
    const std::size_t id = n + m;
    parent[find(ev.a)] = id;
    parent[find(ev.b)] = id;
  }
  std::vector<std::size_t> label(parent.size(), 0);
  std::vector<std::size_t> roots;
  std::vector<std::size_t> out(n);
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    const std::size_t root = find(leaf);
    auto it = std::find(roots.begin(), roots.end(), root);
    if (it == roots.end()) {
      roots.push_back(root);
      out[leaf] = roots.size() - 1;
    } else {
      out[leaf] = static_cast<std::size_t>(it - roots.begin());
    }
  }
  return out;
}

double cluster_purity(const dendrogram& tree, const std::vector<std::string>& leaf_classes,
                      std::size_t k) {
  const std::size_t n = tree.labels.size();
  if (leaf_classes.size() != n)
    throw dimension_error("class labels must match the leaf count");
  if (k < 2 || k > n) throw parameter_error("cluster count must be between 2 and the leaf count");
  const std::vector<std::size_t> assignment = cut_clusters(tree, k);
  std::size_t correct = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::pair<std::string, std::size_t>> counts;
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (assignment[leaf] != c) continue;
      auto it = std::find_if(counts.begin(), counts.end(),
                             [&](const auto& e) { return e.first == leaf_classes[leaf]; });
      if (it == counts.end())
        counts.emplace_back(leaf_classes[leaf], 1);
      else
        ++it->second;
    }
    std::size_t majority = 0;
    for (const auto& [cls, count] : counts) majority = std::max(majority, count);
    correct += majority;
  }
  return static_cast<double>(correct) / static_cast<double>(n);
}

}  // namespace netdist
