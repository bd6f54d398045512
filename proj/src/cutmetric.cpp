#include "netdist/cutmetric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace netdist {

weighted_graph make_weighted_graph(std::vector<double> node_weights, matrix edge_weights) {
  const std::size_t n = node_weights.size();
  if (edge_weights.rows != n || edge_weights.cols != n)
    throw dimension_error("edge matrix must be square and match the node count");
  if (n == 0) throw dimension_error("weighted graph needs at least one node");
  double sum = 0.0;
  for (double a : node_weights) {
    if (!(a >= 0) || !std::isfinite(a))
      throw validation_error("node weights must be finite and non-negative");
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw validation_error("node weights must sum to 1");
  for (double b : edge_weights.data)
    if (!std::isfinite(b)) throw validation_error("edge weights must be finite");
  return weighted_graph{std::move(node_weights), std::move(edge_weights)};
}

double e_g(const weighted_graph& g, const node_subset& s, const node_subset& t) {
  if (s.empty() || t.empty()) throw emptiness_error("subsets must be nonempty");
  const std::size_t n = g.node_weights.size();
  double sum = 0.0;
  for (std::size_t a : s) {
    if (a >= n) throw dimension_error("subset index out of range");
    for (std::size_t b : t) {
      if (b >= n) throw dimension_error("subset index out of range");
      sum += g.node_weights[a] * g.node_weights[b] * g.edge_weights(a, b);
    }
  }
  return sum;
}

namespace {

void check_subset_guard(std::size_t n, std::size_t guard) {
  if (n == 0) throw dimension_error("subset enumeration needs at least one node");
  if (n > guard)
    throw size_error("subset enumeration needs n <= " + std::to_string(guard) + ", got " +
                     std::to_string(n));
}

// For a fixed row subset S of D, the extreme column-subset sums are obtained
// by taking exactly the positive (resp. negative) column totals.
struct extreme_sums {
  double largest;   // max over column subsets, empty allowed
  double smallest;  // min over column subsets, empty allowed
};

extreme_sums column_extremes(const std::vector<double>& column_totals) {
  extreme_sums e{0.0, 0.0};
  for (double v : column_totals) {
    if (v > 0) e.largest += v;
    if (v < 0) e.smallest += v;
  }
  return e;
}

}  // namespace

double cut_norm(const matrix& a, std::size_t guard) {
  if (a.rows != a.cols) throw dimension_error("cut norm expects a square matrix");
  const std::size_t n = a.rows;
  check_subset_guard(n, guard);
  double best = 0.0;
  std::vector<double> totals(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::fill(totals.begin(), totals.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i))
        for (std::size_t j = 0; j < n; ++j) totals[j] += a(i, j);
    const extreme_sums e = column_extremes(totals);
    best = std::max({best, std::abs(e.largest), std::abs(e.smallest)});
  }
  return best / (static_cast<double>(n) * static_cast<double>(n));
}

double cut_delta_same_nodes(const weighted_graph& g, const weighted_graph& h,
                            std::size_t guard) {
  const std::size_t n = g.node_weights.size();
  if (h.node_weights.size() != n)
    throw dimension_error("cut distance on a shared node set needs equal node counts");
  check_subset_guard(n, guard);
  matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d(i, j) = g.node_weights[i] * g.node_weights[j] * g.edge_weights(i, j) -
                h.node_weights[i] * h.node_weights[j] * h.edge_weights(i, j);
  double best = 0.0;
  std::vector<double> totals(n);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::fill(totals.begin(), totals.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i))
        for (std::size_t j = 0; j < n; ++j) totals[j] += d(i, j);
    // Largest and smallest sums over nonempty column subsets.
    double largest = -std::numeric_limits<double>::infinity();
    double smallest = std::numeric_limits<double>::infinity();
    double pos = 0.0, neg = 0.0, top = -std::numeric_limits<double>::infinity(),
           bottom = std::numeric_limits<double>::infinity();
    for (double v : totals) {
      if (v > 0) pos += v;
      if (v < 0) neg += v;
      top = std::max(top, v);
      bottom = std::min(bottom, v);
    }
    largest = pos > 0 ? pos : top;      // all totals <= 0: best single column
    smallest = neg < 0 ? neg : bottom;  // all totals >= 0: best single column
    best = std::max({best, std::abs(largest), std::abs(smallest)});
  }
  return best;
}

void validate_metric(const matrix& d, double tol) {
  if (d.rows != d.cols) throw validation_error("metric matrix must be square");
  const std::size_t n = d.rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) throw validation_error("metric matrix must have zero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(d(i, j)) || d(i, j) < 0)
        throw validation_error("metric entries must be finite and non-negative");
      if (std::abs(d(i, j) - d(j, i)) > tol)
        throw validation_error("metric matrix must be symmetric");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d(i, j) > d(i, k) + d(k, j) + tol)
          throw validation_error("metric matrix violates the triangle inequality");
}

namespace {

double xi_eval_unchecked(xi_kind kind, const matrix& d, const node_subset& a,
                         const node_subset& b) {
  switch (kind) {
    case xi_kind::max: {
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t i : a)
        for (std::size_t j : b) worst = std::max(worst, d(i, j));
      return worst;
    }
    case xi_kind::min: {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i : a)
        for (std::size_t j : b) best = std::min(best, d(i, j));
      return best;
    }
    case xi_kind::hausdorff: {
      double ab = 0.0;
      for (std::size_t i : a) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j : b) nearest = std::min(nearest, d(i, j));
        ab = std::max(ab, nearest);
      }
      double ba = 0.0;
      for (std::size_t j : b) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t i : a) nearest = std::min(nearest, d(j, i));
        ba = std::max(ba, nearest);
      }
      return std::max(ab, ba);
    }
  }
  throw parameter_error("unknown xi kind");
}

}  // namespace

double xi_eval(xi_kind kind, const matrix& d, const node_subset& a, const node_subset& b) {
  if (a.empty() || b.empty()) throw emptiness_error("subsets must be nonempty");
  validate_metric(d);
  for (std::size_t i : a)
    if (i >= d.rows) throw dimension_error("subset index out of range");
  for (std::size_t j : b)
    if (j >= d.rows) throw dimension_error("subset index out of range");
  return xi_eval_unchecked(kind, d, a, b);
}

namespace {

// All xi values between nonempty node subsets, indexed by bitmask. Sizes here
// are tiny (delta_box guards at 9 cells), so the table is cheap and turns the
// 4^|R| subset-pair loop into table lookups.
std::vector<double> xi_table(xi_kind kind, const matrix& d) {
  const std::size_t n = d.rows;
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> table(count * count, 0.0);
  node_subset a, b;
  for (std::size_t ma = 1; ma < count; ++ma) {
    a.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (ma & (std::size_t{1} << i)) a.push_back(i);
    for (std::size_t mb = 1; mb < count; ++mb) {
      b.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mb & (std::size_t{1} << i)) b.push_back(i);
      table[ma * count + mb] = xi_eval_unchecked(kind, d, a, b);
    }
  }
  return table;
}

double dis_box_unchecked(const correspondence& r, xi_kind kind, const std::vector<double>& tx,
                         const std::vector<double>& ty, std::size_t nx, std::size_t ny) {
  (void)kind;
  const std::size_t size = r.pairs.size();
  const std::size_t count = std::size_t{1} << size;
  // Project every subset of R to node masks on both sides.
  std::vector<std::uint32_t> left(count, 0), right(count, 0);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const std::size_t low = static_cast<std::size_t>(mask & (~mask + 1));
    const std::size_t idx = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask ^ low;
    left[mask] = left[rest] | (std::uint32_t{1} << r.pairs[idx].first);
    right[mask] = right[rest] | (std::uint32_t{1} << r.pairs[idx].second);
  }
  const std::size_t cx = std::size_t{1} << nx;
  const std::size_t cy = std::size_t{1} << ny;
  double worst = 0.0;
  for (std::size_t t = 1; t < count; ++t)
    for (std::size_t s = 1; s < count; ++s) {
      const double vx = tx[left[t] * cx + left[s]];
      const double vy = ty[right[t] * cy + right[s]];
      worst = std::max(worst, std::abs(vx - vy));
    }
  return worst;
}

}  // namespace

double dis_box(const correspondence& r, const network& x, const network& y, xi_kind kind,
               std::size_t guard) {
  if (r.left != x.size() || r.right != y.size())
    throw dimension_error("correspondence extents do not match the networks");
  validate_correspondence(r);
  if (r.pairs.size() > guard)
    throw size_error("dis_box needs |R| <= " + std::to_string(guard) + ", got " +
                     std::to_string(r.pairs.size()));
  validate_metric(x.weights);
  validate_metric(y.weights);
  const auto tx = xi_table(kind, x.weights);
  const auto ty = xi_table(kind, y.weights);
  return dis_box_unchecked(r, kind, tx, ty, x.size(), y.size());
}

double delta_box(const network& x, const network& y, xi_kind kind, std::size_t cell_guard,
                 std::size_t pair_guard) {
  validate_metric(x.weights);
  validate_metric(y.weights);
  const auto tx = xi_table(kind, x.weights);
  const auto ty = xi_table(kind, y.weights);
  double best = std::numeric_limits<double>::infinity();
  for_each_correspondence(
      x.size(), y.size(),
      [&](const correspondence& r) {
        if (r.pairs.size() > pair_guard)
          throw size_error("delta_box met a correspondence larger than the dis_box guard");
        best = std::min(best, dis_box_unchecked(r, kind, tx, ty, x.size(), y.size()));
      },
      cell_guard);
  return 0.5 * best;
}

}  // namespace netdist
