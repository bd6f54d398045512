#include "netdist/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace netdist {

real_set make_real_set(std::vector<double> values) {
  if (values.empty()) throw emptiness_error("real set cannot be empty");
  std::ranges::sort(values);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return real_set{std::move(values)};
}

namespace {

// sup over a in A of dist(a, B), walking both sorted lists once.
double directed_hausdorff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  std::size_t j = 0;
  for (double v : a) {
    while (j + 1 < b.size() && b[j + 1] <= v) ++j;
    double best = std::abs(v - b[j]);
    if (j + 1 < b.size()) best = std::min(best, std::abs(b[j + 1] - v));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff_reals(const real_set& a, const real_set& b) {
  if (a.values.empty() || b.values.empty())
    throw emptiness_error("hausdorff distance needs nonempty sets");
  return std::max(directed_hausdorff(a.values, b.values),
                  directed_hausdorff(b.values, a.values));
}

double diam(const network& x) {
  double best = 0.0;
  for (double v : x.weights.data) best = std::max(best, std::abs(v));
  return best;
}

real_set trace_set(const network& x) {
  std::vector<double> vals;
  vals.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) vals.push_back(x.w(i, i));
  return make_real_set(std::move(vals));
}

std::vector<double> out_values(const network& x) {
  std::vector<double> vals(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) best = std::max(best, std::abs(x.w(i, j)));
    vals[i] = best;
  }
  return vals;
}

std::vector<double> in_values(const network& x) {
  std::vector<double> vals(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) best = std::max(best, std::abs(x.w(j, i)));
    vals[i] = best;
  }
  return vals;
}

real_set out_set(const network& x) { return make_real_set(out_values(x)); }

real_set in_set(const network& x) { return make_real_set(in_values(x)); }

double m_out(const network& x) { return std::ranges::min(out_values(x)); }

double m_in(const network& x) { return std::ranges::min(in_values(x)); }

real_set spec_global(const network& x) {
  return make_real_set(std::vector<double>(x.weights.data));
}

real_set spec_out_local(const network& x, std::size_t i) {
  if (i >= x.size()) throw dimension_error("node index out of range");
  std::vector<double> vals;
  vals.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) vals.push_back(x.w(i, j));
  return make_real_set(std::move(vals));
}

real_set spec_in_local(const network& x, std::size_t i) {
  if (i >= x.size()) throw dimension_error("node index out of range");
  std::vector<double> vals;
  vals.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) vals.push_back(x.w(j, i));
  return make_real_set(std::move(vals));
}

namespace {

std::size_t checked_tuple_count(std::size_t n, std::size_t order, std::size_t guard) {
  if (order == 0) throw parameter_error("motif order must be at least 1");
  std::size_t count = 1;
  for (std::size_t k = 0; k < order; ++k) {
    if (count > guard / n)
      throw size_error("motif enumeration needs |X|^n <= " + std::to_string(guard) +
                       "; use a smaller order");
    count *= n;
  }
  return count;
}

}  // namespace

motif_set motifs(const network& x, std::size_t order, std::size_t guard) {
  checked_tuple_count(x.size(), order, guard);
  std::vector<std::size_t> tuple(order, 0);
  std::vector<std::vector<double>> mats;
  std::vector<double> flat(order * order);
  while (true) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) flat[a * order + b] = x.w(tuple[a], tuple[b]);
    mats.push_back(flat);
    std::size_t pos = order;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < x.size()) break;
      tuple[pos] = 0;
      if (pos == 0) {
        std::ranges::sort(mats);
        mats.erase(std::unique(mats.begin(), mats.end()), mats.end());
        return motif_set{order, std::move(mats)};
      }
    }
  }
}

namespace {

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

double directed_motif(const motif_set& a, const motif_set& b) {
  double worst = 0.0;
  for (const auto& ma : a.matrices) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& mb : b.matrices) best = std::min(best, linf(ma, mb));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double motif_distance(const network& x, const network& y, std::size_t order, std::size_t guard) {
  const motif_set mx = motifs(x, order, guard);
  const motif_set my = motifs(y, order, guard);
  return std::max(directed_motif(mx, my), directed_motif(my, mx));
}

}  // namespace netdist
