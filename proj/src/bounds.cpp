#include "netdist/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace netdist {

std::string_view to_string(bound_method m) {
  switch (m) {
    case bound_method::diam: return "diam";
    case bound_method::trace: return "trace";
    case bound_method::out: return "out";
    case bound_method::in: return "in";
    case bound_method::m_out: return "m_out";
    case bound_method::m_in: return "m_in";
    case bound_method::spec_global: return "spec_global";
    case bound_method::spec_local_out: return "spec_local_out";
    case bound_method::spec_local_in: return "spec_local_in";
    case bound_method::spec_local_both: return "spec_local_both";
  }
  return "?";
}

std::optional<bound_method> bound_method_from_string(std::string_view name) {
  for (bound_method m : all_bound_methods)
    if (to_string(m) == name) return m;
  return std::nullopt;
}

double lb_scalar(const network& x, const network& y, bound_method which) {
  double vx = 0, vy = 0;
  switch (which) {
    case bound_method::diam: vx = diam(x); vy = diam(y); break;
    case bound_method::m_out: vx = m_out(x); vy = m_out(y); break;
    case bound_method::m_in: vx = m_in(x); vy = m_in(y); break;
    default: throw parameter_error("lb_scalar expects diam, m_out, or m_in");
  }
  return 0.5 * std::abs(vx - vy);
}

double lb_hausdorff(const network& x, const network& y, bound_method which) {
  real_set a, b;
  switch (which) {
    case bound_method::trace: a = trace_set(x); b = trace_set(y); break;
    case bound_method::out: a = out_set(x); b = out_set(y); break;
    case bound_method::in: a = in_set(x); b = in_set(y); break;
    case bound_method::spec_global: a = spec_global(x); b = spec_global(y); break;
    default: throw parameter_error("lb_hausdorff expects trace, out, in, or spec_global");
  }
  return 0.5 * hausdorff_reals(a, b);
}

matrix local_spectra_cost(const network& x, const network& y, spectra_mode mode) {
  const std::size_t n = x.size(), m = y.size();
  matrix cost(n, m);
  std::vector<real_set> xo(n), xi(n), yo(m), yi(m);
  for (std::size_t i = 0; i < n; ++i) {
    if (mode != spectra_mode::in) xo[i] = spec_out_local(x, i);
    if (mode != spectra_mode::out) xi[i] = spec_in_local(x, i);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (mode != spectra_mode::in) yo[j] = spec_out_local(y, j);
    if (mode != spectra_mode::out) yi[j] = spec_in_local(y, j);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double c = 0.0;
      if (mode != spectra_mode::in) c = std::max(c, hausdorff_reals(xo[i], yo[j]));
      if (mode != spectra_mode::out) c = std::max(c, hausdorff_reals(xi[i], yi[j]));
      cost(i, j) = c;
    }
  return cost;
}

namespace {

// Row and column coverage of the relation {cost <= c}.
bool threshold_covers(const matrix& cost, double c) {
  std::vector<char> row(cost.rows, 0), col(cost.cols, 0);
  for (std::size_t i = 0; i < cost.rows; ++i)
    for (std::size_t j = 0; j < cost.cols; ++j)
      if (cost(i, j) <= c) {
        row[i] = 1;
        col[j] = 1;
      }
  return std::ranges::all_of(row, [](char v) { return v != 0; }) &&
         std::ranges::all_of(col, [](char v) { return v != 0; });
}

}  // namespace

double minmax_match(const matrix& cost, bool use_bisection) {
  if (cost.rows == 0 || cost.cols == 0) throw emptiness_error("cost matrix is empty");
  for (double v : cost.data)
    if (!(v >= 0) || !std::isfinite(v))
      throw validation_error("cost matrix entries must be finite and non-negative");
  std::vector<double> values(cost.data);
  std::ranges::sort(values);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (!use_bisection) {
    for (double c : values)
      if (threshold_covers(cost, c)) return c;
    return values.back();  // unreachable: the max entry always covers
  }
  // Invariant: values[hi] covers, indices <= lo do not.
  std::size_t lo = 0, hi = values.size() - 1;
  if (threshold_covers(cost, values[0])) return values[0];
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (threshold_covers(cost, values[mid]))
      hi = mid;
    else
      lo = mid;
  }
  return values[hi];
}

double lb_local_spectra(const network& x, const network& y, spectra_mode mode) {
  return 0.5 * minmax_match(local_spectra_cost(x, y, mode));
}

double lower_bound(const network& x, const network& y, bound_method method) {
  switch (method) {
    case bound_method::diam:
    case bound_method::m_out:
    case bound_method::m_in: return lb_scalar(x, y, method);
    case bound_method::trace:
    case bound_method::out:
    case bound_method::in:
    case bound_method::spec_global: return lb_hausdorff(x, y, method);
    case bound_method::spec_local_out: return lb_local_spectra(x, y, spectra_mode::out);
    case bound_method::spec_local_in: return lb_local_spectra(x, y, spectra_mode::in);
    case bound_method::spec_local_both: return lb_local_spectra(x, y, spectra_mode::both);
  }
  throw parameter_error("unknown bound method");
}

std::vector<bound_report> best_lower_bound(const network& x, const network& y) {
  std::vector<bound_report> reports;
  reports.reserve(std::size(all_bound_methods));
  for (bound_method m : all_bound_methods) reports.push_back({m, lower_bound(x, y, m)});
  std::ranges::stable_sort(reports, [](const bound_report& a, const bound_report& b) {
    return a.value > b.value;
  });
  return reports;
}

}  // namespace netdist
