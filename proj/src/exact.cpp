#include "netdist/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace netdist {

namespace {

// Distortion with early exit once the running max reaches the best known
// minimum; exactness is unaffected because only larger values are cut off.
double distortion_capped(const correspondence& r, const network& x, const network& y,
                         double cap) {
  double worst = 0.0;
  for (auto [i, j] : r.pairs) {
    for (auto [i2, j2] : r.pairs) {
      worst = std::max(worst, std::abs(x.w(i, i2) - y.w(j, j2)));
      if (worst >= cap) return worst;
    }
  }
  return worst;
}

}  // namespace

double dn_exact(const network& x, const network& y, std::size_t guard) {
  double best = std::numeric_limits<double>::infinity();
  for_each_minimal_correspondence(
      x.size(), y.size(),
      [&](const correspondence& r) { best = std::min(best, distortion_capped(r, x, y, best)); },
      guard);
  return 0.5 * best;
}

double dnhat_exact(const network& x, const network& y, std::size_t guard) {
  if (x.size() != y.size())
    throw cardinality_error("bijection distance needs equal node counts, got " +
                            std::to_string(x.size()) + " and " + std::to_string(y.size()));
  const std::size_t n = x.size();
  if (n > guard)
    throw size_error("bijection distance needs n <= " + std::to_string(guard) + ", got " +
                     std::to_string(n));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < n && worst < best; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(x.w(i, j) - y.w(perm[i], perm[j])));
        if (worst >= best) break;
      }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return 0.5 * best;
}

double dn_two_node_closed_form(const network& x, const network& y) {
  if (x.size() != 2 || y.size() != 2)
    throw dimension_error("closed form is defined for two-node networks only");
  const double a = x.w(0, 0), d = x.w(0, 1), b = x.w(1, 0), g = x.w(1, 1);
  const double a2 = y.w(0, 0), d2 = y.w(0, 1), b2 = y.w(1, 0), g2 = y.w(1, 1);
  const double straight = std::max({std::abs(a - a2), std::abs(b - b2), std::abs(d - d2),
                                    std::abs(g - g2)});
  const double swapped = std::max({std::abs(a - g2), std::abs(g - a2), std::abs(d - b2),
                                   std::abs(b - d2)});
  return 0.5 * std::min(straight, swapped);
}

bool is_strongly_isomorphic(const network& x, const network& y, double tol, std::size_t guard) {
  if (x.size() != y.size()) return false;
  const std::size_t n = x.size();
  if (n > guard)
    throw size_error("isomorphism search needs n <= " + std::to_string(guard) + ", got " +
                     std::to_string(n));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    bool match = true;
    for (std::size_t i = 0; match && i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (std::abs(x.w(i, j) - y.w(perm[i], perm[j])) > tol) {
          match = false;
          break;
        }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_weakly_isomorphic(const network& x, const network& y, double tol, std::size_t guard) {
  return dn_exact(x, y, guard) <= tol;
}

}  // namespace netdist
