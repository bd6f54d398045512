#include "netdist/network.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace netdist {

matrix::matrix(std::initializer_list<std::initializer_list<double>> init) {
  rows = init.size();
  cols = rows == 0 ? 0 : init.begin()->size();
  data.reserve(rows * cols);
  for (const auto& row : init) {
    if (row.size() != cols) throw dimension_error("matrix literal has ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
}

network make_network(matrix weights, std::vector<std::string> labels) {
  if (weights.rows != weights.cols)
    throw dimension_error("network weights must be square, got " + std::to_string(weights.rows) +
                          "x" + std::to_string(weights.cols));
  if (weights.rows == 0) throw dimension_error("network needs at least one node");
  for (double v : weights.data)
    if (!std::isfinite(v)) throw validation_error("network weights must be finite");
  if (labels.empty()) {
    labels.reserve(weights.rows);
    for (std::size_t i = 0; i < weights.rows; ++i) labels.push_back("n" + std::to_string(i));
  } else if (labels.size() != weights.rows) {
    throw dimension_error("label count does not match weight matrix size");
  }
  return network{std::move(labels), std::move(weights)};
}

correspondence identity_correspondence(std::size_t n) {
  correspondence r{n, n, {}};
  r.pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.pairs.emplace_back(i, i);
  return r;
}

bool covers(const correspondence& r) {
  if (r.left == 0 || r.right == 0) return false;
  std::vector<char> row(r.left, 0), col(r.right, 0);
  for (auto [i, j] : r.pairs) {
    if (i >= r.left || j >= r.right) return false;
    row[i] = 1;
    col[j] = 1;
  }
  return std::ranges::all_of(row, [](char c) { return c != 0; }) &&
         std::ranges::all_of(col, [](char c) { return c != 0; });
}

void validate_correspondence(const correspondence& r) {
  for (auto [i, j] : r.pairs)
    if (i >= r.left || j >= r.right)
      throw dimension_error("correspondence pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside index ranges");
  if (!covers(r)) throw coverage_error("correspondence does not cover every row and column");
}

double distortion(const correspondence& r, const network& x, const network& y) {
  if (r.left != x.size() || r.right != y.size())
    throw dimension_error("correspondence extents do not match the networks");
  validate_correspondence(r);
  double worst = 0.0;
  for (auto [i, j] : r.pairs)
    for (auto [i2, j2] : r.pairs)
      worst = std::max(worst, std::abs(x.w(i, i2) - y.w(j, j2)));
  return worst;
}

correspondence compose(const correspondence& r, const correspondence& s) {
  if (r.right != s.left)
    throw dimension_error("inner dimensions of composed correspondences disagree");
  correspondence out{r.left, s.right, {}};
  for (auto [i, j] : r.pairs)
    for (auto [j2, k] : s.pairs)
      if (j == j2) out.pairs.emplace_back(i, k);
  std::ranges::sort(out.pairs);
  out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
  return out;
}

namespace {

void check_cell_guard(std::size_t n, std::size_t m, std::size_t guard) {
  if (n == 0 || m == 0) throw dimension_error("correspondence enumeration needs nonempty sides");
  if (n * m > guard)
    throw size_error("correspondence enumeration needs n*m <= " + std::to_string(guard) +
                     ", got " + std::to_string(n * m) + "; raise the guard deliberately or use a bound");
  if (n * m > 63) throw size_error("correspondence enumeration supports at most 63 cells");
}

// Cell (i, j) is bit i*m + j of the mask.
void fill_pairs(correspondence& r, std::uint64_t mask, std::size_t m) {
  r.pairs.clear();
  while (mask != 0) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(mask));
    r.pairs.emplace_back(bit / m, bit % m);
    mask &= mask - 1;
  }
}

}  // namespace

void for_each_correspondence(std::size_t n, std::size_t m,
                             const std::function<void(const correspondence&)>& fn,
                             std::size_t guard) {
  check_cell_guard(n, m, guard);
  std::vector<std::uint64_t> rowmask(n, 0), colmask(m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      rowmask[i] |= std::uint64_t{1} << (i * m + j);
      colmask[j] |= std::uint64_t{1} << (i * m + j);
    }
  correspondence r{n, m, {}};
  const std::uint64_t end = std::uint64_t{1} << (n * m);
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) ok = (mask & rowmask[i]) != 0;
    for (std::size_t j = 0; ok && j < m; ++j) ok = (mask & colmask[j]) != 0;
    if (!ok) continue;
    fill_pairs(r, mask, m);
    fn(r);
  }
}

void for_each_minimal_correspondence(std::size_t n, std::size_t m,
                                     const std::function<void(const correspondence&)>& fn,
                                     std::size_t guard) {
  check_cell_guard(n, m, guard);
  std::vector<std::uint64_t> rowmask(n, 0), colmask(m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      rowmask[i] |= std::uint64_t{1} << (i * m + j);
      colmask[j] |= std::uint64_t{1} << (i * m + j);
    }
  correspondence r{n, m, {}};
  const std::uint64_t end = std::uint64_t{1} << (n * m);
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) ok = (mask & rowmask[i]) != 0;
    for (std::size_t j = 0; ok && j < m; ++j) ok = (mask & colmask[j]) != 0;
    if (!ok) continue;
    // Minimal iff no pair is removable, i.e. no cell shares both its row and
    // its column with other cells of the mask.
    bool minimal = true;
    for (std::uint64_t rest = mask; minimal && rest != 0; rest &= rest - 1) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(rest));
      const std::uint64_t without = mask & ~(std::uint64_t{1} << bit);
      if ((without & rowmask[bit / m]) != 0 && (without & colmask[bit % m]) != 0) minimal = false;
    }
    if (!minimal) continue;
    fill_pairs(r, mask, m);
    fn(r);
  }
}

std::vector<correspondence> enumerate_correspondences(std::size_t n, std::size_t m,
                                                      std::size_t guard) {
  std::vector<correspondence> out;
  for_each_correspondence(n, m, [&](const correspondence& r) { out.push_back(r); }, guard);
  return out;
}

std::vector<correspondence> enumerate_minimal_correspondences(std::size_t n, std::size_t m,
                                                              std::size_t guard) {
  std::vector<correspondence> out;
  for_each_minimal_correspondence(n, m, [&](const correspondence& r) { out.push_back(r); }, guard);
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_bijections(std::size_t n, std::size_t guard) {
  if (n == 0) throw dimension_error("bijection enumeration needs at least one node");
  if (n > guard)
    throw size_error("bijection enumeration needs n <= " + std::to_string(guard) + ", got " +
                     std::to_string(n));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace netdist
