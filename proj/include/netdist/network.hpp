#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netdist {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input shapes disagree (non-square matrix, mismatched sizes, bad index).
struct dimension_error : error {
  using error::error;
};

// A relation fails to cover every row and every column.
struct coverage_error : error {
  using error::error;
};

// An enumeration guard was exceeded; the message names the guard.
struct size_error : error {
  using error::error;
};

// Operation requires equal node counts.
struct cardinality_error : error {
  using error::error;
};

// A set argument that must be nonempty is empty.
struct emptiness_error : error {
  using error::error;
};

// A parameter is outside its documented range.
struct parameter_error : error {
  using error::error;
};

// Data fails a semantic check (non-finite weight, non-metric matrix, ...).
struct validation_error : error {
  using error::error;
};

// A simulation reached a state it cannot step out of.
struct simulation_error : error {
  using error::error;
};

// Dense row-major matrix of doubles.
struct matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  matrix() = default;
  matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}
  matrix(std::initializer_list<std::initializer_list<double>> init);

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool operator==(const matrix&) const = default;
};

// A finite directed weighted network: weights(i, j) is the weight of the
// ordered pair (node i, node j). Weights are arbitrary finite reals; no
// symmetry, non-negativity, or zero-diagonal assumption. Labels are carried
// for I/O and reporting only.
struct network {
  std::vector<std::string> labels;
  matrix weights;

  std::size_t size() const { return labels.size(); }
  double w(std::size_t i, std::size_t j) const { return weights(i, j); }
};

// Validates squareness and finiteness; generates labels "n0", "n1", ... when
// none are given. Throws dimension_error or validation_error.
network make_network(matrix weights, std::vector<std::string> labels = {});

// A relation between index ranges [0, left) and [0, right) whose pairs cover
// every left index and every right index.
struct correspondence {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  bool operator==(const correspondence&) const = default;
};

correspondence identity_correspondence(std::size_t n);

// True iff every left index and every right index appears in some pair.
bool covers(const correspondence& r);

// Throws dimension_error for out-of-range indices, coverage_error otherwise.
void validate_correspondence(const correspondence& r);

// max over pairs of pairs ((i,j),(i',j')) in R x R of |w_X(i,i') - w_Y(j,j')|.
double distortion(const correspondence& r, const network& x, const network& y);

// {(i,k) : exists j with (i,j) in R and (j,k) in S}.
correspondence compose(const correspondence& r, const correspondence& s);

inline constexpr std::size_t default_cell_guard = 16;      // n*m for correspondence enumeration
inline constexpr std::size_t default_bijection_guard = 8;  // node count for permutation enumeration

// Visits every correspondence between [0,n) and [0,m) exactly once. The
// visited object is reused between calls; copy it if you need to keep it.
void for_each_correspondence(std::size_t n, std::size_t m,
                             const std::function<void(const correspondence&)>& fn,
                             std::size_t guard = default_cell_guard);

// Visits only correspondences from which no single pair can be removed
// without breaking coverage. Minimizing distortion over these equals
// minimizing over all correspondences.
void for_each_minimal_correspondence(std::size_t n, std::size_t m,
                                     const std::function<void(const correspondence&)>& fn,
                                     std::size_t guard = default_cell_guard);

std::vector<correspondence> enumerate_correspondences(std::size_t n, std::size_t m,
                                                      std::size_t guard = default_cell_guard);

std::vector<correspondence> enumerate_minimal_correspondences(std::size_t n, std::size_t m,
                                                              std::size_t guard = default_cell_guard);

// All permutations of [0, n).
std::vector<std::vector<std::size_t>> enumerate_bijections(std::size_t n,
                                                           std::size_t guard = default_bijection_guard);

}  // namespace netdist
