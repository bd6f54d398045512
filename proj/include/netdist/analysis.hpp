#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netdist/bounds.hpp"
#include "netdist/network.hpp"

namespace netdist {

// Divides all weights by the diameter, making the result have diameter 1.
// Throws parameter_error on zero-diameter input.
network normalize_by_diameter(const network& x);

// Pairwise value selector: a lower bound method or an exact distance.
struct matrix_method {
  std::optional<bound_method> bound;  // set for bound methods
  bool exact_bijective = false;       // dn vs dnhat when bound is empty
};

matrix_method matrix_method_dn();
matrix_method matrix_method_dnhat();
matrix_method matrix_method_bound(bound_method m);
std::optional<matrix_method> matrix_method_from_string(std::string_view name);
std::string matrix_method_name(const matrix_method& m);
std::vector<std::string> matrix_method_names();

struct distance_matrix {
  std::vector<std::string> labels;
  matrix values;  // symmetric, zero diagonal
};

// Throws validation_error unless symmetric within 1e-12 with an exactly zero
// diagonal and non-negative entries.
void validate_distance_matrix(const distance_matrix& d);

// Entry (i, j) is the selected value for the pair; each unordered pair is
// computed once and mirrored, so the matrix is exactly symmetric. With jobs
// > 1 the pairs are evaluated on a thread pool; the result is bit-identical
// to the serial result because every entry is an independent pure call.
distance_matrix compute_distance_matrix(const std::vector<network>& dataset,
                                        const std::vector<std::string>& labels,
                                        const matrix_method& method, bool normalize,
                                        unsigned jobs = 1,
                                        std::size_t guard = default_cell_guard);

struct dendrogram {
  struct merge_event {
    std::size_t a;  // cluster ids: leaves are 0..k-1, merge i creates k+i
    std::size_t b;
    double height;
  };
  std::vector<std::string> labels;
  std::vector<merge_event> merges;  // heights non-decreasing, k-1 entries
};

// Single-linkage agglomeration. Ties are broken by the lexicographically
// smallest (id-a, id-b) pair, so the result is deterministic.
dendrogram single_linkage(const distance_matrix& d);

// Leaf -> cluster index in [0, k) after undoing the last k-1 merges.
std::vector<std::size_t> cut_clusters(const dendrogram& tree, std::size_t k);

// Fraction of leaves whose class matches the majority class of their cluster
// after cutting into k clusters.
double cluster_purity(const dendrogram& tree, const std::vector<std::string>& leaf_classes,
                      std::size_t k);

}  // namespace netdist
