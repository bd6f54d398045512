#pragma once

#include <cstddef>
#include <vector>

#include "netdist/network.hpp"

namespace netdist {

// Graph with a probability weight per node and arbitrary real edge weights.
struct weighted_graph {
  std::vector<double> node_weights;  // alpha_i >= 0, summing to 1
  matrix edge_weights;               // beta, n x n
};

// Validates node weights (non-negative, sum 1 within 1e-12) and shape.
weighted_graph make_weighted_graph(std::vector<double> node_weights, matrix edge_weights);

using node_subset = std::vector<std::size_t>;

// Sum over s in S, t in T of alpha_s * alpha_t * beta_st; S, T nonempty.
double e_g(const weighted_graph& g, const node_subset& s, const node_subset& t);

inline constexpr std::size_t default_subset_guard = 12;    // node count for subset enumeration
inline constexpr std::size_t default_dis_box_guard = 10;   // correspondence size for dis_box

// (1/n^2) * max over all subset pairs S, T (empty included) of |sum_{S x T} A|.
double cut_norm(const matrix& a, std::size_t guard = default_subset_guard);

// max over nonempty S, T of |e_G(S,T) - e_G'(S,T)| for graphs sharing a node set.
double cut_delta_same_nodes(const weighted_graph& g, const weighted_graph& h,
                            std::size_t guard = default_subset_guard);

enum class xi_kind { hausdorff, max, min };

// Throws validation_error unless d is square, symmetric, non-negative, zero
// on the diagonal, and satisfies the triangle inequality within tol.
void validate_metric(const matrix& d, double tol = 1e-9);

// Hausdorff / max / min pairwise distance between two index subsets under a
// validated metric matrix.
double xi_eval(xi_kind kind, const matrix& d, const node_subset& a, const node_subset& b);

// max over nonempty subset pairs T, S of the correspondence of
// |Xi(d_X)(left(T), left(S)) - Xi(d_Y)(right(T), right(S))|. Both networks
// must carry metric weight matrices.
double dis_box(const correspondence& r, const network& x, const network& y, xi_kind kind,
               std::size_t guard = default_dis_box_guard);

// Half the minimum of dis_box over all correspondences.
double delta_box(const network& x, const network& y, xi_kind kind,
                 std::size_t cell_guard = 9, std::size_t pair_guard = default_dis_box_guard);

}  // namespace netdist
