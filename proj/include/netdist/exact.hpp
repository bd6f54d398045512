#pragma once

#include "netdist/network.hpp"

namespace netdist {

// Half the minimum distortion over all correspondences, computed by
// exhausting the minimal correspondences (minimizing over those is
// equivalent, because distortion only grows when pairs are added).
double dn_exact(const network& x, const network& y, std::size_t guard = default_cell_guard);

// Half the minimum over bijections of the max weight discrepancy. Defined
// only for equal node counts; always >= dn_exact.
double dnhat_exact(const network& x, const network& y,
                   std::size_t guard = default_bijection_guard);

// Closed form for two-node networks, where the optimum is attained by one of
// the two bijections.
double dn_two_node_closed_form(const network& x, const network& y);

// True iff some relabeling of x matches y entrywise within tol.
bool is_strongly_isomorphic(const network& x, const network& y, double tol,
                            std::size_t guard = default_bijection_guard);

// True iff dn_exact(x, y) <= tol. Strictly weaker than strong isomorphism.
bool is_weakly_isomorphic(const network& x, const network& y, double tol,
                          std::size_t guard = default_cell_guard);

}  // namespace netdist
