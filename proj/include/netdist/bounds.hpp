#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "netdist/invariants.hpp"
#include "netdist/network.hpp"

namespace netdist {

enum class bound_method {
  diam,
  trace,
  out,
  in,
  m_out,
  m_in,
  spec_global,
  spec_local_out,
  spec_local_in,
  spec_local_both,
};

inline constexpr bound_method all_bound_methods[] = {
    bound_method::diam,           bound_method::trace,          bound_method::out,
    bound_method::in,             bound_method::m_out,          bound_method::m_in,
    bound_method::spec_global,    bound_method::spec_local_out, bound_method::spec_local_in,
    bound_method::spec_local_both,
};

std::string_view to_string(bound_method m);
std::optional<bound_method> bound_method_from_string(std::string_view name);

enum class spectra_mode { out, in, both };

struct bound_report {
  bound_method method;
  double value;  // lower bound on the network distance, >= 0
};

// Half the absolute difference of a scalar invariant; which must be one of
// diam, m_out, m_in.
double lb_scalar(const network& x, const network& y, bound_method which);

// Half the Hausdorff distance between invariant images; which must be one of
// trace, out, in, spec_global.
double lb_hausdorff(const network& x, const network& y, bound_method which);

// Entry (i, j) is the Hausdorff distance between the chosen local spectra of
// node i in x and node j in y; mode both takes the max of the out and in
// entries.
matrix local_spectra_cost(const network& x, const network& y, spectra_mode mode);

// Smallest value c among the entries of the cost matrix such that the binary
// relation {(i,j) : C(i,j) <= c} covers every row and column. Equals the min
// over all correspondences of the max matched entry. The bisection variant
// must and does return the identical value.
double minmax_match(const matrix& cost, bool use_bisection = false);

// Half of minmax_match over local_spectra_cost.
double lb_local_spectra(const network& x, const network& y, spectra_mode mode);

// Evaluates any of the ten methods.
double lower_bound(const network& x, const network& y, bound_method method);

// Every method, sorted by value descending (ties by method order); the head
// is the tightest available certificate.
std::vector<bound_report> best_lower_bound(const network& x, const network& y);

}  // namespace netdist
