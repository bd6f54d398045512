#pragma once

#include <cstddef>
#include <vector>

#include "netdist/network.hpp"

namespace netdist {

// Finite set of reals, kept sorted and deduplicated. Hausdorff comparisons
// cannot see multiplicity, so dropping duplicates is lossless.
struct real_set {
  std::vector<double> values;

  bool operator==(const real_set&) const = default;
};

// Sorts and deduplicates; throws emptiness_error on empty input.
real_set make_real_set(std::vector<double> values);

// max(sup_a inf_b |a-b|, sup_b inf_a |a-b|); linear after sorting.
double hausdorff_reals(const real_set& a, const real_set& b);

double diam(const network& x);  // max |w(i,j)|

real_set trace_set(const network& x);  // {w(i,i)}, signed
real_set out_set(const network& x);    // {max_j |w(i,j)| : i}
real_set in_set(const network& x);     // {max_j |w(j,i)| : i}

// Per-node values before deduplication, in node order.
std::vector<double> out_values(const network& x);
std::vector<double> in_values(const network& x);

double m_out(const network& x);  // min of out_values
double m_in(const network& x);   // min of in_values

real_set spec_global(const network& x);                        // all weight values, signed
real_set spec_out_local(const network& x, std::size_t i);      // {w(i,j) : j}
real_set spec_in_local(const network& x, std::size_t i);       // {w(j,i) : j}

inline constexpr std::size_t default_motif_guard = 1'000'000;  // tuple count |X|^n

// The set of order x order weight matrices realized by node tuples with
// repetition: entry (a, b) of the matrix for tuple t is w(t[a], t[b]).
// Matrices are stored flattened row-major, sorted lexicographically,
// deduplicated by exact equality.
struct motif_set {
  std::size_t order = 0;
  std::vector<std::vector<double>> matrices;
};

motif_set motifs(const network& x, std::size_t order, std::size_t guard = default_motif_guard);

// Hausdorff distance between the motif sets of the given order under the
// entrywise max (l-infinity) matrix metric.
double motif_distance(const network& x, const network& y, std::size_t order,
                      std::size_t guard = default_motif_guard);

}  // namespace netdist
