#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netdist/network.hpp"

namespace netdist {

network n1(double alpha);            // one node with self-weight alpha
network n2(const matrix& omega);     // two nodes
network nk(const matrix& sigma);     // any square matrix

// Directed circle on n nodes: node k sits at angle 2*pi*k/n and the weight
// from j to k is the counterclockwise arc length, in [0, 2*pi).
network circle(std::size_t n);

// Circle whose backward arcs are discounted: off the diagonal the weight is
// min(d, rho*(2*pi - d)) with d the counterclockwise arc. rho >= 1; rho = 1
// gives the symmetric geodesic circle.
network circle_rev(std::size_t n, double rho);

// For n dividing m: pairs each node of circle(m) with the nearest node of
// circle(n) in the counterclockwise direction. Pair order is (m-node index,
// n-node index), matching distortion(r, circle(m), circle(n)).
correspondence circle_nesting_correspondence(std::size_t n, std::size_t m);

// Unit-square-like arena: a square of the given side, optionally with a
// round hole cut from its center.
struct environment {
  double side = 1.0;
  std::optional<double> hole_radius;
};

environment square_environment(double side = 1.0);
environment one_hole_environment(double side = 1.0);  // hole radius 0.33 * side

struct point {
  double x = 0.0;
  double y = 0.0;
};

bool environment_contains(const environment& env, const point& p);

// Axis-aligned random walk: each step moves step_len up, down, left, or
// right, choosing uniformly among the moves that stay inside the
// environment. Starts at the square's center, shifted to the middle of the
// annulus band when a hole is present. Returns steps + 1 points.
std::vector<point> simulate_trajectory(const environment& env, std::size_t steps,
                                       double step_len, std::uint64_t seed);

// Field centers sampled uniformly over the valid region (rejection sampling
// when a hole is present). The radius is recorded by the caller; fields may
// overlap the boundary.
std::vector<point> place_fields(const environment& env, std::size_t count, double radius,
                                std::uint64_t seed);

struct spike_raster {
  std::size_t cells = 0;
  std::size_t steps = 0;                // number of trajectory points
  std::vector<std::uint8_t> spikes;     // cells x steps, row-major
  std::vector<point> field_centers;
  double field_radius = 0.0;

  bool spiked(std::size_t cell, std::size_t t) const { return spikes[cell * steps + t] != 0; }
};

// Cell i spikes at time t iff the trajectory point t lies within the closed
// ball of the given radius around center i. With fire_prob < 1 each in-field
// step fires only with that probability (seeded); the default of 1 is fully
// deterministic and consumes no randomness.
spike_raster make_spike_raster(const std::vector<point>& trajectory,
                               const std::vector<point>& centers, double radius,
                               double fire_prob = 1.0, std::uint64_t seed = 0);

// Weight (i, j) is 1 minus the fraction of j's spikes that were preceded by
// a spike of i within the last `window` steps; 1 when j never spikes.
// Deterministic in (raster, window).
network hippocampal_network(const spike_raster& raster, std::size_t window = 5);

}  // namespace netdist
