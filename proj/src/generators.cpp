#include "netdist/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "netdist/random.hpp"

namespace netdist {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view purpose) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the purpose tag
  for (char c : purpose) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h;  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

network n1(double alpha) { return make_network(matrix{{alpha}}); }

network n2(const matrix& omega) {
  if (omega.rows != 2 || omega.cols != 2)
    throw dimension_error("n2 expects a 2x2 matrix");
  return make_network(omega);
}

network nk(const matrix& sigma) { return make_network(sigma); }

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double ccw_arc(std::size_t j, std::size_t k, std::size_t n) {
  const std::size_t diff = (k + n - j) % n;
  return two_pi * static_cast<double>(diff) / static_cast<double>(n);
}

}  // namespace

network circle(std::size_t n) {
  if (n == 0) throw size_error("circle needs at least one node");
  matrix w(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) w(j, k) = ccw_arc(j, k, n);
  return make_network(std::move(w));
}

network circle_rev(std::size_t n, double rho) {
  if (n == 0) throw size_error("circle_rev needs at least one node");
  if (!(rho >= 1.0)) throw parameter_error("circle_rev needs rho >= 1");
  matrix w(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const double d = ccw_arc(j, k, n);
      w(j, k) = std::min(d, rho * (two_pi - d));
    }
  return make_network(std::move(w));
}

correspondence circle_nesting_correspondence(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw size_error("nesting correspondence needs nonempty circles");
  if (m % n != 0)
    throw parameter_error("nesting correspondence needs the coarse size to divide the fine size");
  const std::size_t ratio = m / n;
  correspondence r{m, n, {}};
  r.pairs.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    // Round the angle up to the next coarse node.
    const std::size_t j = ((k + ratio - 1) / ratio) % n;
    r.pairs.emplace_back(k, j);
  }
  return r;
}

environment square_environment(double side) {
  if (!(side > 0)) throw parameter_error("environment side must be positive");
  return environment{side, std::nullopt};
}

environment one_hole_environment(double side) {
  if (!(side > 0)) throw parameter_error("environment side must be positive");
  return environment{side, 0.33 * side};
}

bool environment_contains(const environment& env, const point& p) {
  if (p.x < 0.0 || p.x > env.side || p.y < 0.0 || p.y > env.side) return false;
  if (env.hole_radius) {
    const double cx = 0.5 * env.side, cy = 0.5 * env.side;
    const double dx = p.x - cx, dy = p.y - cy;
    if (dx * dx + dy * dy < *env.hole_radius * *env.hole_radius) return false;
  }
  return true;
}

namespace {

point walk_start(const environment& env) {
  if (!env.hole_radius) return point{0.5 * env.side, 0.5 * env.side};
  // Midway across the band between the hole and the wall, on the x axis.
  const double offset = 0.5 * (*env.hole_radius + 0.5 * env.side);
  return point{0.5 * env.side + offset, 0.5 * env.side};
}

}  // namespace

std::vector<point> simulate_trajectory(const environment& env, std::size_t steps,
                                       double step_len, std::uint64_t seed) {
  if (!(step_len > 0)) throw parameter_error("step length must be positive");
  rng gen(derive_seed(seed, "trajectory"));
  std::vector<point> path;
  path.reserve(steps + 1);
  point pos = walk_start(env);
  if (!environment_contains(env, pos)) throw simulation_error("walk start is outside the environment");
  path.push_back(pos);
  const point moves[4] = {{step_len, 0.0}, {-step_len, 0.0}, {0.0, step_len}, {0.0, -step_len}};
  for (std::size_t s = 0; s < steps; ++s) {
    point allowed[4];
    std::size_t count = 0;
    for (const point& mv : moves) {
      const point cand{pos.x + mv.x, pos.y + mv.y};
      if (environment_contains(env, cand)) allowed[count++] = cand;
    }
    if (count == 0) throw simulation_error("walk is stuck with no allowed move");
    pos = allowed[gen.below(count)];
    path.push_back(pos);
  }
  return path;
}

std::vector<point> place_fields(const environment& env, std::size_t count, double radius,
                                std::uint64_t seed) {
  if (count == 0) throw parameter_error("need at least one place field");
  if (!(radius > 0)) throw parameter_error("place field radius must be positive");
  rng gen(derive_seed(seed, "fields"));
  std::vector<point> centers;
  centers.reserve(count);
  while (centers.size() < count) {
    const point p{gen.uniform(0.0, env.side), gen.uniform(0.0, env.side)};
    if (environment_contains(env, p)) centers.push_back(p);
  }
  return centers;
}

spike_raster make_spike_raster(const std::vector<point>& trajectory,
                               const std::vector<point>& centers, double radius,
                               double fire_prob, std::uint64_t seed) {
  if (trajectory.empty()) throw emptiness_error("trajectory is empty");
  if (centers.empty()) throw emptiness_error("no place field centers");
  if (!(radius > 0)) throw parameter_error("place field radius must be positive");
  if (!(fire_prob > 0.0) || fire_prob > 1.0)
    throw parameter_error("firing probability must be in (0, 1]");
  spike_raster raster;
  raster.cells = centers.size();
  raster.steps = trajectory.size();
  raster.spikes.assign(raster.cells * raster.steps, 0);
  raster.field_centers = centers;
  raster.field_radius = radius;
  const double r2 = radius * radius;
  // fire_prob = 1 keeps the raster a pure function of geometry: no RNG draws
  // at all, so historical outputs stay byte-identical.
  rng gen(derive_seed(seed, "spikes"));
  for (std::size_t i = 0; i < raster.cells; ++i)
    for (std::size_t t = 0; t < raster.steps; ++t) {
      const double dx = trajectory[t].x - centers[i].x;
      const double dy = trajectory[t].y - centers[i].y;
      if (dx * dx + dy * dy > r2) continue;
      if (fire_prob < 1.0 && gen.unit() >= fire_prob) continue;
      raster.spikes[i * raster.steps + t] = 1;
    }
  return raster;
}

network hippocampal_network(const spike_raster& raster, std::size_t window) {
  if (window == 0) throw parameter_error("window must be at least one step");
  const std::size_t n = raster.cells, t_count = raster.steps;
  // recent[i][t]: cell i spiked at some step in [t - window, t - 1].
  std::vector<std::uint8_t> recent(n * t_count, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t in_window = 0;
    for (std::size_t t = 0; t < t_count; ++t) {
      recent[i * t_count + t] = in_window > 0;
      if (raster.spiked(i, t)) ++in_window;
      if (t >= window && raster.spiked(i, t - window)) --in_window;
    }
  }
  matrix w(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t total = 0;
    for (std::size_t t = 0; t < t_count; ++t)
      if (raster.spiked(j, t)) ++total;
    for (std::size_t i = 0; i < n; ++i) {
      if (total == 0) {
        w(i, j) = 1.0;
        continue;
      }
      std::size_t preceded = 0;
      for (std::size_t t = 0; t < t_count; ++t)
        if (raster.spiked(j, t) && recent[i * t_count + t] != 0) ++preceded;
      w(i, j) = std::clamp(1.0 - static_cast<double>(preceded) / static_cast<double>(total),
                           0.0, 1.0);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("cell" + std::to_string(i));
  return make_network(std::move(w), std::move(labels));
}

}  // namespace netdist
