#pragma once

#include <cstdint>
#include <vector>

#include "kmb/fuzzy_metric.hpp"
#include "kmb/nest.hpp"

namespace kmb {

/// Deterministic, platform-stable PRNG (splitmix64); seeds fully determine
/// every generated instance.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

private:
  std::uint64_t s_;
};

/// A finite probe grid for the brute-force oracles.  `covering` builds one
/// from the breakpoints of the inputs: all breakpoints, piece midpoints,
/// optionally all pairwise breakpoint sums, zero, and one sentinel beyond
/// the last breakpoint (so "never exceeded" is detectable).
struct GridSpec {
  std::vector<Rational> t;  // sorted, deduplicated, starts at 0

  static GridSpec covering(const std::vector<Distribution>& inputs, bool pairwise_sums);

  /// Throws GridTooCoarse unless every breakpoint of f lies on the grid and
  /// the grid extends past the last one.
  void require_covers(const Distribution& f) const;
};

/// sup{ t in grid | F(t) <= a }, promoted to infinity when even the sentinel
/// beyond the last breakpoint satisfies the bound.  Agrees exactly with
/// Distribution::level on covering grids.
ExtRational grid_level(const Distribution& f, const Grade& a, const GridSpec& grid);

/// sup_{s+r=t} min(F(s), G(r)) computed directly: the extremizing split lies
/// at a breakpoint of F, at t minus a breakpoint of G, or inside one of the
/// open intervals between those, so sampling endpoints and midpoints is
/// exact.
Grade grid_convolve_at(const Distribution& f, const Distribution& g, const Rational& t);

/// min over positive grid points of the Goedel residuum F(t) -> G(t).
Grade grid_residual(const Distribution& f, const Distribution& g, const GridSpec& grid);

/// End-to-end grid evaluation of the implication-route betweenness grade of
/// one ordered triple; independent of the closed-form engine path.
Grade grid_bm(const FuzzyMetricSpace& space, int x, int y, int z);

/// Probe grades: multiples of 1/64 in (0,1) plus the value sets of the
/// inputs (clipped to (0,1)).
std::vector<Grade> default_a_grid(const std::vector<Distribution>& inputs);

/// Taxicab metric on random distinct rational points in the plane: exact,
/// triangle inequality by construction, and rich in triples satisfying the
/// additive equality.
FiniteMetric gen_random_metric(int n, std::uint64_t seed);

/// Random nest with up to `levels` distinct slices.  Slices are partial sums
/// of a random taxicab metric and random taxicab pseudometric increments,
/// each level rescaled by a nondecreasing positive factor; validity by
/// construction.
MetricNest gen_random_nest(int n, int levels, std::uint64_t seed);

/// fuzzy_metric_from_nest of a random nest: a valid step-family space under
/// the minimum t-norm with at most `levels` breakpoints per entry.
FuzzyMetricSpace gen_random_step_space(int n, int levels, std::uint64_t seed);

/// Random canonical step distribution with terminal value 1 (the shape of a
/// fuzzy-metric entry), for exercising the function algebra on its own.
Distribution gen_random_entry_step(int max_breaks, std::uint64_t seed);

}  // namespace kmb
