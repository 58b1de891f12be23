#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kmb/fuzzy_metric.hpp"
#include "kmb/metric.hpp"

namespace kmb {

/// Level data for one unordered point pair: the distance d_a as a
/// right-continuous nondecreasing step function of the level a in (0, 1),
///
///   d_a = dist[j]  for a in [abreaks[j-1], abreaks[j])    (abreaks_0 piece
///   is (0, abreaks[0])),
///
/// which realizes d_a = inf_{b > a} d_b structurally.
struct PairLevels {
  std::vector<Grade> abreaks;   // strictly increasing, inside (0, 1)
  std::vector<Rational> dist;   // size abreaks.size() + 1

  bool operator==(const PairLevels& o) const { return abreaks == o.abreaks && dist == o.dist; }
};

/// A level-indexed family of distance matrices on a finite point set, stored
/// once per unordered pair.  Construction canonicalizes (adjacent equal
/// distances merge) and checks shape only; axiom checking is `validate_nest`,
/// so ill-formed nests can be loaded and reported on.
class MetricNest {
public:
  static MetricNest create(std::vector<std::string> points,
                           std::map<std::pair<int, int>, PairLevels> pairs);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const PairLevels& pair_levels(int i, int j) const;

  /// d_a(i, j) for 0 < a < 1.
  Rational dist_at(int i, int j, const Grade& a) const;

  /// The distance matrix of the slice at level a.
  std::vector<std::vector<Rational>> slice_matrix(const Grade& a) const;

  /// The slice as a validated FiniteMetric (throws InvalidMetric when the
  /// slice violates the axioms).
  FiniteMetric slice(const Grade& a) const;

  /// Levels that jointly meet every distinct slice: the union of all pair
  /// breakpoints (each starts a piece) plus one interior probe per piece.
  /// Sorted ascending.
  std::vector<Grade> probe_levels() const;

  bool operator==(const MetricNest& o) const { return points_ == o.points_ && pairs_ == o.pairs_; }

private:
  MetricNest() = default;
  std::vector<std::string> points_;
  std::map<std::pair<int, int>, PairLevels> pairs_;  // keys (i, j) with i < j
};

/// Per-pair monotonicity plus the metric axioms at every distinct slice.
ValidationReport validate_nest(const MetricNest& nest);

/// Materializes the nest of level metrics of a step-family space:
/// d_a(x, y) = sup{ t | M(x, y, t) <= a }, stored as per-pair step data.
/// Throws UnsupportedVariant for scaled families (their nests have
/// infinitely many distinct slices; level queries answer in closed form)
/// and InvalidNest when a slice fails the metric axioms (which happens iff
/// some off-diagonal entry does not vanish just above t = 0).
MetricNest nest_from_fuzzy_metric(const FuzzyMetricSpace& space);

/// The converse construction M(x, y, t) = sup{ a | d_a(x, y) < t }, yielding
/// a step-family space under the minimum t-norm.  Requires a valid nest.
FuzzyMetricSpace fuzzy_metric_from_nest(const MetricNest& nest);

struct RoundTripResult {
  bool equal = true;
  std::string diff;  // first differing pair, when not equal
};

/// fuzzy_metric_from_nest(nest_from_fuzzy_metric(space)) == space, bit-exact
/// on canonical forms.
RoundTripResult roundtrip_space(const FuzzyMetricSpace& space);

/// nest_from_fuzzy_metric(fuzzy_metric_from_nest(nest)) == nest.
RoundTripResult roundtrip_nest(const MetricNest& nest);

}  // namespace kmb
