#pragma once

#include <vector>

#include "kmb/distribution.hpp"
#include "kmb/metric.hpp"
#include "kmb/report.hpp"

namespace kmb {

/// A finite KM-fuzzy metric space: labeled points, a symmetric matrix of
/// distance distributions with the diagonal pinned to PointOne, and a t-norm.
/// Construction enforces the structural axioms (diagonal, symmetry,
/// off-diagonal not PointOne, one variant family); `validate` additionally
/// runs the exact convolution-bound check for the carried t-norm.
class FuzzyMetricSpace {
public:
  static FuzzyMetricSpace from_entries(std::vector<std::string> points,
                                       std::vector<std::vector<Distribution>> entries,
                                       TNorm tnorm);

  /// Full axiom report on raw data; does not require the structural
  /// invariants to hold (their violations come back as failed FM rows).
  static ValidationReport validate_raw(const std::vector<std::string>& points,
                                       const std::vector<std::vector<Distribution>>& entries,
                                       TNorm tnorm);

  ValidationReport validate() const;

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const Distribution& entry(int i, int j) const { return e_[i * size() + j]; }
  TNorm tnorm() const { return tnorm_; }

  /// True when every off-diagonal entry is a step distribution (nests are
  /// materialized only for these).
  bool is_step_family() const;
  /// True when off-diagonal entries are scaled with this generator.
  bool is_scaled_family(Generator g) const;

  bool operator==(const FuzzyMetricSpace& o) const {
    return points_ == o.points_ && tnorm_ == o.tnorm_ && e_ == o.e_;
  }

private:
  FuzzyMetricSpace() = default;
  std::vector<std::string> points_;
  std::vector<Distribution> e_;  // row-major n x n
  TNorm tnorm_ = TNorm::Minimum;
};

/// M(x, y, t) = t / (t + d(x, y)); a KM-fuzzy metric under any t-norm.
/// The carried tag defaults to Minimum.
FuzzyMetricSpace standard_from_metric(const FiniteMetric& d);

/// M(x, y, t) = e^{-d(x, y) / t}; a KM-fuzzy metric under the product t-norm.
FuzzyMetricSpace exponential_from_metric(const FiniteMetric& d);

}  // namespace kmb
