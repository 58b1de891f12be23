#pragma once

#include <string>
#include <vector>

#include "kmb/rational.hpp"
#include "kmb/report.hpp"

namespace kmb {

/// A classical metric on a finite labeled point set, with exact rational
/// distances.  `create` enforces the axioms; `validate_raw` reports them.
class FiniteMetric {
public:
  static FiniteMetric create(std::vector<std::string> points, std::vector<std::vector<Rational>> dist);
  static ValidationReport validate_raw(const std::vector<std::string>& points,
                                       const std::vector<std::vector<Rational>>& dist);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const Rational& dist(int i, int j) const { return d_[i * size() + j]; }

  bool operator==(const FiniteMetric& o) const { return points_ == o.points_ && d_ == o.d_; }

private:
  FiniteMetric() = default;
  std::vector<std::string> points_;
  std::vector<Rational> d_;  // row-major n x n
};

/// Checks that labels are nonempty and pairwise distinct; shared by every
/// labeled structure.
void check_point_labels(const std::vector<std::string>& points);

}  // namespace kmb
