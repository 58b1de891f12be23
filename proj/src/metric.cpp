#include "kmb/metric.hpp"

#include <set>

#include "kmb/errors.hpp"

namespace kmb {

void check_point_labels(const std::vector<std::string>& points) {
  if (points.empty()) throw InvalidArgument("point set must be nonempty");
  std::set<std::string> seen;
  for (const auto& p : points) {
    if (p.empty()) throw InvalidArgument("empty point label");
    if (!seen.insert(p).second) throw DuplicatePoint("duplicate point label '" + p + "'");
  }
}

ValidationReport FiniteMetric::validate_raw(const std::vector<std::string>& points,
                                            const std::vector<std::vector<Rational>>& dist) {
  check_point_labels(points);
  const int n = static_cast<int>(points.size());
  if (static_cast<int>(dist.size()) != n)
    throw ShapeMismatch("distance matrix has wrong row count");
  for (const auto& row : dist)
    if (static_cast<int>(row.size()) != n) throw ShapeMismatch("distance matrix row has wrong size");

  ValidationReport rep;

  bool ok = true;
  std::string w;
  for (int i = 0; i < n && ok; ++i) {
    if (dist[i][i] != 0) {
      ok = false;
      w = "d(" + points[i] + "," + points[i] + ") = " + to_string(dist[i][i]) + " != 0";
    }
  }
  rep.add("zero-diagonal", ok, w);

  ok = true;
  w.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      if (dist[i][j] != dist[j][i]) {
        ok = false;
        w = "d(" + points[i] + "," + points[j] + ") != d(" + points[j] + "," + points[i] + ")";
      }
  rep.add("symmetry", ok, w);

  ok = true;
  w.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      if (i != j && !(dist[i][j] > 0)) {
        ok = false;
        w = "d(" + points[i] + "," + points[j] + ") = " + to_string(dist[i][j]) + " <= 0";
      }
  rep.add("positivity", ok, w);

  ok = true;
  w.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k)
        if (dist[i][k] > dist[i][j] + dist[j][k]) {
          ok = false;
          w = "d(" + points[i] + "," + points[k] + ") = " + to_string(dist[i][k]) + " > " +
              to_string(dist[i][j] + dist[j][k]) + " = d(" + points[i] + "," + points[j] +
              ") + d(" + points[j] + "," + points[k] + ")";
        }
  rep.add("triangle", ok, w);

  return rep;
}

FiniteMetric FiniteMetric::create(std::vector<std::string> points,
                                  std::vector<std::vector<Rational>> dist) {
  ValidationReport rep = validate_raw(points, dist);
  if (!rep.all_pass()) {
    const CheckRow* f = rep.first_failure();
    throw InvalidMetric(f->name + ": " + f->detail);
  }
  FiniteMetric m;
  m.points_ = std::move(points);
  m.d_.reserve(points.size() * points.size());
  for (const auto& row : dist)
    for (const auto& v : row) m.d_.push_back(v);
  return m;
}

}  // namespace kmb
