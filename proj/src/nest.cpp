#include "kmb/nest.hpp"

#include <algorithm>

#include "kmb/errors.hpp"

namespace kmb {

namespace {

PairLevels canonical_pair(PairLevels p) {
  if (p.dist.size() != p.abreaks.size() + 1)
    throw InvalidArgument("pair level data needs one more distance than breakpoints");
  for (std::size_t i = 0; i < p.abreaks.size(); ++i) {
    const Grade& a = p.abreaks[i];
    if (a.is_zero() || a.is_one()) throw InvalidArgument("level breakpoints must lie in (0,1)");
    if (i > 0 && !(p.abreaks[i - 1] < a))
      throw InvalidArgument("level breakpoints must be strictly increasing");
  }
  for (const auto& d : p.dist)
    if (d < 0) throw InvalidArgument("negative distance in nest pair");

  PairLevels out;
  out.dist.push_back(p.dist[0]);
  for (std::size_t i = 0; i < p.abreaks.size(); ++i) {
    if (p.dist[i + 1] == out.dist.back()) continue;
    out.abreaks.push_back(p.abreaks[i]);
    out.dist.push_back(p.dist[i + 1]);
  }
  return out;
}

Grade midpoint(const Grade& lo, const Grade& hi) {
  return Grade((lo.value() + hi.value()) / 2);
}

}  // namespace

MetricNest MetricNest::create(std::vector<std::string> points,
                              std::map<std::pair<int, int>, PairLevels> pairs) {
  check_point_labels(points);
  const int n = static_cast<int>(points.size());
  MetricNest nest;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto it = pairs.find({i, j});
      if (it == pairs.end())
        throw ShapeMismatch("missing level data for pair (" + points[i] + "," + points[j] + ")");
      nest.pairs_[{i, j}] = canonical_pair(it->second);
    }
  }
  if (pairs.size() != nest.pairs_.size())
    throw ShapeMismatch("level data present for an unknown or duplicated pair");
  nest.points_ = std::move(points);
  return nest;
}

const PairLevels& MetricNest::pair_levels(int i, int j) const {
  if (i > j) std::swap(i, j);
  return pairs_.at({i, j});
}

Rational MetricNest::dist_at(int i, int j, const Grade& a) const {
  if (a.is_zero() || a.is_one()) throw InvalidArgument("level must satisfy 0 < a < 1");
  if (i == j) return Rational(0);
  const PairLevels& p = pair_levels(i, j);
  std::size_t k = std::upper_bound(p.abreaks.begin(), p.abreaks.end(), a) - p.abreaks.begin();
  return p.dist[k];
}

std::vector<std::vector<Rational>> MetricNest::slice_matrix(const Grade& a) const {
  const int n = size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = dist_at(i, j, a);
  return m;
}

FiniteMetric MetricNest::slice(const Grade& a) const {
  return FiniteMetric::create(points_, slice_matrix(a));
}

std::vector<Grade> MetricNest::probe_levels() const {
  std::vector<Grade> cuts;
  for (const auto& [key, p] : pairs_)
    cuts.insert(cuts.end(), p.abreaks.begin(), p.abreaks.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Grade> probes;
  Grade prev = Grade::zero();
  for (const Grade& c : cuts) {
    probes.push_back(midpoint(prev, c));  // interior of the piece below c
    probes.push_back(c);                  // the piece starting at c
    prev = c;
  }
  probes.push_back(midpoint(prev, Grade::one()));  // interior of the top piece
  return probes;
}

ValidationReport validate_nest(const MetricNest& nest) {
  ValidationReport rep;

  bool ok = true;
  std::string w;
  const auto& pts = nest.points();
  for (int i = 0; i < nest.size() && ok; ++i)
    for (int j = i + 1; j < nest.size() && ok; ++j) {
      const PairLevels& p = nest.pair_levels(i, j);
      for (std::size_t k = 0; k + 1 < p.dist.size() && ok; ++k)
        if (p.dist[k] > p.dist[k + 1]) {
          ok = false;
          w = "pair (" + pts[i] + "," + pts[j] + "): distance drops from " + to_string(p.dist[k]) +
              " to " + to_string(p.dist[k + 1]) + " at level " + p.abreaks[k].str();
        }
    }
  rep.add("monotone", ok, w);

  ok = true;
  w.clear();
  for (const Grade& a : nest.probe_levels()) {
    ValidationReport sub = FiniteMetric::validate_raw(pts, nest.slice_matrix(a));
    if (const CheckRow* f = sub.first_failure()) {
      ok = false;
      w = "slice at level " + a.str() + ": " + f->name + ": " + f->detail;
      break;
    }
  }
  rep.add("slice-metric", ok, w);

  return rep;
}

MetricNest nest_from_fuzzy_metric(const FuzzyMetricSpace& space) {
  if (!space.is_step_family())
    throw UnsupportedVariant(
        "nests are materialized for step-family spaces only; "
        "scaled families answer level queries in closed form");
  const int n = space.size();
  std::map<std::pair<int, int>, PairLevels> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      LevelProfile prof = LevelProfile::of(space.entry(i, j));
      PairLevels p;
      p.abreaks = prof.abreaks;
      for (const auto& lv : prof.levels) {
        if (lv.is_infinite())
          throw InvalidNest("entry (" + space.points()[i] + "," + space.points()[j] +
                            ") never exceeds some level (terminal value below 1)");
        p.dist.push_back(lv.finite_value());
      }
      if (p.dist[0] == 0)
        throw InvalidNest("entry (" + space.points()[i] + "," + space.points()[j] +
                          ") is positive just above t=0, so low-level slices collapse the pair "
                          "and are not metrics");
      pairs[{i, j}] = std::move(p);
    }
  }
  return MetricNest::create(space.points(), std::move(pairs));
}

FuzzyMetricSpace fuzzy_metric_from_nest(const MetricNest& nest) {
  ValidationReport rep = validate_nest(nest);
  if (const CheckRow* f = rep.first_failure())
    throw InvalidNest(f->name + ": " + f->detail);

  const int n = nest.size();
  std::vector<std::vector<Distribution>> entries(n, std::vector<Distribution>(n));
  for (int i = 0; i < n; ++i) entries[i][i] = Distribution::point_one();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const PairLevels& p = nest.pair_levels(i, j);
      LevelProfile prof;
      prof.abreaks = p.abreaks;
      for (const auto& d : p.dist) prof.levels.push_back(ExtRational(d));
      entries[i][j] = entries[j][i] = prof.to_distribution();
    }
  }
  return FuzzyMetricSpace::from_entries(nest.points(), std::move(entries), TNorm::Minimum);
}

RoundTripResult roundtrip_space(const FuzzyMetricSpace& space) {
  FuzzyMetricSpace back = fuzzy_metric_from_nest(nest_from_fuzzy_metric(space));
  RoundTripResult r;
  if (back == space) return r;
  r.equal = false;
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      if (!(space.entry(i, j) == back.entry(i, j))) {
        r.diff = "pair (" + space.points()[i] + "," + space.points()[j] + "): " +
                 space.entry(i, j).str() + " became " + back.entry(i, j).str();
        return r;
      }
  r.diff = "point list or t-norm changed";
  return r;
}

RoundTripResult roundtrip_nest(const MetricNest& nest) {
  MetricNest back = nest_from_fuzzy_metric(fuzzy_metric_from_nest(nest));
  RoundTripResult r;
  if (back == nest) return r;
  r.equal = false;
  for (int i = 0; i < nest.size(); ++i)
    for (int j = i + 1; j < nest.size(); ++j)
      if (!(nest.pair_levels(i, j) == back.pair_levels(i, j))) {
        r.diff = "pair (" + nest.points()[i] + "," + nest.points()[j] + ") changed";
        return r;
      }
  r.diff = "point list changed";
  return r;
}

}  // namespace kmb
