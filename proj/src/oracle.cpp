#include "kmb/oracle.hpp"

#include <algorithm>
#include <set>

namespace kmb {

namespace {

std::vector<Rational> breakpoints_of(const Distribution& f) {
  if (f.is_step()) return f.as_step().breakpoints();
  if (f.is_point_one()) return {};
  throw UnsupportedVariant("grid oracles cover step-family distributions");
}

void sort_dedupe(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

GridSpec GridSpec::covering(const std::vector<Distribution>& inputs, bool pairwise_sums) {
  std::vector<Rational> pts;
  pts.push_back(Rational(0));
  for (const auto& f : inputs) {
    auto b = breakpoints_of(f);
    pts.insert(pts.end(), b.begin(), b.end());
  }
  if (pairwise_sums) {
    std::vector<std::vector<Rational>> all;
    for (const auto& f : inputs) all.push_back(breakpoints_of(f));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i == j) continue;
        for (const auto& s : all[i])
          for (const auto& r : all[j]) pts.push_back(s + r);
      }
  }
  sort_dedupe(pts);
  // midpoints, then a sentinel past everything
  std::vector<Rational> mids;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) mids.push_back((pts[i] + pts[i + 1]) / 2);
  pts.insert(pts.end(), mids.begin(), mids.end());
  pts.push_back(pts.empty() ? Rational(1) : *std::max_element(pts.begin(), pts.end()) + 1);
  sort_dedupe(pts);

  GridSpec g;
  g.t = std::move(pts);
  return g;
}

void GridSpec::require_covers(const Distribution& f) const {
  for (const auto& b : breakpoints_of(f)) {
    if (!std::binary_search(t.begin(), t.end(), b))
      throw GridTooCoarse("grid is missing breakpoint " + to_string(b));
    if (b >= t.back())
      throw GridTooCoarse("grid does not extend past breakpoint " + to_string(b));
  }
}

ExtRational grid_level(const Distribution& f, const Grade& a, const GridSpec& grid) {
  grid.require_covers(f);
  const auto breaks = breakpoints_of(f);
  const Rational last_break = breaks.empty() ? Rational(0) : breaks.back();
  ExtRational best(Rational(0));
  for (const auto& t : grid.t) {
    if (f.eval(t) <= a) {
      if (t > last_break) return ExtRational::infinity();  // constant from here on
      best = ExtRational(t);
    }
  }
  return best;
}

Grade grid_convolve_at(const Distribution& f, const Distribution& g, const Rational& t) {
  std::vector<Rational> splits;
  splits.push_back(Rational(0));
  splits.push_back(t);
  for (const auto& b : breakpoints_of(f))
    if (b <= t) splits.push_back(b);
  for (const auto& b : breakpoints_of(g))
    if (b <= t) splits.push_back(t - b);
  sort_dedupe(splits);
  std::vector<Rational> mids;
  for (std::size_t i = 0; i + 1 < splits.size(); ++i)
    mids.push_back((splits[i] + splits[i + 1]) / 2);
  splits.insert(splits.end(), mids.begin(), mids.end());

  Grade best = Grade::zero();
  for (const auto& s : splits) {
    Grade v = min(f.eval(s), g.eval(t - s));
    if (v > best) best = v;
  }
  return best;
}

Grade grid_residual(const Distribution& f, const Distribution& g, const GridSpec& grid) {
  grid.require_covers(f);
  grid.require_covers(g);
  Grade best = Grade::one();
  for (const auto& t : grid.t) {
    if (t == 0) continue;  // infimum ranges over t > 0
    Grade r = residuum(TNorm::Minimum, f.eval(t), g.eval(t));
    if (r < best) best = r;
  }
  return best;
}

Grade grid_bm(const FuzzyMetricSpace& space, int x, int y, int z) {
  const Distribution& target = space.entry(x, z);
  const Distribution& leg1 = space.entry(x, y);
  const Distribution& leg2 = space.entry(y, z);
  GridSpec grid = GridSpec::covering({target, leg1, leg2}, /*pairwise_sums=*/true);
  Grade best = Grade::one();
  for (const auto& t : grid.t) {
    if (t == 0) continue;
    Grade conv = grid_convolve_at(leg1, leg2, t);
    Grade r = residuum(TNorm::Minimum, target.eval(t).value() == 0 ? Grade::zero() : target.eval(t),
                       conv);
    if (r < best) best = r;
  }
  return best;
}

std::vector<Grade> default_a_grid(const std::vector<Distribution>& inputs) {
  std::set<Rational> vals;
  for (int i = 1; i < 64; ++i) vals.insert(Rational(i) / 64);
  for (const auto& f : inputs) {
    if (!f.is_step()) continue;
    for (const auto& v : f.as_step().values()) {
      if (v.value() > 0 && v.value() < 1) vals.insert(v.value());
    }
  }
  std::vector<Grade> out;
  out.reserve(vals.size());
  for (const auto& v : vals) out.push_back(Grade(v));
  return out;
}

// ---------------------------------------------------------------------------
// Instance generators

namespace {

struct PlanePoints {
  std::vector<Rational> xs, ys;
};

/// n distinct points with small integer coordinates.  Small grids collide in
/// coordinate sums often, which is what makes the taxicab equality
/// d(x,z) = d(x,y) + d(y,z) common enough to exercise.
PlanePoints random_points(int n, SplitMix64& rng) {
  PlanePoints p;
  std::set<std::pair<long, long>> used;
  while (static_cast<int>(p.xs.size()) < n) {
    long cx = rng.below(8);
    long cy = rng.below(8);
    if (!used.insert({cx, cy}).second) continue;
    p.xs.push_back(Rational(cx));
    p.ys.push_back(Rational(cy));
  }
  return p;
}

Rational taxicab(const PlanePoints& p, int i, int j) {
  Rational dx = p.xs[i] - p.xs[j];
  Rational dy = p.ys[i] - p.ys[j];
  if (dx < 0) dx = -dx;
  if (dy < 0) dy = -dy;
  return dx + dy;
}

Rational random_positive_scale(SplitMix64& rng) {
  static const int nums[] = {1, 1, 1, 2, 3, 3, 5, 2};
  static const int dens[] = {1, 2, 3, 1, 2, 4, 3, 5};
  int k = rng.below(8);
  return Rational(nums[k]) / dens[k];
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  return pts;
}

/// One nonnegative increment matrix: a full taxicab metric or an axis
/// projection of one (a pseudometric, still a triangle-inequality distance).
std::vector<std::vector<Rational>> random_increment(int n, SplitMix64& rng) {
  PlanePoints p = random_points(n, rng);
  int mode = rng.below(3);  // 0: full, 1: x-projection, 2: y-projection
  Rational scale = random_positive_scale(rng);
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v;
      if (mode == 0) {
        v = taxicab(p, i, j);
      } else {
        const auto& c = (mode == 1) ? p.xs : p.ys;
        v = c[i] - c[j];
        if (v < 0) v = -v;
      }
      d[i][j] = d[j][i] = v * scale;
    }
  return d;
}

}  // namespace

FiniteMetric gen_random_metric(int n, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("metric generator needs n >= 2");
  SplitMix64 rng(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull);
  PlanePoints p = random_points(n, rng);
  Rational scale = random_positive_scale(rng);
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = taxicab(p, i, j) * scale;
  return FiniteMetric::create(default_labels(n), d);
}

MetricNest gen_random_nest(int n, int levels, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("nest generator needs n >= 2");
  if (levels < 1) throw InvalidArgument("nest generator needs at least one level");
  SplitMix64 rng(seed * 0xBF58476D1CE4E5B9ull + 0x2545F4914F6CDD1Dull);

  // Base metric plus pseudometric increments; slice j is the j-th partial
  // sum, rescaled by a nondecreasing positive factor.  Betweenness of a sum
  // is the intersection of the summands' betweennesses, so the induced
  // family of betweenness relations shrinks as the level rises.
  FiniteMetric base = gen_random_metric(n, rng.next());
  std::vector<std::vector<std::vector<Rational>>> slices;
  std::vector<std::vector<Rational>> acc(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc[i][j] = base.dist(i, j);

  Rational factor = random_positive_scale(rng);
  for (int level = 0; level < levels; ++level) {
    if (level > 0) {
      auto inc = random_increment(n, rng);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc[i][j] += inc[i][j];
      factor += Rational(1 + rng.below(3)) / 4;  // nondecreasing rescale
    }
    auto s = acc;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s[i][j] *= factor;
    slices.push_back(std::move(s));
  }

  // Distinct level breakpoints between consecutive slices.
  std::set<Rational> cuts;
  while (static_cast<int>(cuts.size()) < levels - 1) {
    Rational c = Rational(1 + rng.below(63)) / 64;
    cuts.insert(c);
  }
  std::vector<Grade> abreaks;
  for (const auto& c : cuts) abreaks.push_back(Grade(c));

  std::map<std::pair<int, int>, PairLevels> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PairLevels pl;
      pl.abreaks = abreaks;
      for (const auto& s : slices) pl.dist.push_back(s[i][j]);
      pairs[{i, j}] = std::move(pl);
    }
  return MetricNest::create(default_labels(n), std::move(pairs));
}

FuzzyMetricSpace gen_random_step_space(int n, int levels, std::uint64_t seed) {
  return fuzzy_metric_from_nest(gen_random_nest(n, levels, seed));
}

Distribution gen_random_entry_step(int max_breaks, std::uint64_t seed) {
  SplitMix64 rng(seed * 0x94D049BB133111EBull + 0x632BE59BD9B4E019ull);
  int k = 1 + rng.below(std::max(1, max_breaks));

  std::set<Rational> bset;
  while (static_cast<int>(bset.size()) < k) bset.insert(Rational(1 + rng.below(24)) / (1 + rng.below(4)));
  std::set<Rational> vset;
  while (static_cast<int>(vset.size()) < k) vset.insert(Rational(1 + rng.below(63)) / 64);

  std::vector<Rational> breaks(bset.begin(), bset.end());
  std::vector<Grade> values;
  if (rng.below(2) == 0) {
    values.push_back(Grade::zero());
    auto it = vset.begin();
    for (int i = 1; i < k; ++i) values.push_back(Grade(*it++));
  } else {
    for (const auto& v : vset) values.push_back(Grade(v));
  }
  values.push_back(Grade::one());
  return Distribution::step(std::move(breaks), std::move(values));
}

}  // namespace kmb
