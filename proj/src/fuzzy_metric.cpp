#include "kmb/fuzzy_metric.hpp"

#include <optional>

#include "kmb/errors.hpp"

namespace kmb {

namespace {

/// The shared variant family of the off-diagonal entries.
enum class Family { Step, Standard, Exponential, None };

Family family_of(const Distribution& d) {
  if (d.is_step()) return Family::Step;
  return d.as_scaled().generator() == Generator::Standard ? Family::Standard
                                                          : Family::Exponential;
}

Family check_one_family(const std::vector<std::string>& points,
                        const std::vector<std::vector<Distribution>>& entries) {
  Family fam = Family::None;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || entries[i][j].is_point_one()) continue;
      Family f = family_of(entries[i][j]);
      if (fam == Family::None) fam = f;
      if (f != fam)
        throw MixedVariant("entries (" + points[i] + "," + points[j] +
                           ") and earlier pairs use different variant families");
    }
  return fam;
}

/// Piece decomposition of a step entry: (lo_i, hi_i] with constant value v_i,
/// the last piece unbounded.  Used by the rectangle enumeration.
struct Piece {
  Rational lo;
  Grade value;
};

std::vector<Piece> pieces_of(const StepDistribution& s) {
  std::vector<Piece> out;
  out.push_back({Rational(0), s.values()[0]});
  for (std::size_t i = 0; i < s.breakpoints().size(); ++i)
    out.push_back({s.breakpoints()[i], s.values()[i + 1]});
  return out;
}

/// FM4 for one ordered triple under Minimum: the sup-min convolution of the
/// two legs must lie below the direct entry.  Returns a witness when not.
std::optional<std::string> fm4_minimum_witness(const Distribution& leg1, const Distribution& leg2,
                                               const Distribution& target) {
  Distribution conv = supmin_convolve(leg1, leg2);
  if (pointwise_le(conv, target)) return std::nullopt;
  // Locate a violating t for the report.
  if (conv.is_step() && target.is_step()) {
    const auto& cs = conv.as_step();
    const auto& ts = target.as_step();
    std::vector<Rational> cuts = cs.breakpoints();
    cuts.insert(cuts.end(), ts.breakpoints().begin(), ts.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    for (const auto& c : cuts) {
      Grade vc = cs.right_limit(c), vt = ts.right_limit(c);
      if (vc > vt)
        return "just above t=" + to_string(c) + ": convolution " + vc.str() + " > " + vt.str();
    }
    Grade vc = cs.right_limit(Rational(0)), vt = ts.right_limit(Rational(0));
    return "near t=0: convolution " + vc.str() + " > " + vt.str();
  }
  if (conv.is_scaled() && target.is_scaled()) {
    return "scale " + to_string(conv.as_scaled().scale()) + " of the convolution < scale " +
           to_string(target.as_scaled().scale()) + " of the entry";
  }
  return "convolution exceeds the entry";  // PointOne target cannot fail
}

/// FM4 for one ordered triple of step entries under a sub-minimum t-norm:
/// for every product of constant pieces (p1,p2] x (q1,q2], the t-norm of the
/// two values must not exceed the infimum of the target over the open sum
/// range, i.e. its right limit at p1+q1.
std::optional<std::string> fm4_rectangles_witness(TNorm tnorm, const StepDistribution& leg1,
                                                  const StepDistribution& leg2,
                                                  const StepDistribution& target) {
  for (const Piece& p : pieces_of(leg1)) {
    for (const Piece& q : pieces_of(leg2)) {
      Grade bound = tnorm_apply(tnorm, p.value, q.value);
      Rational lo = p.lo + q.lo;
      Grade floor = target.right_limit(lo);
      if (bound > floor)
        return "for s just above " + to_string(p.lo) + " and r just above " + to_string(q.lo) +
               ": " + p.value.str() + " * " + q.value.str() + " = " + bound.str() + " > " +
               floor.str() + " = M(x,z, just above " + to_string(lo) + ")";
    }
  }
  return std::nullopt;
}

/// FM4 for scaled families under Product or Lukasiewicz, in closed form.
/// Writing d1, d2 for the leg scales and d3 for the target scale, the bound
/// sup_{s+r=t} G(s/d1) * G(r/d2) <= G(t/d3) holds for all t exactly when
/// d3 <= d1 + d2 + 2 sqrt(d1 d2), for both named generators.  The triangle
/// inequality d3 <= d1 + d2 is a sufficient special case.
std::optional<std::string> fm4_scaled_witness(const Rational& d1, const Rational& d2,
                                              const Rational& d3) {
  if (d3 <= d1 + d2) return std::nullopt;
  Rational gap = d3 - d1 - d2;
  if (gap * gap <= 4 * d1 * d2) return std::nullopt;
  return "scales violate d(x,z) <= d(x,y) + d(y,z) + 2 sqrt(d(x,y) d(y,z)): " + to_string(d3) +
         " vs " + to_string(d1) + " + " + to_string(d2) + " + 2 sqrt(" + to_string(d1 * d2) + ")";
}

}  // namespace

ValidationReport FuzzyMetricSpace::validate_raw(const std::vector<std::string>& points,
                                                const std::vector<std::vector<Distribution>>& entries,
                                                TNorm tnorm) {
  check_point_labels(points);
  const int n = static_cast<int>(points.size());
  if (static_cast<int>(entries.size()) != n) throw ShapeMismatch("entry matrix has wrong row count");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n) throw ShapeMismatch("entry matrix row has wrong size");
  check_one_family(points, entries);

  ValidationReport rep;
  rep.add("FM1", true, "structural: every distribution is 0 at t=0");

  bool ok = true;
  std::string w;
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j) {
      if (i == j && !entries[i][j].is_point_one()) {
        ok = false;
        w = "diagonal entry (" + points[i] + "," + points[i] + ") is " + entries[i][j].str();
      }
      if (i != j && entries[i][j].is_point_one()) {
        ok = false;
        w = "off-diagonal entry (" + points[i] + "," + points[j] + ") attains 1 for all t>0";
      }
    }
  rep.add("FM2", ok, w);

  ok = true;
  w.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = i + 1; j < n && ok; ++j)
      if (entries[i][j] != entries[j][i]) {
        ok = false;
        w = "entry (" + points[i] + "," + points[j] + ") differs from (" + points[j] + "," +
            points[i] + ")";
      }
  rep.add("FM3", ok, w);

  ok = true;
  w.clear();
  for (int i = 0; i < n && ok; ++i) {
    for (int j = 0; j < n && ok; ++j) {
      for (int k = 0; k < n && ok; ++k) {
        std::optional<std::string> bad;
        if (tnorm == TNorm::Minimum) {
          bad = fm4_minimum_witness(entries[i][j], entries[j][k], entries[i][k]);
        } else {
          // Triples with a repeated index hold for every t-norm: a PointOne
          // leg makes the bound the monotonicity of the remaining entry, and
          // a PointOne target bounds everything.
          if (i == j || j == k || i == k) continue;
          if (entries[i][j].is_step()) {
            bad = fm4_rectangles_witness(tnorm, entries[i][j].as_step(), entries[j][k].as_step(),
                                         entries[i][k].as_step());
          } else {
            bad = fm4_scaled_witness(entries[i][j].as_scaled().scale(),
                                     entries[j][k].as_scaled().scale(),
                                     entries[i][k].as_scaled().scale());
          }
        }
        if (bad) {
          ok = false;
          w = "triple (" + points[i] + "," + points[j] + "," + points[k] + "): " + *bad;
        }
      }
    }
  }
  rep.add("FM4", ok, w);

  rep.add("FM5", true, "structural: step functions are left-continuous, scaled families continuous");

  ok = true;
  w.clear();
  for (int i = 0; i < n && ok; ++i)
    for (int j = 0; j < n && ok; ++j) {
      if (i == j || !entries[i][j].is_step()) continue;
      if (!entries[i][j].as_step().terminal().is_one()) {
        ok = false;
        w = "entry (" + points[i] + "," + points[j] + ") has terminal value " +
            entries[i][j].as_step().terminal().str() + " < 1";
      }
    }
  rep.add("FM6", ok, w);

  return rep;
}

FuzzyMetricSpace FuzzyMetricSpace::from_entries(std::vector<std::string> points,
                                                std::vector<std::vector<Distribution>> entries,
                                                TNorm tnorm) {
  check_point_labels(points);
  const int n = static_cast<int>(points.size());
  if (static_cast<int>(entries.size()) != n) throw ShapeMismatch("entry matrix has wrong row count");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n) throw ShapeMismatch("entry matrix row has wrong size");

  for (int i = 0; i < n; ++i) {
    if (!entries[i][i].is_point_one())
      throw DiagonalNotOne("diagonal entry (" + points[i] + "," + points[i] + ") must be PointOne");
    for (int j = i + 1; j < n; ++j) {
      if (entries[i][j] != entries[j][i])
        throw AsymmetricEntries("entry (" + points[i] + "," + points[j] + ") differs from (" +
                                points[j] + "," + points[i] + ")");
      if (entries[i][j].is_point_one())
        throw DiagonalNotOne("off-diagonal entry (" + points[i] + "," + points[j] +
                             ") must not be PointOne");
    }
  }
  check_one_family(points, entries);

  FuzzyMetricSpace s;
  s.points_ = std::move(points);
  s.tnorm_ = tnorm;
  s.e_.reserve(n * n);
  for (auto& row : entries)
    for (auto& e : row) s.e_.push_back(std::move(e));
  return s;
}

ValidationReport FuzzyMetricSpace::validate() const {
  std::vector<std::vector<Distribution>> rows(size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) rows[i].push_back(entry(i, j));
  return validate_raw(points_, rows, tnorm_);
}

bool FuzzyMetricSpace::is_step_family() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && !entry(i, j).is_step()) return false;
  return true;
}

bool FuzzyMetricSpace::is_scaled_family(Generator g) const {
  bool any = false;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (i == j) continue;
      if (!entry(i, j).is_scaled() || entry(i, j).as_scaled().generator() != g) return false;
      any = true;
    }
  return any || size() == 1;
}

FuzzyMetricSpace standard_from_metric(const FiniteMetric& d) {
  const int n = d.size();
  std::vector<std::vector<Distribution>> entries(n, std::vector<Distribution>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entries[i][j] = (i == j) ? Distribution::point_one() : Distribution::standard(d.dist(i, j));
  return FuzzyMetricSpace::from_entries(d.points(), std::move(entries), TNorm::Minimum);
}

FuzzyMetricSpace exponential_from_metric(const FiniteMetric& d) {
  const int n = d.size();
  std::vector<std::vector<Distribution>> entries(n, std::vector<Distribution>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entries[i][j] = (i == j) ? Distribution::point_one() : Distribution::exponential(d.dist(i, j));
  return FuzzyMetricSpace::from_entries(d.points(), std::move(entries), TNorm::Product);
}

}  // namespace kmb
