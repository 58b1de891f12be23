#include "kmb/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kmb {

// ---------------------------------------------------------------------------
// StepDistribution

StepDistribution StepDistribution::make(std::vector<Rational> breakpoints,
                                        std::vector<Grade> values) {
  if (values.size() != breakpoints.size() + 1)
    throw InvalidArgument("step distribution needs one more value than breakpoints");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i] < 0) throw InvalidArgument("negative breakpoint");
    if (i > 0 && !(breakpoints[i - 1] < breakpoints[i]))
      throw InvalidArgument("breakpoints must be strictly increasing");
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (!(values[i] <= values[i + 1]))
      throw InvalidArgument("step values must be nondecreasing");
  }

  // A breakpoint at 0 spans the empty piece (0, 0]; drop it.
  if (!breakpoints.empty() && breakpoints[0] == 0) {
    breakpoints.erase(breakpoints.begin());
    values.erase(values.begin());
  }
  // Merge runs of equal values.
  std::vector<Rational> cb;
  std::vector<Grade> cv;
  cv.push_back(values[0]);
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (values[i + 1] == cv.back()) continue;
    cb.push_back(breakpoints[i]);
    cv.push_back(values[i + 1]);
  }

  StepDistribution d;
  d.breaks_ = std::move(cb);
  d.values_ = std::move(cv);
  return d;
}

Grade StepDistribution::eval(const Rational& t) const {
  if (t < 0) throw InvalidArgument("negative time");
  if (t == 0) return Grade::zero();
  // piece (t_{j-1}, t_j] contains t  <=>  j = first index with breaks[j] >= t
  std::size_t j = std::lower_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin();
  return values_[j];
}

Grade StepDistribution::right_limit(const Rational& t) const {
  if (t < 0) throw InvalidArgument("negative time");
  std::size_t j = std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin();
  return values_[j];
}

// ---------------------------------------------------------------------------
// ScaledDistribution

std::string to_string(Generator g) {
  return g == Generator::Standard ? "standard" : "exp";
}

Generator parse_generator(const std::string& name) {
  if (name == "standard") return Generator::Standard;
  if (name == "exp") return Generator::Exponential;
  throw ParseError("unknown generator '" + name + "' (expected standard|exp)");
}

ScaledDistribution::ScaledDistribution(Generator gen, Rational scale)
    : gen_(gen), scale_(std::move(scale)) {
  if (!(scale_ > 0)) throw InvalidArgument("scale must be positive");
}

// ---------------------------------------------------------------------------
// Level

double Level::approx(const Grade& a) const {
  switch (kind_) {
    case Kind::Finite: return to_double(payload_);
    case Kind::Infinite: return std::numeric_limits<double>::infinity();
    case Kind::ExpScaled: return to_double(payload_) / std::log(1.0 / to_double(a.value()));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Distribution

Distribution Distribution::step(std::vector<Rational> breakpoints, std::vector<Grade> values) {
  StepDistribution s = StepDistribution::make(std::move(breakpoints), std::move(values));
  if (s.is_constant_one()) return point_one();
  return Distribution(std::variant<PointOne, StepDistribution, ScaledDistribution>(std::move(s)));
}

Distribution Distribution::scaled(Generator gen, Rational scale) {
  return Distribution(std::variant<PointOne, StepDistribution, ScaledDistribution>(
      ScaledDistribution(gen, std::move(scale))));
}

Grade Distribution::eval(const Rational& t) const {
  if (t < 0) throw InvalidArgument("negative time");
  if (is_point_one()) return t == 0 ? Grade::zero() : Grade::one();
  if (is_step()) return as_step().eval(t);
  const auto& s = as_scaled();
  if (s.generator() == Generator::Exponential)
    throw UnsupportedVariant("exponential values are irrational; use eval_approx");
  if (t == 0) return Grade::zero();
  return Grade(t / (t + s.scale()));
}

double Distribution::eval_approx(const Rational& t) const {
  if (is_scaled() && as_scaled().generator() == Generator::Exponential) {
    if (t == 0) return 0.0;
    return std::exp(-to_double(as_scaled().scale()) / to_double(t));
  }
  return to_double(eval(t).value());
}

Level Distribution::level(const Grade& a) const {
  if (a.is_zero() || a.is_one()) throw InvalidArgument("level index must satisfy 0 < a < 1");
  if (is_point_one()) return Level::finite(Rational(0));  // F(t) = 1 > a for all t > 0
  if (is_step()) {
    const auto& s = as_step();
    const auto& v = s.values();
    // count of values <= a; values are strictly increasing
    std::size_t cnt = std::upper_bound(v.begin(), v.end(), a) - v.begin();
    if (cnt == 0) return Level::finite(Rational(0));
    if (cnt == v.size()) return Level::infinite();
    return Level::finite(s.breakpoints()[cnt - 1]);
  }
  const auto& s = as_scaled();
  if (s.generator() == Generator::Standard) {
    // t/(t+d) <= a  <=>  t <= a d / (1-a)
    return Level::finite(a.value() * s.scale() / (Rational(1) - a.value()));
  }
  // e^{-d/t} <= a  <=>  t <= d / ln(1/a)
  return Level::exp_scaled(s.scale());
}

std::string Distribution::str() const {
  if (is_point_one()) return "one";
  if (is_scaled()) {
    const auto& s = as_scaled();
    return to_string(s.generator()) + "(" + to_string(s.scale()) + ")";
  }
  const auto& s = as_step();
  std::ostringstream os;
  os << "step t:[";
  for (std::size_t i = 0; i < s.breakpoints().size(); ++i)
    os << (i ? "," : "") << to_string(s.breakpoints()[i]);
  os << "] v:[";
  for (std::size_t i = 0; i < s.values().size(); ++i)
    os << (i ? "," : "") << s.values()[i].str();
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// LevelProfile

LevelProfile LevelProfile::of(const Distribution& f) {
  LevelProfile p;
  if (f.is_point_one()) {
    p.levels.push_back(ExtRational(Rational(0)));
    return p;
  }
  if (!f.is_step()) throw UnsupportedVariant("level profiles exist for step distributions only");
  const auto& s = f.as_step();
  const auto& v = s.values();
  const auto& t = s.breakpoints();
  const std::size_t top = v.size();  // count value k+1 means "never exceeded"

  auto level_for_count = [&](std::size_t cnt) -> ExtRational {
    if (cnt == 0) return ExtRational(Rational(0));
    if (cnt == top) return ExtRational::infinity();
    return ExtRational(t[cnt - 1]);
  };

  std::size_t cnt0 = (!v.empty() && v[0].is_zero()) ? 1 : 0;
  p.levels.push_back(level_for_count(cnt0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero() || v[i].is_one()) continue;
    p.abreaks.push_back(v[i]);
    p.levels.push_back(level_for_count(i + 1));
  }
  return p;
}

ExtRational LevelProfile::at(const Grade& a) const {
  if (a.is_zero() || a.is_one()) throw InvalidArgument("profile query needs 0 < a < 1");
  std::size_t j = std::upper_bound(abreaks.begin(), abreaks.end(), a) - abreaks.begin();
  return levels[j];
}

void LevelProfile::canonicalize() {
  std::vector<Grade> cb;
  std::vector<ExtRational> cl;
  cl.push_back(levels[0]);
  for (std::size_t i = 0; i < abreaks.size(); ++i) {
    if (levels[i + 1] == cl.back()) continue;
    cb.push_back(abreaks[i]);
    cl.push_back(levels[i + 1]);
  }
  abreaks = std::move(cb);
  levels = std::move(cl);
}

LevelProfile LevelProfile::plus(const LevelProfile& other) const {
  LevelProfile out;
  std::vector<Grade> merged;
  std::merge(abreaks.begin(), abreaks.end(), other.abreaks.begin(), other.abreaks.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  out.abreaks = merged;
  out.levels.push_back(levels[0] + other.levels[0]);
  for (const auto& a : merged) out.levels.push_back(at(a) + other.at(a));
  out.canonicalize();
  return out;
}

Distribution LevelProfile::to_distribution() const {
  // Invert M(t) = sup{ a | l(a) < t }.  Group pieces into runs of equal
  // finite level u; the run ending at a-coordinate alpha contributes the jump
  // of M up to alpha at t = u.  Infinite pieces contribute nothing (they cap
  // the terminal value below 1).
  std::vector<Rational> run_level;
  std::vector<Grade> run_end;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (levels[j].is_infinite()) break;  // monotone, so the rest is infinite too
    Grade end = (j < abreaks.size()) ? abreaks[j] : Grade::one();
    if (!run_level.empty() && levels[j].finite_value() == run_level.back()) {
      run_end.back() = end;
    } else {
      run_level.push_back(levels[j].finite_value());
      run_end.push_back(end);
    }
  }

  if (run_level.empty())
    return Distribution::step({}, {Grade::zero()});  // l = inf everywhere: M = 0

  std::vector<Rational> breaks;
  std::vector<Grade> values;
  std::size_t start = 0;
  if (run_level[0] == 0) {
    values.push_back(run_end[0]);
    start = 1;
  } else {
    values.push_back(Grade::zero());
  }
  for (std::size_t i = start; i < run_level.size(); ++i) {
    breaks.push_back(run_level[i]);
    values.push_back(run_end[i]);
  }
  return Distribution::step(std::move(breaks), std::move(values));
}

// ---------------------------------------------------------------------------
// Pointwise algebra

namespace {

/// Merged piece decomposition of (0, inf) for two step functions: the
/// half-open pieces cut at the union of both breakpoint sets, plus the
/// unbounded terminal piece.  Both functions are constant on each piece.
struct MergedPieces {
  std::vector<Rational> cuts;  // sorted union of breakpoints
  std::size_t count() const { return cuts.size() + 1; }
};

MergedPieces merge_breakpoints(const StepDistribution& f, const StepDistribution& g) {
  MergedPieces m;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(m.cuts));
  m.cuts.erase(std::unique(m.cuts.begin(), m.cuts.end()), m.cuts.end());
  return m;
}

/// Value of h on merged piece i (pieces are (cut_{i-1}, cut_i], cut_{-1}=0).
Grade value_on_piece(const StepDistribution& h, const MergedPieces& m, std::size_t i) {
  return i == 0 ? h.right_limit(Rational(0)) : h.right_limit(m.cuts[i - 1]);
}

}  // namespace

Distribution supmin_convolve(const Distribution& f, const Distribution& g) {
  if (f.is_point_one()) return g;  // identity: the r = 0 split gives min(F(t), 1)
  if (g.is_point_one()) return f;
  if (f.is_step() && g.is_step())
    return LevelProfile::of(f).plus(LevelProfile::of(g)).to_distribution();
  if (f.is_scaled() && g.is_scaled() &&
      f.as_scaled().generator() == g.as_scaled().generator()) {
    return Distribution::scaled(f.as_scaled().generator(),
                                f.as_scaled().scale() + g.as_scaled().scale());
  }
  throw MixedVariant("cannot convolve " + f.str() + " with " + g.str());
}

bool pointwise_le(const Distribution& f, const Distribution& g) {
  if (g.is_point_one()) return true;
  if (f.is_point_one()) return false;  // canonical g attains a value < 1 somewhere
  if (f.is_step() && g.is_step()) {
    const auto& fs = f.as_step();
    const auto& gs = g.as_step();
    MergedPieces m = merge_breakpoints(fs, gs);
    for (std::size_t i = 0; i < m.count(); ++i) {
      if (value_on_piece(fs, m, i) > value_on_piece(gs, m, i)) return false;
    }
    return true;
  }
  if (f.is_scaled() && g.is_scaled() &&
      f.as_scaled().generator() == g.as_scaled().generator()) {
    return f.as_scaled().scale() >= g.as_scaled().scale();
  }
  throw MixedVariant("cannot compare " + f.str() + " with " + g.str());
}

Grade godel_residual_inf(const Distribution& f, const Distribution& g) {
  if (g.is_point_one()) return Grade::one();
  if (f.is_point_one()) {
    // inf_t (1 -> G(t)) = inf_{t>0} G(t)
    if (g.is_step()) return g.as_step().values()[0];
    return Grade::zero();  // scaled families vanish as t -> 0+
  }
  if (f.is_step() && g.is_step()) {
    const auto& fs = f.as_step();
    const auto& gs = g.as_step();
    MergedPieces m = merge_breakpoints(fs, gs);
    Grade best = Grade::one();
    for (std::size_t i = 0; i < m.count(); ++i) {
      Grade vf = value_on_piece(fs, m, i);
      Grade vg = value_on_piece(gs, m, i);
      if (vf > vg && vg < best) best = vg;  // Goedel residuum on a piece
    }
    return best;
  }
  if (f.is_scaled() && g.is_scaled() &&
      f.as_scaled().generator() == g.as_scaled().generator()) {
    // If F > G anywhere then F > G on all of (0, inf) and inf_t G(t) = 0.
    return f.as_scaled().scale() >= g.as_scaled().scale() ? Grade::one() : Grade::zero();
  }
  throw MixedVariant("cannot residuate " + f.str() + " with " + g.str());
}

}  // namespace kmb
