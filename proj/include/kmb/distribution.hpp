#pragma once

#include <variant>
#include <vector>

#include "kmb/grade.hpp"

namespace kmb {

/// The diagonal distribution: 0 at t = 0 and 1 for every t > 0.
struct PointOne {
  bool operator==(const PointOne&) const { return true; }
};

/// Nondecreasing left-continuous step function F : [0, inf) -> [0, 1] with
/// F(0) = 0, represented by strictly increasing positive breakpoints
/// t_1 < ... < t_k and strictly increasing values v_1 < ... < v_{k+1}:
///
///   F(t) = v_i  on (t_{i-1}, t_i]   (t_0 = 0),      F(t) = v_{k+1}  for t > t_k.
///
/// The value at a jump is the lower one, which is exactly left-continuity.
/// `make` canonicalizes: a leading zero breakpoint (its piece is empty) is
/// dropped and runs of equal values are merged, so structural equality
/// decides function equality.
class StepDistribution {
public:
  static StepDistribution make(std::vector<Rational> breakpoints, std::vector<Grade> values);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Grade>& values() const { return values_; }

  Grade eval(const Rational& t) const;
  /// lim_{s -> t+} F(s): the value of the piece just right of t.
  Grade right_limit(const Rational& t) const;
  const Grade& terminal() const { return values_.back(); }
  bool is_constant_one() const { return breaks_.empty() && values_[0].is_one(); }

  bool operator==(const StepDistribution& o) const {
    return breaks_ == o.breaks_ && values_ == o.values_;
  }

private:
  StepDistribution() = default;
  std::vector<Rational> breaks_;
  std::vector<Grade> values_;
};

enum class Generator { Standard, Exponential };

std::string to_string(Generator g);
Generator parse_generator(const std::string& name);  // "standard" | "exp"

/// Closed-form distribution G(t / d) for one of the two named generators
/// and an exact positive scale d:
///   Standard:     F(t) = t / (t + d)      (exact rational values)
///   Exponential:  F(t) = e^{-d / t}       (values irrational; comparisons
///                                          between same-family quantities
///                                          reduce to the scale d)
/// Both are 0 at t = 0 and strictly increase to 1.
class ScaledDistribution {
public:
  ScaledDistribution(Generator gen, Rational scale);

  Generator generator() const { return gen_; }
  const Rational& scale() const { return scale_; }

  bool operator==(const ScaledDistribution& o) const {
    return gen_ == o.gen_ && scale_ == o.scale_;
  }

private:
  Generator gen_;
  Rational scale_;
};

/// Result of a level query sup{ t | F(t) <= a }.  For the exponential family
/// the exact value is d / ln(1/a); it is carried symbolically as the scale d,
/// because every in-scope comparison shares the positive factor 1 / ln(1/a).
class Level {
public:
  enum class Kind { Finite, Infinite, ExpScaled };

  static Level finite(Rational v) { return Level(Kind::Finite, std::move(v)); }
  static Level infinite() { return Level(Kind::Infinite, Rational(0)); }
  static Level exp_scaled(Rational scale) { return Level(Kind::ExpScaled, std::move(scale)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const Rational& finite_value() const {
    if (kind_ != Kind::Finite) throw InvalidArgument("level is not a finite rational");
    return payload_;
  }
  /// For ExpScaled: the scale d of d / ln(1/a).
  const Rational& exp_scale() const {
    if (kind_ != Kind::ExpScaled) throw InvalidArgument("level is not exponential-symbolic");
    return payload_;
  }

  ExtRational as_ext() const {
    if (kind_ == Kind::Finite) return ExtRational(payload_);
    if (kind_ == Kind::Infinite) return ExtRational::infinity();
    throw InvalidArgument("exponential-symbolic level has no exact rational value");
  }

  /// Non-authoritative display value (section of the contract that is
  /// allowed to use floating point).
  double approx(const Grade& a) const;

  bool operator==(const Level& o) const { return kind_ == o.kind_ && payload_ == o.payload_; }

private:
  Level(Kind k, Rational p) : kind_(k), payload_(std::move(p)) {}
  Kind kind_;
  Rational payload_;
};

class Distribution;

/// The level function a |-> sup{ t | F(t) <= a } of a step distribution,
/// viewed as data: a nondecreasing right-continuous step function of
/// a in (0, 1) with values in [0, inf].
///
///   l(a) = levels[j]  for a in [abreaks[j-1], abreaks[j])   (piece j).
///
/// This is the Galois-dual view of a StepDistribution; conversion in both
/// directions is exact and its round trip is the identity on canonical
/// forms.  Sup-min convolution of distributions is pointwise addition here.
struct LevelProfile {
  std::vector<Grade> abreaks;        // strictly increasing, inside (0, 1)
  std::vector<ExtRational> levels;   // size abreaks.size() + 1, nondecreasing

  static LevelProfile of(const Distribution& f);  // Step or PointOne only
  ExtRational at(const Grade& a) const;
  LevelProfile plus(const LevelProfile& other) const;
  Distribution to_distribution() const;
  void canonicalize();
};

/// A distance distribution: one of the three representable families.
class Distribution {
public:
  Distribution() : v_(PointOne{}) {}

  static Distribution point_one() { return Distribution(); }
  /// Canonicalizes; a constant-1 step collapses to PointOne so that PointOne
  /// stays the unique representation of the diagonal.
  static Distribution step(std::vector<Rational> breakpoints, std::vector<Grade> values);
  static Distribution scaled(Generator gen, Rational scale);
  static Distribution standard(Rational scale) { return scaled(Generator::Standard, std::move(scale)); }
  static Distribution exponential(Rational scale) { return scaled(Generator::Exponential, std::move(scale)); }

  bool is_point_one() const { return std::holds_alternative<PointOne>(v_); }
  bool is_step() const { return std::holds_alternative<StepDistribution>(v_); }
  bool is_scaled() const { return std::holds_alternative<ScaledDistribution>(v_); }
  const StepDistribution& as_step() const { return std::get<StepDistribution>(v_); }
  const ScaledDistribution& as_scaled() const { return std::get<ScaledDistribution>(v_); }

  /// F(t), exact.  Unsupported for the exponential family (irrational);
  /// use eval_approx there.
  Grade eval(const Rational& t) const;
  double eval_approx(const Rational& t) const;

  /// sup{ t | F(t) <= a } = inf{ t | F(t) > a }, for 0 < a < 1.
  Level level(const Grade& a) const;

  bool operator==(const Distribution& o) const { return v_ == o.v_; }
  bool operator!=(const Distribution& o) const { return !(v_ == o.v_); }

  std::string str() const;

private:
  explicit Distribution(std::variant<PointOne, StepDistribution, ScaledDistribution> v)
      : v_(std::move(v)) {}
  std::variant<PointOne, StepDistribution, ScaledDistribution> v_;
};

/// Sup-min convolution (F (*) G)(t) = sup_{s+r=t, s,r>=0} min(F(s), G(r)).
/// Exact: computed through the level-addition identity
/// level(F (*) G, a) = level(F, a) + level(G, a).  PointOne is the identity;
/// same-generator scaled families convolve by adding scales.
/// Throws MixedVariant across different families.
Distribution supmin_convolve(const Distribution& f, const Distribution& g);

/// F(t) <= G(t) for all t >= 0, decided exactly.
bool pointwise_le(const Distribution& f, const Distribution& g);

/// inf_{t>0} (F(t) -> G(t)) with the Goedel residuum; exact.
/// Equals 1 iff pointwise_le(f, g).
Grade godel_residual_inf(const Distribution& f, const Distribution& g);

}  // namespace kmb
