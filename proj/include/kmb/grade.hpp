#pragma once

#include <string>

#include "kmb/rational.hpp"

namespace kmb {

/// The three classical t-norms.  A closed enumeration: every operation that
/// takes a t-norm switches over these tags.
enum class TNorm { Minimum, Product, Lukasiewicz };

TNorm parse_tnorm(const std::string& name);   // "min" | "prod" | "luk"
std::string to_string(TNorm t);

/// A membership degree: an exact rational confined to [0, 1].
class Grade {
public:
  Grade() : v_(0) {}
  explicit Grade(Rational v) : v_(std::move(v)) {
    if (v_ < 0 || v_ > 1) throw InvalidArgument("grade outside [0,1]: " + kmb::to_string(v_));
  }
  static Grade zero() { return Grade(); }
  static Grade one() { return Grade(Rational(1)); }
  static Grade parse(const std::string& s) { return Grade(parse_rational(s)); }

  const Rational& value() const { return v_; }
  std::string str() const { return kmb::to_string(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  bool operator==(const Grade& o) const { return v_ == o.v_; }
  bool operator!=(const Grade& o) const { return v_ != o.v_; }
  bool operator<(const Grade& o) const { return v_ < o.v_; }
  bool operator<=(const Grade& o) const { return v_ <= o.v_; }
  bool operator>(const Grade& o) const { return v_ > o.v_; }
  bool operator>=(const Grade& o) const { return v_ >= o.v_; }

private:
  Rational v_;
};

inline Grade min(const Grade& a, const Grade& b) { return a <= b ? a : b; }
inline Grade max(const Grade& a, const Grade& b) { return a >= b ? a : b; }

/// a * b under the selected t-norm.
Grade tnorm_apply(TNorm kind, const Grade& a, const Grade& b);

/// The residual implication of the selected t-norm:
/// a -> b = sup { c | a * c <= b }, in closed form.  Satisfies the adjunction
/// a * c <= b  <=>  c <= a -> b.
Grade residuum(TNorm kind, const Grade& a, const Grade& b);

}  // namespace kmb
