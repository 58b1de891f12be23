#pragma once

#include <gmpxx.h>

#include <string>

#include "kmb/errors.hpp"

namespace kmb {

/// Exact arbitrary-precision rational.  All core arithmetic in this library
/// is performed on these; floating point appears only in display helpers.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal ("0.5", "-1.25").
Rational parse_rational(const std::string& text);

/// Canonical serialization: lowest terms, "/1" omitted ("1/2", "3", "0").
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// [0, +inf] with the usual ordering and saturating addition; the codomain
/// of level queries, where +inf means "the threshold is never exceeded".
class ExtRational {
public:
  ExtRational() : infinite_(false), value_(0) {}
  explicit ExtRational(Rational v) : infinite_(false), value_(std::move(v)) {}
  static ExtRational infinity() {
    ExtRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& finite_value() const {
    if (infinite_) throw InvalidArgument("finite_value() on infinite ExtRational");
    return value_;
  }

  ExtRational operator+(const ExtRational& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return ExtRational(value_ + o.value_);
  }

  bool operator==(const ExtRational& o) const {
    if (infinite_ != o.infinite_) return false;
    return infinite_ || value_ == o.value_;
  }
  bool operator!=(const ExtRational& o) const { return !(*this == o); }
  bool operator<(const ExtRational& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
  }
  bool operator<=(const ExtRational& o) const { return *this < o || *this == o; }
  bool operator>(const ExtRational& o) const { return o < *this; }
  bool operator>=(const ExtRational& o) const { return o <= *this; }

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

private:
  bool infinite_;
  Rational value_;
};

}  // namespace kmb
