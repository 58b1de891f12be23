#include "kmb/grade.hpp"

namespace kmb {

TNorm parse_tnorm(const std::string& name) {
  if (name == "min") return TNorm::Minimum;
  if (name == "prod") return TNorm::Product;
  if (name == "luk") return TNorm::Lukasiewicz;
  throw ParseError("unknown t-norm '" + name + "' (expected min|prod|luk)");
}

std::string to_string(TNorm t) {
  switch (t) {
    case TNorm::Minimum: return "min";
    case TNorm::Product: return "prod";
    case TNorm::Lukasiewicz: return "luk";
  }
  return "?";
}

Grade tnorm_apply(TNorm kind, const Grade& a, const Grade& b) {
  switch (kind) {
    case TNorm::Minimum:
      return min(a, b);
    case TNorm::Product:
      return Grade(a.value() * b.value());
    case TNorm::Lukasiewicz: {
      Rational s = a.value() + b.value() - 1;
      return s > 0 ? Grade(s) : Grade::zero();
    }
  }
  throw InvalidArgument("unreachable t-norm tag");
}

Grade residuum(TNorm kind, const Grade& a, const Grade& b) {
  if (a <= b) return Grade::one();
  switch (kind) {
    case TNorm::Minimum:  // Goedel
      return b;
    case TNorm::Product:  // Goguen; a > b >= 0 here, so a > 0
      return Grade(b.value() / a.value());
    case TNorm::Lukasiewicz: {
      Rational r = Rational(1) - a.value() + b.value();
      return r < 1 ? Grade(r) : Grade::one();
    }
  }
  throw InvalidArgument("unreachable t-norm tag");
}

}  // namespace kmb
