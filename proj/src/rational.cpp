#include "kmb/rational.hpp"

#include <cctype>

namespace kmb {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Rational parse_integer(const std::string& s) {
  mpz_class z;
  if (z.set_str(s, 10) != 0) throw ParseError("not a number: '" + s + "'");
  return Rational(z);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty number");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw ParseError("malformed fraction: '" + text + "'");
    Rational n = parse_integer(num);
    Rational d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    Rational r = n / d;
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string intpart = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !intpart.empty() && intpart[0] == '-';
    if (!intpart.empty() && (intpart[0] == '-' || intpart[0] == '+')) intpart.erase(intpart.begin());
    if (intpart.empty()) intpart = "0";
    if (frac.empty()) frac = "0";
    if (!is_integer_literal(intpart) || !is_integer_literal(frac))
      throw ParseError("malformed decimal: '" + text + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r = Rational(parse_integer(intpart) * scale + parse_integer(frac)) / Rational(scale);
    if (neg) r = -r;
    r.canonicalize();
    return r;
  }

  if (!is_integer_literal(s)) throw ParseError("not a number: '" + text + "'");
  return parse_integer(s);
}

std::string to_string(const Rational& r) {
  return r.get_str();
}

double to_double(const Rational& r) {
  return r.get_d();
}

}  // namespace kmb
