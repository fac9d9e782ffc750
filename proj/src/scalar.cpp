#include "ks/scalar.hpp"

#include <sstream>

namespace ks {
namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Splits "a,b" at the top-level comma (no nesting inside RealQuad brackets).
std::pair<std::string, std::string> split2(const std::string& s,
                                           const std::string& what) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw parse_error("expected two comma-separated parts in " + what + ": '" + s + "'");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) throw parse_error("empty rational literal");
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(strip(s.substr(0, slash)));
    Int den(strip(s.substr(slash + 1)));
    if (den == 0) throw parse_error("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw parse_error("bad rational literal '" + s + "'");
  }
}

RealQuad parse_real_quad(const std::string& text, std::int64_t d) {
  std::string s = strip(text);
  if (s.empty()) throw parse_error("empty scalar literal");
  if (s.front() != '[') return RealQuad(parse_rational(s));
  if (s.back() != ']') throw parse_error("unterminated '[' in '" + s + "'");
  auto [a, b] = split2(s.substr(1, s.size() - 2), "RealQuad literal");
  return RealQuad(parse_rational(a), parse_rational(b), d);
}

ComplexQuad parse_complex_quad(const std::string& text, std::int64_t d) {
  std::string s = strip(text);
  if (s.empty()) throw parse_error("empty scalar literal");
  if (s.front() != '{') return ComplexQuad(parse_real_quad(s, d));
  if (s.back() != '}') throw parse_error("unterminated '{' in '" + s + "'");
  auto [re_part, im_part] = split2(s.substr(1, s.size() - 2), "ComplexQuad literal");
  re_part = strip(re_part);
  im_part = strip(im_part);
  if (re_part.rfind("re:", 0) != 0 || im_part.rfind("im:", 0) != 0)
    throw parse_error("expected {re:...,im:...} in '" + s + "'");
  return ComplexQuad(parse_real_quad(re_part.substr(3), d),
                     parse_real_quad(im_part.substr(3), d));
}

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

std::string to_string(const RealQuad& x) {
  if (x.is_rational()) return to_string(x.a());
  return "[" + to_string(x.a()) + "," + to_string(x.b()) + "]";
}

std::string to_string(const ComplexQuad& x) {
  if (x.is_real()) return to_string(x.re());
  auto part = [](const RealQuad& r) {
    return "[" + to_string(r.a()) + "," + to_string(r.b()) + "]";
  };
  return "{re:" + part(x.re()) + ",im:" + part(x.im()) + "}";
}

}  // namespace ks
