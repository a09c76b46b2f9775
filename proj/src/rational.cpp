#include "tcd/rational.hpp"

#include <regex>

#include "tcd/errors.hpp"

namespace tcd {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw BadParam("not a rational number: '" + text + "'");
  mpz_class num(m[1].str());
  mpz_class den(m[2].matched ? m[2].str() : "1");
  if (den == 0) throw BadParam("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tcd
