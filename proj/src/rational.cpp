#include "cliquecover/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace cliquecover {

std::string to_string(const Rational& r) {
  std::ostringstream ss;
  ss << r;
  return ss.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

}  // namespace cliquecover
