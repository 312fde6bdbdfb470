#include "numwalk/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace numwalk {

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("rational: empty number");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("rational: sign without digits");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("rational: bad character in '" + std::string(text) + "'");
  return Int(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::domain_error("rational: zero denominator");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace numwalk
