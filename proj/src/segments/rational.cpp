#include "klyachko/segments/rational.hpp"

#include <cctype>
#include <climits>

#include "klyachko/error.hpp"

namespace klyachko {

std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_int = [&](const char* what) {
    const std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (v > (INT64_MAX - 9) / 10) throw ParseError(start, std::string(what) + " too large");
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw ParseError(start, std::string("expected ") + what);
    return v;
  };
  std::int64_t num = read_int("integer");
  std::int64_t den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    den = read_int("denominator");
    if (den == 0) throw ParseError(den_pos, "zero denominator");
  }
  if (pos != text.size()) throw ParseError(pos, "trailing characters in rational");
  return Rational(negative ? -num : num, den);
}

}  // namespace klyachko
