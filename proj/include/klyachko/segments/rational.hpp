#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace klyachko {

using Rational = boost::rational<std::int64_t>;

// Compare only against Rational operands: Boost 1.74's mixed comparisons
// (r == 0) recurse forever under C++20 rewritten operators.
inline const Rational kZero{0};
inline const Rational kOne{1};
inline const Rational kHalf{1, 2};

inline bool is_integer(const Rational& x) noexcept { return x.denominator() == 1; }

/// "3", "-1/2"
std::string to_string(const Rational& x);

/// Parses ["-"] int ["/" int]; throws ParseError (position relative to the
/// start of text) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

inline std::int64_t floor_of(const Rational& x) noexcept {
  const auto n = x.numerator();
  const auto d = x.denominator();  // always positive
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

}  // namespace klyachko
