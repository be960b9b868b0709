#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "klyachko/error.hpp"
#include "klyachko/segments/rational.hpp"

namespace klyachko {

/// Expression tree over the atoms L(j) = L_sigma(j), Res = res_{s=1} L_sigma(s),
/// Alpha = prod_{v in S} alpha_v(sigma_v; g_v) and rational numerals.
struct PeriodExpression {
  enum class Kind { LValue, Residue, Alpha, Numeral, Product, Quotient, Power, AbsSquare };

  Kind kind = Kind::Numeral;
  int index = 0;  // j for LValue, exponent for Power
  Rational numeral{1};
  std::vector<PeriodExpression> children;

  static PeriodExpression lval(int j);
  static PeriodExpression residue();
  static PeriodExpression alpha();
  static PeriodExpression number(Rational value);
  /// Zero factors give the numeral 1, one factor is returned unchanged.
  static PeriodExpression product(std::vector<PeriodExpression> factors);
  static PeriodExpression quotient(PeriodExpression num, PeriodExpression den);
  /// Exponent 1 returns the base unchanged.
  static PeriodExpression power(PeriodExpression base, int exponent);
  static PeriodExpression abs_square(PeriodExpression x);

  bool is_atom() const noexcept {
    return kind == Kind::LValue || kind == Kind::Residue || kind == Kind::Alpha ||
           kind == Kind::Numeral;
  }

  friend bool operator==(const PeriodExpression&, const PeriodExpression&) = default;
};

/// "L(3)", "Res", "Alpha", or the numeral.
std::string atom_name(const PeriodExpression& atom);

/// Canonical text, e.g. "L(2)*L(4)/(Res*L(3))".
std::string to_string(const PeriodExpression& e);

/// {kind, atom} for leaves, {kind, children} (plus exponent for powers) otherwise.
nlohmann::json to_json(const PeriodExpression& e);
PeriodExpression period_from_json(const nlohmann::json& j);

/// |period|^2 of the L^2-normalized spherical vector of L(sigma, t).
PeriodExpression period_formula(int t);

/// ||E_{-1}(phi_0^{(t)})||^{-2} = L(2)...L(t) / Res^{t-1}.
PeriodExpression norm_constant(int t);

/// Scalar of M_{-1}(w_Q) on phi_0^{(2m+1)}: Res / L(2m+1).
PeriodExpression intertwining_eigenvalue(int t);

/// l_{Sp(2mr)} of the residual Eisenstein series on G_{2mr}:
/// Res^{m-1} / (L(3) L(5) ... L(2m-1)).
PeriodExpression symplectic_residual_period(int m);

/// The odd period assembled from its parts, before any cancellation:
/// (Alpha/Res) * norm_constant(t) * eigenvalue^2 * symplectic period^2.
PeriodExpression odd_period_from_components(int t);

/// Coefficient times a product of atom powers. Atoms are treated as real,
/// so |x|^2 = x^2.
struct Monomial {
  Rational coefficient{1};
  std::map<std::string, int> exponents;  // zero exponents removed

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial to_monomial(const PeriodExpression& e);

template <class T>
using AtomAssignment = std::map<std::string, T>;

namespace detail {
template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return boost::rational_cast<T>(r);
  }
}
}  // namespace detail

/// Exact for T = Rational. Raises MissingAtom or DivisionByZero.
template <class T>
T evaluate_period(const PeriodExpression& e, const AtomAssignment<T>& values) {
  using Kind = PeriodExpression::Kind;
  switch (e.kind) {
    case Kind::Numeral:
      return detail::from_rational<T>(e.numeral);
    case Kind::LValue:
    case Kind::Residue:
    case Kind::Alpha: {
      const auto it = values.find(atom_name(e));
      if (it == values.end()) throw Error(ErrorCode::MissingAtom, "no value for " + atom_name(e));
      return it->second;
    }
    case Kind::Product: {
      T acc = T(1);
      for (const auto& c : e.children) acc = acc * evaluate_period(c, values);
      return acc;
    }
    case Kind::Quotient: {
      const T num = evaluate_period(e.children.at(0), values);
      const T den = evaluate_period(e.children.at(1), values);
      if (den == T(0)) throw Error(ErrorCode::DivisionByZero, "denominator " + to_string(e.children[1]));
      return num / den;
    }
    case Kind::Power: {
      const T base = evaluate_period(e.children.at(0), values);
      int n = e.index;
      if (n < 0 && base == T(0)) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
      T acc = T(1);
      for (int i = 0; i < (n < 0 ? -n : n); ++i) acc = acc * base;
      return n < 0 ? T(1) / acc : acc;
    }
    case Kind::AbsSquare: {
      const T x = evaluate_period(e.children.at(0), values);
      return x * x;
    }
  }
  throw Error(ErrorCode::InvariantViolation, "unknown expression kind");
}

}  // namespace klyachko
