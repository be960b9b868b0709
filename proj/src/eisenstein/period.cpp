#include "klyachko/eisenstein/period.hpp"

namespace klyachko {

using Kind = PeriodExpression::Kind;

PeriodExpression PeriodExpression::lval(int j) {
  if (j < 2) throw Error(ErrorCode::InvalidArgument, "L(j) atoms need j >= 2");
  PeriodExpression e;
  e.kind = Kind::LValue;
  e.index = j;
  return e;
}

PeriodExpression PeriodExpression::residue() {
  PeriodExpression e;
  e.kind = Kind::Residue;
  return e;
}

PeriodExpression PeriodExpression::alpha() {
  PeriodExpression e;
  e.kind = Kind::Alpha;
  return e;
}

PeriodExpression PeriodExpression::number(Rational value) {
  PeriodExpression e;
  e.kind = Kind::Numeral;
  e.numeral = value;
  return e;
}

PeriodExpression PeriodExpression::product(std::vector<PeriodExpression> factors) {
  if (factors.empty()) return number(1);
  if (factors.size() == 1) return std::move(factors.front());
  PeriodExpression e;
  e.kind = Kind::Product;
  e.children = std::move(factors);
  return e;
}

PeriodExpression PeriodExpression::quotient(PeriodExpression num, PeriodExpression den) {
  PeriodExpression e;
  e.kind = Kind::Quotient;
  e.children = {std::move(num), std::move(den)};
  return e;
}

PeriodExpression PeriodExpression::power(PeriodExpression base, int exponent) {
  if (exponent == 0) return number(1);
  if (exponent == 1) return base;
  PeriodExpression e;
  e.kind = Kind::Power;
  e.index = exponent;
  e.children = {std::move(base)};
  return e;
}

PeriodExpression PeriodExpression::abs_square(PeriodExpression x) {
  PeriodExpression e;
  e.kind = Kind::AbsSquare;
  e.children = {std::move(x)};
  return e;
}

std::string atom_name(const PeriodExpression& atom) {
  switch (atom.kind) {
    case Kind::LValue:
      return "L(" + std::to_string(atom.index) + ")";
    case Kind::Residue:
      return "Res";
    case Kind::Alpha:
      return "Alpha";
    case Kind::Numeral:
      return to_string(atom.numeral);
    default:
      throw Error(ErrorCode::InvalidArgument, "not an atom");
  }
}

namespace {

bool bare_numeral(const PeriodExpression& e) {
  return e.kind == Kind::Numeral && is_integer(e.numeral) && e.numeral >= kZero;
}

// Atoms and nonnegative integers never need parentheses.
std::string wrapped(const PeriodExpression& e, bool wrap) {
  const std::string s = to_string(e);
  return wrap ? "(" + s + ")" : s;
}

bool simple(const PeriodExpression& e) {
  return e.is_atom() ? (e.kind != Kind::Numeral || bare_numeral(e)) : false;
}

}  // namespace

std::string to_string(const PeriodExpression& e) {
  switch (e.kind) {
    case Kind::LValue:
    case Kind::Residue:
    case Kind::Alpha:
    case Kind::Numeral:
      return atom_name(e);
    case Kind::Product: {
      std::string out;
      for (const auto& c : e.children) {
        if (!out.empty()) out += "*";
        out += wrapped(c, c.kind == Kind::Quotient || c.kind == Kind::Product ||
                              (c.kind == Kind::Numeral && !bare_numeral(c)));
      }
      return out;
    }
    case Kind::Quotient: {
      const auto& num = e.children[0];
      const auto& den = e.children[1];
      return wrapped(num, num.kind == Kind::Quotient || (num.kind == Kind::Numeral && !bare_numeral(num))) +
             "/" + wrapped(den, !simple(den) && den.kind != Kind::Power && den.kind != Kind::AbsSquare);
    }
    case Kind::Power: {
      const std::string exp = e.index < 0 ? "(" + std::to_string(e.index) + ")" : std::to_string(e.index);
      return wrapped(e.children[0], !simple(e.children[0])) + "^" + exp;
    }
    case Kind::AbsSquare:
      return "|" + to_string(e.children[0]) + "|^2";
  }
  return {};
}

nlohmann::json to_json(const PeriodExpression& e) {
  if (e.is_atom()) return {{"kind", "atom"}, {"atom", atom_name(e)}};
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : e.children) children.push_back(to_json(c));
  switch (e.kind) {
    case Kind::Product:
      return {{"kind", "product"}, {"children", children}};
    case Kind::Quotient:
      return {{"kind", "quotient"}, {"children", children}};
    case Kind::Power:
      return {{"kind", "power"}, {"exponent", e.index}, {"children", children}};
    default:
      return {{"kind", "abs_square"}, {"children", children}};
  }
}

PeriodExpression period_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "atom") {
    const std::string atom = j.at("atom").get<std::string>();
    if (atom == "Res") return PeriodExpression::residue();
    if (atom == "Alpha") return PeriodExpression::alpha();
    if (atom.size() > 3 && atom.rfind("L(", 0) == 0 && atom.back() == ')') {
      return PeriodExpression::lval(std::stoi(atom.substr(2, atom.size() - 3)));
    }
    return PeriodExpression::number(parse_rational(atom));
  }
  std::vector<PeriodExpression> children;
  for (const auto& c : j.at("children")) children.push_back(period_from_json(c));
  PeriodExpression e;
  e.children = std::move(children);
  if (kind == "product") {
    e.kind = Kind::Product;
  } else if (kind == "quotient" && e.children.size() == 2) {
    e.kind = Kind::Quotient;
  } else if (kind == "power" && e.children.size() == 1) {
    e.kind = Kind::Power;
    e.index = j.at("exponent").get<int>();
  } else if (kind == "abs_square" && e.children.size() == 1) {
    e.kind = Kind::AbsSquare;
  } else {
    throw Error(ErrorCode::InvalidArgument, "malformed expression node of kind " + kind);
  }
  return e;
}

namespace {

std::vector<PeriodExpression> lvals(int from, int to, int step) {
  std::vector<PeriodExpression> out;
  for (int j = from; j <= to; j += step) out.push_back(PeriodExpression::lval(j));
  return out;
}

}  // namespace

PeriodExpression period_formula(int t) {
  using E = PeriodExpression;
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "period formula needs t >= 1");
  const int m = t / 2;
  if (t % 2 == 0) {
    std::vector<E> den{E::residue()};
    for (auto& l : lvals(3, 2 * m - 1, 2)) den.push_back(std::move(l));
    return E::quotient(E::product(lvals(2, 2 * m, 2)), E::product(std::move(den)));
  }
  std::vector<E> factors{E::quotient(E::alpha(), E::residue())};
  for (int j = 1; j <= m; ++j) factors.push_back(E::quotient(E::lval(2 * j), E::lval(2 * j + 1)));
  return E::product(std::move(factors));
}

PeriodExpression norm_constant(int t) {
  using E = PeriodExpression;
  if (t < 2) throw Error(ErrorCode::InvalidArgument, "norm constant needs t >= 2");
  return E::quotient(E::product(lvals(2, t, 1)), E::power(E::residue(), t - 1));
}

PeriodExpression intertwining_eigenvalue(int t) {
  using E = PeriodExpression;
  if (t < 3 || t % 2 == 0) {
    throw Error(ErrorCode::UnsupportedComposition, "eigenvalue of M(w_Q) needs odd t >= 3");
  }
  return E::quotient(E::residue(), E::lval(t));
}

PeriodExpression symplectic_residual_period(int m) {
  using E = PeriodExpression;
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "symplectic period needs m >= 1");
  return E::quotient(E::power(E::residue(), m - 1), E::product(lvals(3, 2 * m - 1, 2)));
}

PeriodExpression odd_period_from_components(int t) {
  using E = PeriodExpression;
  if (t < 3 || t % 2 == 0) throw Error(ErrorCode::UnsupportedComposition, "needs odd t >= 3");
  const int m = (t - 1) / 2;
  return E::product({E::quotient(E::alpha(), E::residue()), norm_constant(t),
                     E::power(intertwining_eigenvalue(t), 2),
                     E::power(symplectic_residual_period(m), 2)});
}

namespace {

Rational rational_pow(Rational base, int n) {
  if (n < 0) {
    if (base == kZero) throw Error(ErrorCode::DivisionByZero, "zero numeral to a negative power");
    base = 1 / base;
    n = -n;
  }
  Rational acc(1);
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

Monomial scaled(Monomial m, int n) {
  m.coefficient = rational_pow(m.coefficient, n);
  for (auto& [atom, e] : m.exponents) e *= n;
  return m;
}

void multiply_into(Monomial& acc, const Monomial& x) {
  acc.coefficient *= x.coefficient;
  for (const auto& [atom, e] : x.exponents) {
    if ((acc.exponents[atom] += e) == 0) acc.exponents.erase(atom);
  }
}

}  // namespace

Monomial to_monomial(const PeriodExpression& e) {
  Monomial out;
  switch (e.kind) {
    case Kind::Numeral:
      out.coefficient = e.numeral;
      return out;
    case Kind::LValue:
    case Kind::Residue:
    case Kind::Alpha:
      out.exponents[atom_name(e)] = 1;
      return out;
    case Kind::Product:
      for (const auto& c : e.children) multiply_into(out, to_monomial(c));
      return out;
    case Kind::Quotient:
      out = to_monomial(e.children[0]);
      multiply_into(out, scaled(to_monomial(e.children[1]), -1));
      return out;
    case Kind::Power:
      return scaled(to_monomial(e.children[0]), e.index);
    case Kind::AbsSquare:
      return scaled(to_monomial(e.children[0]), 2);
  }
  return out;
}

}  // namespace klyachko
