#include "klyachko/groups/finite_field.hpp"

#include <string>

#include "klyachko/error.hpp"

namespace klyachko {
namespace {

using Digits = std::vector<int>;

Digits to_digits(int code, int p, int e) {
  Digits d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int from_digits(const Digits& d, int p) {
  int code = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

// Remainder of a modulo the monic polynomial m over F_p; both low-first.
Digits poly_rem(Digits a, const Digits& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    const int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(dm);
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return false;
  for (int dd = 1; dd <= deg / 2; ++dd) {
    // Every monic divisor candidate of degree dd: code enumerates lower coeffs.
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Digits div = to_digits(code, p, dd);
      div.push_back(1);
      Digits rem = poly_rem(coeffs, div, p);
      bool zero = true;
      for (int c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(int p, int e, int max_order) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order || q > 256) {
      throw Error(ErrorCode::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds bound " +
                      std::to_string(max_order));
    }
  }

  FiniteField f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<int>(q);

  if (e == 1) {
    f.modulus_ = {0, 1};
  } else {
    const int count = f.q_;
    for (int code = 0; code < count && f.modulus_.empty(); ++code) {
      Digits cand = to_digits(code, p, e);
      cand.push_back(1);
      if (is_irreducible_mod_p(cand, p)) f.modulus_ = cand;
    }
    if (f.modulus_.empty()) {
      throw Error(ErrorCode::NoIrreduciblePolynomial,
                  "no irreducible polynomial of degree " + std::to_string(e));
    }
  }

  const int qq = f.q_;
  f.add_.resize(qq * qq);
  f.mul_.resize(qq * qq);
  f.neg_.resize(qq);
  f.inv_.assign(qq, 0);
  f.trace_.resize(qq);
  for (int a = 0; a < qq; ++a) {
    const Digits da = to_digits(a, p, e);
    Digits na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - da[i]) % p;
    f.neg_[a] = static_cast<Element>(from_digits(na, p));
    for (int b = 0; b < qq; ++b) {
      const Digits db = to_digits(b, p, e);
      Digits s(e);
      for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      f.add_[a * qq + b] = static_cast<Element>(from_digits(s, p));
      Digits prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      if (e == 1) {
        f.mul_[a * qq + b] = static_cast<Element>(prod[0]);
      } else {
        f.mul_[a * qq + b] = static_cast<Element>(from_digits(poly_rem(prod, f.modulus_, p), p));
      }
    }
  }
  for (int a = 1; a < qq; ++a) {
    for (int b = 1; b < qq; ++b) {
      if (f.mul_[a * qq + b] == 1) {
        f.inv_[a] = static_cast<Element>(b);
        break;
      }
    }
    if (f.inv_[a] == 0) {
      throw Error(ErrorCode::NoIrreduciblePolynomial, "field table has a zero divisor");
    }
  }
  for (int a = 0; a < qq; ++a) {
    Element acc = 0;
    Element frob = static_cast<Element>(a);
    for (int i = 0; i < e; ++i) {
      acc = f.add(acc, frob);
      frob = f.pow(frob, static_cast<std::uint64_t>(p));
    }
    f.trace_[a] = acc;  // lies in the prime field, so the code is < p
  }
  return f;
}

FiniteField FiniteField::of_order(int q, int max_order) {
  if (q < 2) throw Error(ErrorCode::NonPrimeP, "field order must be >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    throw Error(ErrorCode::NonPrimeP, std::to_string(q) + " is not a prime power");
  }
  return make(p, e, max_order);
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t k) const noexcept {
  Element result = 1;
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

FiniteField::Element FiniteField::from_int(long long k) const noexcept {
  return static_cast<Element>(((k % p_) + p_) % p_);
}

}  // namespace klyachko
