#pragma once

#include <cstdint>
#include <vector>

namespace klyachko {

inline constexpr int kDefaultMaxFieldOrder = 16;

/// The field F_q, q = p^e, with elements encoded as integers in [0, q).
///
/// The code of c_0 + c_1 t + ... + c_{e-1} t^{e-1} (t a root of the
/// modulus) is sum c_i p^i, so the prime subfield occupies codes [0, p).
/// Arithmetic is table driven; q is small by construction.
class FiniteField {
 public:
  using Element = std::uint8_t;

  /// Builds F_{p^e}. For e > 1 the modulus is the irreducible monic
  /// polynomial of degree e whose lower coefficients have the least code.
  static FiniteField make(int p, int e, int max_order = kDefaultMaxFieldOrder);

  /// Convenience: factors q as a prime power and builds the field.
  static FiniteField of_order(int q, int max_order = kDefaultMaxFieldOrder);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int q() const noexcept { return q_; }

  /// Coefficients c_0..c_e of the defining monic polynomial. For e = 1 this
  /// is x - 0, i.e. {0, 1}.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const noexcept { return add_[a * q_ + b]; }
  Element sub(Element a, Element b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * q_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  /// Multiplicative inverse; inv(0) is 0 and must not be relied on.
  Element inv(Element a) const noexcept { return inv_[a]; }
  Element pow(Element a, std::uint64_t k) const noexcept;

  /// Absolute trace Tr_{F_q/F_p}(a), returned as an integer in [0, p).
  int trace(Element a) const noexcept { return trace_[a]; }

  /// Image of an integer in the prime subfield.
  Element from_int(long long k) const noexcept;

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  FiniteField() = default;

  int p_ = 0;
  int e_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
  std::vector<int> trace_;
};

bool is_prime(std::uint64_t n) noexcept;

/// True iff the monic polynomial with coefficients c_0..c_d (c_d = 1) over
/// F_p has no monic factor of degree 1..d/2. Exhaustive trial division.
bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p);

}  // namespace klyachko
