#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace klyachko {

using Residue = std::uint64_t;

/// Z/ell with ell prime, ell = 1 (mod m), m = lcm(exp G, p), ell > 2|G|.
///
/// All character values of G and all values of psi live here: the m-th
/// roots of unity of C are replaced by powers of a fixed zeta_m of exact
/// order m. Integers of absolute value <= |G| lift back uniquely.
class ModularArena {
 public:
  /// Least admissible prime unless ell_override is given, in which case it
  /// is validated (ArenaTooSmall on violation).
  static ModularArena make(std::uint64_t group_order, std::uint64_t group_exponent, int p,
                           std::optional<std::uint64_t> ell_override = std::nullopt);

  std::uint64_t ell() const noexcept { return ell_; }
  std::uint64_t root_order() const noexcept { return m_; }
  std::uint64_t group_order() const noexcept { return group_order_; }
  int p() const noexcept { return p_; }
  Residue zeta_m() const noexcept { return zeta_m_; }
  Residue zeta_p() const noexcept { return zeta_p_; }
  /// zeta_p^e for e taken mod p.
  Residue zeta_p_power(int e) const noexcept { return zeta_p_pow_[((e % p_) + p_) % p_]; }

  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= ell_ ? s - ell_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + ell_ - b; }
  Residue mul(Residue a, Residue b) const noexcept { return (a * b) % ell_; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : ell_ - a; }
  Residue pow(Residue a, std::uint64_t k) const noexcept;
  /// Inverse of a nonzero residue.
  Residue inv(Residue a) const noexcept { return pow(a, ell_ - 2); }
  Residue from_int(long long v) const noexcept;
  /// Symmetric lift to (-ell/2, ell/2].
  long long lift(Residue a) const noexcept;

  friend bool operator==(const ModularArena& a, const ModularArena& b) noexcept {
    return a.ell_ == b.ell_ && a.m_ == b.m_ && a.zeta_m_ == b.zeta_m_;
  }

 private:
  std::uint64_t ell_ = 0;
  std::uint64_t m_ = 0;
  std::uint64_t group_order_ = 0;
  int p_ = 0;
  Residue zeta_m_ = 0;
  Residue zeta_p_ = 0;
  std::vector<Residue> zeta_p_pow_;
};

/// Least primitive root modulo a prime.
std::uint64_t primitive_root(std::uint64_t prime);
/// Multiplicative order of a modulo a prime.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t prime);

}  // namespace klyachko
