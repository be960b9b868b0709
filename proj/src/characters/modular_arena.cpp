#include "klyachko/characters/modular_arena.hpp"

#include <numeric>
#include <string>

#include "klyachko/error.hpp"
#include "klyachko/groups/finite_field.hpp"

namespace klyachko {
namespace {

constexpr std::uint64_t kMaxEll = std::uint64_t{1} << 32;

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  a %= mod;
  while (k > 0) {
    if (k & 1U) r = r * a % mod;
    a = a * a % mod;
    k >>= 1U;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t primitive_root(std::uint64_t prime) {
  if (prime == 2) return 1;
  const auto factors = prime_factors(prime - 1);
  for (std::uint64_t g = 2; g < prime; ++g) {
    bool ok = true;
    for (auto f : factors) ok = ok && powmod(g, (prime - 1) / f, prime) != 1;
    if (ok) return g;
  }
  throw Error(ErrorCode::InvariantViolation, "no primitive root found");
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t prime) {
  std::uint64_t order = prime - 1;
  for (auto f : prime_factors(prime - 1)) {
    while (order % f == 0 && powmod(a, order / f, prime) == 1) order /= f;
  }
  return order;
}

ModularArena ModularArena::make(std::uint64_t group_order, std::uint64_t group_exponent, int p,
                                std::optional<std::uint64_t> ell_override) {
  if (group_order == 0 || group_exponent == 0 || p < 2) {
    throw Error(ErrorCode::InvalidArgument, "arena needs a nonempty group and a prime p");
  }
  const std::uint64_t m = std::lcm(group_exponent, static_cast<std::uint64_t>(p));
  std::uint64_t ell = 0;
  if (ell_override) {
    ell = *ell_override;
    if (!is_prime(ell) || ell % m != 1 || ell <= 2 * group_order || ell >= kMaxEll) {
      throw Error(ErrorCode::ArenaTooSmall,
                  "ell = " + std::to_string(ell) + " must be a prime = 1 mod " + std::to_string(m) +
                      " exceeding " + std::to_string(2 * group_order));
    }
  } else {
    // Least prime of the form 1 + j*m above 2|G|.
    std::uint64_t candidate = ((2 * group_order + m - 1) / m) * m + 1;
    while (!is_prime(candidate)) candidate += m;
    ell = candidate;
    if (ell >= kMaxEll) throw Error(ErrorCode::ArenaTooSmall, "arena prime exceeds 2^32");
  }

  ModularArena a;
  a.ell_ = ell;
  a.m_ = m;
  a.group_order_ = group_order;
  a.p_ = p;
  const std::uint64_t g = primitive_root(ell);
  a.zeta_m_ = powmod(g, (ell - 1) / m, ell);
  if (multiplicative_order(a.zeta_m_, ell) != m) {
    throw Error(ErrorCode::InvariantViolation, "zeta_m has the wrong order");
  }
  a.zeta_p_ = powmod(a.zeta_m_, m / static_cast<std::uint64_t>(p), ell);
  a.zeta_p_pow_.resize(p);
  for (int e = 0; e < p; ++e) a.zeta_p_pow_[e] = powmod(a.zeta_p_, static_cast<std::uint64_t>(e), ell);
  return a;
}

Residue ModularArena::pow(Residue a, std::uint64_t k) const noexcept { return powmod(a, k, ell_); }

Residue ModularArena::from_int(long long v) const noexcept {
  const long long l = static_cast<long long>(ell_);
  return static_cast<Residue>(((v % l) + l) % l);
}

long long ModularArena::lift(Residue a) const noexcept {
  return a > ell_ / 2 ? static_cast<long long>(a) - static_cast<long long>(ell_)
                      : static_cast<long long>(a);
}

}  // namespace klyachko
