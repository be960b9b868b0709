#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "klyachko/characters/modular_arena.hpp"

namespace klyachko {

/// Dense square matrix over Z/ell, row major.
class ModMatrix {
 public:
  ModMatrix() = default;
  explicit ModMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  Residue operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<Residue> a_;
};

/// Polynomial over Z/ell, low degree first, no trailing zeros.
using ModPoly = std::vector<Residue>;

/// det(xI - A), monic of degree n, via Hessenberg reduction.
ModPoly characteristic_polynomial(const ModularArena& z, ModMatrix a);

/// Roots of f in Z/ell when f splits into distinct linear factors; nullopt
/// if f has a repeated root or an irreducible factor of degree > 1.
/// Cantor-Zassenhaus equal-degree splitting driven by rng.
std::optional<std::vector<Residue>> distinct_roots(const ModularArena& z, const ModPoly& f,
                                                   std::mt19937_64& rng);

/// Basis of the right kernel of a (columns vectors).
std::vector<std::vector<Residue>> kernel(const ModularArena& z, ModMatrix a);

}  // namespace klyachko
