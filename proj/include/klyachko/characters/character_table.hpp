#pragma once

#include <cstdint>
#include <vector>

#include "klyachko/characters/modular_arena.hpp"
#include "klyachko/groups/group_table.hpp"

namespace klyachko {

/// A class function: one residue per conjugacy class of the table it was
/// computed for, tagged with the arena prime.
struct ClassFunction {
  std::uint64_t ell = 0;
  std::vector<Residue> values;

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

struct CharacterTableOptions {
  std::uint64_t seed = 20240611;
  int max_attempts = 16;
  unsigned threads = 1;
};

struct CharacterTable {
  std::vector<ClassFunction> characters;  // sorted by (degree, values); trivial first
  std::vector<std::uint64_t> degrees;     // chi(1) lifted to integers
  std::uint64_t seed = 0;
  int attempts = 0;                       // random combinations tried
};

/// Class structure constants: a[(j * N + i) * N + k] is the number of pairs
/// (x, y) in C_j x C_i with xy equal to the representative of C_k.
std::vector<std::uint64_t> class_structure_constants(const GroupTable& table, unsigned threads = 1);

/// Irreducible characters from common eigenvectors of the class-sum
/// multiplication matrices. Throws EigenSplitFailure if no random
/// combination separates the eigenvalues within max_attempts, and
/// InvariantViolation if the resulting table fails orthogonality.
CharacterTable character_table(const GroupTable& table, const ModularArena& arena,
                               const CharacterTableOptions& options = {});

/// (1/|G|) sum_c |c| a(c) b(c^{-1}) in the arena.
Residue inner_product(const GroupTable& table, const ModularArena& arena, const ClassFunction& a,
                      const ClassFunction& b);

struct OrthogonalityReport {
  bool rows = false;     // <chi_i, chi_j> = delta_ij
  bool columns = false;  // sum_chi chi(g) chi(h^{-1}) = delta |C_G(g)|
  bool degrees = false;  // sum chi(1)^2 = |G|
  bool all() const noexcept { return rows && columns && degrees; }
};

OrthogonalityReport check_orthogonality(const GroupTable& table, const ModularArena& arena,
                                        const CharacterTable& chars);

}  // namespace klyachko
