#pragma once

#include <cstdint>

#include "klyachko/characters/character_table.hpp"
#include "klyachko/groups/klyachko_subgroup.hpp"

namespace klyachko {

struct InducedCharacter {
  ClassFunction chi;
  std::uint64_t subgroup_order = 0;
  std::uint64_t index = 0;  // [G : H]
};

/// Ind_H^G(psi_r) by the Frobenius formula
///   chi(g) = |H|^{-1} sum_{x in G, xgx^{-1} in H} psi_r(xgx^{-1}),
/// evaluated at every class representative by iterating x over G.
InducedCharacter induced_klyachko_character(const GroupTable& table,
                                            const KlyachkoSubgroupSpec& spec,
                                            const ModularArena& arena, unsigned threads = 1);

/// Same character via chi(c) = |G| / (|c| |H|) * sum_{h in H cap c} psi_r(h),
/// enumerating H once. Used to cross-check the Frobenius sum.
InducedCharacter induced_klyachko_character_by_subgroup(const GroupTable& table,
                                                        const KlyachkoSubgroupSpec& spec,
                                                        const ModularArena& arena);

/// <chi_model, chi_irr> lifted to an integer. Throws LiftOutOfRange unless
/// the lift lies in [0, bound].
std::uint64_t multiplicity(const GroupTable& table, const ModularArena& arena,
                           const ClassFunction& chi_irr, const ClassFunction& chi_model,
                           std::uint64_t bound);

}  // namespace klyachko
