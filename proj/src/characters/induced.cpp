#include "klyachko/characters/induced.hpp"

#include <string>

#include "klyachko/error.hpp"
#include "klyachko/parallel.hpp"

namespace klyachko {
namespace {

void check_inputs(const GroupTable& table, const KlyachkoSubgroupSpec& spec,
                  const ModularArena& arena) {
  if (spec.n() != table.n()) {
    throw Error(ErrorCode::SizeMismatch, "r + 2k = " + std::to_string(spec.n()) +
                                             " differs from n = " + std::to_string(table.n()));
  }
  if (spec.psi_twist == 0 || spec.psi_twist >= table.field().q()) {
    throw Error(ErrorCode::InvalidArgument, "psi twist must be a nonzero field element");
  }
  if (arena.p() != table.field().p() || arena.group_order() != table.order()) {
    throw Error(ErrorCode::ArenaMismatch, "arena was not built for this group");
  }
  if (!table.has_classes()) throw Error(ErrorCode::InvalidArgument, "classes not computed");
}

std::uint64_t count_subgroup(const GroupTable& table, const KlyachkoSubgroupSpec& spec) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < table.order(); ++i) {
    if (h_membership(table.field(), table.element(i), spec)) ++count;
  }
  return count;
}

}  // namespace

InducedCharacter induced_klyachko_character(const GroupTable& table,
                                            const KlyachkoSubgroupSpec& spec,
                                            const ModularArena& arena, unsigned threads) {
  check_inputs(table, spec, arena);
  const auto& f = table.field();
  const auto& classes = table.classes();
  const std::size_t n_cls = classes.size();
  const std::size_t order = table.order();

  InducedCharacter out;
  out.subgroup_order = count_subgroup(table, spec);
  out.index = order / out.subgroup_order;
  out.chi = ClassFunction{arena.ell(), std::vector<Residue>(n_cls, 0)};

  const unsigned workers = worker_count(threads, order);
  std::vector<std::vector<Residue>> partial(workers, std::vector<Residue>(n_cls, 0));
  parallel_chunks(order, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& acc = partial[w];
    for (std::size_t xi = begin; xi < end; ++xi) {
      const MatrixGF x = table.element(xi);
      const MatrixGF x_inv = *inverse(f, x);
      for (std::size_t c = 0; c < n_cls; ++c) {
        const MatrixGF y = multiply(f, multiply(f, x, classes[c].representative), x_inv);
        if (!h_membership(f, y, spec)) continue;
        acc[c] = arena.add(acc[c], arena.zeta_p_power(psi_r_value(f, y, spec)));
      }
    }
  });
  const Residue h_inv = arena.inv(arena.from_int(static_cast<long long>(out.subgroup_order)));
  for (std::size_t c = 0; c < n_cls; ++c) {
    Residue s = 0;
    for (const auto& p : partial) s = arena.add(s, p[c]);
    out.chi.values[c] = arena.mul(s, h_inv);
  }
  return out;
}

InducedCharacter induced_klyachko_character_by_subgroup(const GroupTable& table,
                                                        const KlyachkoSubgroupSpec& spec,
                                                        const ModularArena& arena) {
  check_inputs(table, spec, arena);
  const auto& f = table.field();
  const auto& classes = table.classes();
  std::vector<Residue> sums(classes.size(), 0);
  std::uint64_t h_order = 0;
  for (std::size_t i = 0; i < table.order(); ++i) {
    const MatrixGF h = table.element(i);
    if (!h_membership(f, h, spec)) continue;
    ++h_order;
    const std::size_t c = table.class_of(i);
    sums[c] = arena.add(sums[c], arena.zeta_p_power(psi_r_value(f, h, spec)));
  }
  InducedCharacter out;
  out.subgroup_order = h_order;
  out.index = table.order() / h_order;
  out.chi = ClassFunction{arena.ell(), std::vector<Residue>(classes.size(), 0)};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    // |G| / (|c| |H|) = |C_G(g)| / |H|
    const Residue centralizer = arena.from_int(static_cast<long long>(table.order() / classes[c].size));
    out.chi.values[c] = arena.mul(arena.mul(sums[c], centralizer),
                                  arena.inv(arena.from_int(static_cast<long long>(h_order))));
  }
  return out;
}

std::uint64_t multiplicity(const GroupTable& table, const ModularArena& arena,
                           const ClassFunction& chi_irr, const ClassFunction& chi_model,
                           std::uint64_t bound) {
  const long long m = arena.lift(inner_product(table, arena, chi_model, chi_irr));
  if (m < 0 || static_cast<std::uint64_t>(m) > bound) {
    throw Error(ErrorCode::LiftOutOfRange, "multiplicity lifts to " + std::to_string(m) +
                                               ", outside [0, " + std::to_string(bound) + "]");
  }
  return static_cast<std::uint64_t>(m);
}

}  // namespace klyachko
