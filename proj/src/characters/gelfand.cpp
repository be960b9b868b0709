#include "klyachko/characters/gelfand.hpp"

#include "klyachko/characters/induced.hpp"
#include "klyachko/error.hpp"
#include "klyachko/groups/group_io.hpp"
#include "klyachko/groups/klyachko_subgroup.hpp"

namespace klyachko {

GelfandReport verify_gelfand(int n, int q, const GelfandOptions& options) {
  const FiniteField field = FiniteField::of_order(q, options.max_field_order);
  if (options.psi_twist <= 0 || options.psi_twist >= q) {
    throw Error(ErrorCode::InvalidArgument, "psi seed must name a nonzero element of F_q");
  }
  const GroupTable table = cached_group_table(n, field, options.limits, options.cache_dir);
  const ModularArena arena =
      ModularArena::make(table.order(), table.exponent(), field.p(), options.ell);
  const CharacterTable chars = character_table(table, arena, options.table);

  GelfandReport report;
  report.n = n;
  report.q = q;
  report.group_order = table.order();
  report.ell = arena.ell();
  report.psi_seed = options.psi_twist;
  report.table_seed = chars.seed;
  report.class_count = table.class_count();
  report.orthogonality = check_orthogonality(table, arena, chars).all();

  const std::size_t n_irr = chars.characters.size();
  report.rows.resize(n_irr);
  for (std::size_t i = 0; i < n_irr; ++i) {
    report.rows[i].index = i;
    report.rows[i].dim = chars.degrees[i];
    report.irreducible_dimension_sum += chars.degrees[i];
  }

  for (int k = 0; 2 * k <= n; ++k) {
    KlyachkoSubgroupSpec spec;
    spec.r = n - 2 * k;
    spec.k = k;
    spec.psi_twist = static_cast<FiniteField::Element>(options.psi_twist);
    const InducedCharacter model =
        induced_klyachko_character(table, spec, arena, options.limits.threads);
    const long long dim_lift = arena.lift(model.chi.values[table.identity_class()]);
    if (dim_lift != static_cast<long long>(model.index)) {
      throw Error(ErrorCode::InvariantViolation, "induced character degree differs from [G:H]");
    }
    report.models.push_back({k, spec.r, model.subgroup_order, model.index});
    report.model_dimension_sum += model.index;
    for (std::size_t i = 0; i < n_irr; ++i) {
      const auto m = multiplicity(table, arena, chars.characters[i], model.chi, model.index);
      report.rows[i].mults.push_back(m);
      report.rows[i].total += m;
    }
  }

  report.existence = report.uniqueness = report.disjointness = report.gelfand = true;
  for (const auto& row : report.rows) {
    int nonzero = 0;
    for (auto m : row.mults) {
      if (m != 0) ++nonzero;
      if (m > 1) report.uniqueness = false;
    }
    if (row.total == 0) report.existence = false;
    if (nonzero > 1) report.disjointness = false;
    if (row.total != 1) report.gelfand = false;
  }
  return report;
}

nlohmann::json gelfand_report_to_json(const GelfandReport& report) {
  using nlohmann::json;
  json dims = json::array();
  json rows = json::array();
  for (const auto& row : report.rows) {
    dims.push_back(row.dim);
    json mults = json::array();
    for (std::size_t k = 0; k < row.mults.size(); ++k) mults.push_back({k, row.mults[k]});
    rows.push_back({{"index", row.index}, {"dim", row.dim}, {"mults", mults}, {"total", row.total}});
  }
  json models = json::array();
  for (const auto& m : report.models) {
    models.push_back({{"k", m.k}, {"r", m.r}, {"subgroup_order", m.subgroup_order}, {"dim", m.index}});
  }
  return {{"version", kReportVersion},
          {"n", report.n},
          {"q", report.q},
          {"ell", report.ell},
          {"psi_seed", report.psi_seed},
          {"table_seed", report.table_seed},
          {"group_order", report.group_order},
          {"class_count", report.class_count},
          {"dims", dims},
          {"models", models},
          {"rows", rows},
          {"flags",
           {{"existence", report.existence},
            {"disjointness", report.disjointness},
            {"uniqueness", report.uniqueness},
            {"gelfand", report.gelfand},
            {"orthogonality", report.orthogonality}}},
          {"dim_check",
           {{"model_sum", report.model_dimension_sum},
            {"irreducible_sum", report.irreducible_dimension_sum},
            {"equal", report.model_dimension_sum == report.irreducible_dimension_sum}}}};
}

}  // namespace klyachko
