#include "klyachko/cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "klyachko/characters/gelfand.hpp"
#include "klyachko/eisenstein/lfunctions.hpp"
#include "klyachko/eisenstein/period.hpp"
#include "klyachko/eisenstein/weyl.hpp"
#include "klyachko/error.hpp"
#include "klyachko/groups/group_io.hpp"
#include "klyachko/segments/param_parser.hpp"

namespace klyachko::cli {

namespace {

using nlohmann::json;

constexpr const char* kMeasureNote = "up to measure normalization";

struct GroupFlags {
  int n = 2;
  int q = 2;
  std::optional<std::uint64_t> ell;
  int psi_seed = 1;
  unsigned threads = 1;
  std::optional<std::uint64_t> max_elements;
  std::optional<std::string> cache_dir;
};

void add_group_flags(CLI::App* cmd, GroupFlags& f) {
  cmd->add_option("--n", f.n, "matrix size")->required()->check(CLI::Range(1, 8));
  cmd->add_option("--q", f.q, "field order, a prime power")->required()->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--ell", f.ell, "arena prime (default: least admissible)");
  cmd->add_option("--psi-seed", f.psi_seed, "a in F_q^*, psi(x) = zeta_p^Tr(a x)")->default_val(1);
  cmd->add_option("--threads", f.threads, "worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
  cmd->add_option("--max-elements", f.max_elements,
                  "refuse groups larger than this (env KLYACHKO_MAX_ELEMENTS)");
  cmd->add_option("--cache-dir", f.cache_dir, "group table cache (env KLYACHKO_CACHE_DIR)");
}

GelfandOptions resolve(const GroupFlags& f) {
  GelfandOptions o;
  o.ell = f.ell;
  o.psi_twist = f.psi_seed;
  o.limits.threads = f.threads;
  o.table.threads = f.threads;
  if (f.max_elements) {
    o.limits.max_elements = *f.max_elements;
  } else if (const char* env = std::getenv("KLYACHKO_MAX_ELEMENTS"); env && *env) {
    try {
      o.limits.max_elements = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "KLYACHKO_MAX_ELEMENTS is not an integer");
    }
  }
  if (f.cache_dir) {
    o.cache_dir = *f.cache_dir;
  } else if (const char* env = std::getenv("KLYACHKO_CACHE_DIR"); env && *env) {
    o.cache_dir = env;
  }
  return o;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_verify_gelfand(const GroupFlags& f, bool text, std::ostream& out) {
  const GelfandReport report = verify_gelfand(f.n, f.q, resolve(f));
  if (!text) {
    json j = gelfand_report_to_json(report);
    j["command"] = "verify-gelfand";
    out << j.dump(2) << "\n";
  } else {
    out << "GL_" << report.n << "(F_" << report.q << ")  |G| = " << report.group_order
        << "  classes = " << report.class_count << "\n";
    out << "ell = " << report.ell << "  psi seed = " << report.psi_seed
        << "  table seed = " << report.table_seed << "\n\n";
    out << std::setw(5) << "idx" << std::setw(7) << "dim";
    for (const auto& m : report.models) out << std::setw(8) << ("k=" + std::to_string(m.k));
    out << std::setw(8) << "total" << "\n";
    for (const auto& row : report.rows) {
      out << std::setw(5) << row.index << std::setw(7) << row.dim;
      for (auto m : row.mults) out << std::setw(8) << m;
      out << std::setw(8) << row.total << "\n";
    }
    out << "\nmodels:";
    for (const auto& m : report.models) {
      out << "  M_{" << m.r << "," << 2 * m.k << "} dim " << m.index;
    }
    out << "\nsum of model dims = " << report.model_dimension_sum
        << ", sum of irreducible dims = " << report.irreducible_dimension_sum << "\n";
    out << "existence " << yes_no(report.existence) << ", disjointness " << yes_no(report.disjointness)
        << ", uniqueness " << yes_no(report.uniqueness) << ", orthogonality "
        << yes_no(report.orthogonality) << "\n";
    out << (report.gelfand ? "Gelfand model: every irreducible occurs exactly once\n"
                           : "NOT a Gelfand model\n");
  }
  if (!report.orthogonality) return kExitInvariantViolation;
  return report.gelfand ? kExitOk : kExitNotGelfand;
}

int cmd_table(const GroupFlags& f, bool text, std::ostream& out) {
  const GelfandOptions o = resolve(f);
  const FiniteField field = FiniteField::of_order(f.q, o.max_field_order);
  const GroupTable table = cached_group_table(f.n, field, o.limits, o.cache_dir);
  const ModularArena arena = ModularArena::make(table.order(), table.exponent(), field.p(), o.ell);
  const CharacterTable chars = character_table(table, arena, o.table);
  const bool orthogonal = check_orthogonality(table, arena, chars).all();
  if (!text) {
    json rows = json::array();
    for (std::size_t i = 0; i < chars.characters.size(); ++i) {
      rows.push_back({{"index", i}, {"degree", chars.degrees[i]}, {"values", chars.characters[i].values}});
    }
    out << json{{"version", kReportVersion},
                {"command", "table"},
                {"ell", arena.ell()},
                {"zeta_m", arena.zeta_m()},
                {"table_seed", chars.seed},
                {"group", group_table_to_json(table)},
                {"characters", rows},
                {"orthogonality", orthogonal}}
                   .dump(2)
        << "\n";
  } else {
    out << "GL_" << f.n << "(F_" << f.q << ")  |G| = " << table.order() << "  ell = " << arena.ell()
        << "  zeta_m = " << arena.zeta_m() << "  (values are residues mod ell)\n";
    out << std::setw(8) << "size";
    for (const auto& c : table.classes()) out << std::setw(7) << c.size;
    out << "\n";
    for (std::size_t i = 0; i < chars.characters.size(); ++i) {
      out << std::setw(8) << ("chi" + std::to_string(i));
      for (auto v : chars.characters[i].values) out << std::setw(7) << v;
      out << "\n";
    }
    out << "orthogonality " << yes_no(orthogonal) << "\n";
  }
  return orthogonal ? kExitOk : kExitInvariantViolation;
}

int cmd_kappa(const std::string& text_param, bool text, std::ostream& out) {
  const TadicParameter param = parse_parameter(text_param);
  json j = parameter_to_json(param);
  j["version"] = kReportVersion;
  j["command"] = "kappa";
  if (!text) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const KlyachkoType type = kappa(param);
  out << to_string(param) << "\n";
  out << "n = " << param.n() << ", (r, k) = (" << type.r << ", " << type.k << "), unitary "
      << yes_no(validate_unitary(param)) << "\n";
  out << "model: " << model_name(type) << "\n";
  out << "contragredient: " << model_name(dual_model_type(type)) << "\n";
  return kExitOk;
}

int cmd_derive(const std::string& text_param, bool text, std::ostream& out) {
  const TadicParameter param = parse_parameter(text_param);
  json steps = json::array();
  std::vector<SpehBlock> current = param.expand();
  auto render = [](const std::vector<SpehBlock>& blocks) {
    std::string s;
    for (const auto& b : blocks) s += (s.empty() ? "" : " x ") + to_string(b);
    return s.empty() ? std::string("1") : s;
  };
  int remaining = param.n();
  while (!current.empty()) {
    const ProductDerivative d = product_highest_derivative(current);
    remaining -= d.order;
    steps.push_back({{"order", d.order}, {"result", render(d.blocks)}, {"degree", remaining}});
    current = d.blocks;
  }
  if (remaining != 0) throw Error(ErrorCode::InvariantViolation, "derivative orders do not sum to n");
  if (!text) {
    out << json{{"version", kReportVersion}, {"command", "derive"}, {"parameter", to_string(param)},
                {"n", param.n()}, {"steps", steps}}
                   .dump(2)
        << "\n";
  } else {
    out << to_string(param) << "  (n = " << param.n() << ")\n";
    for (const auto& s : steps) {
      out << "  order " << s["order"].get<int>() << " -> " << s["result"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

json zeta_assignment(int t, std::optional<double> alpha, AtomAssignment<double>& values) {
  json atoms = json::object();
  for (int j = 2; j <= std::max(t, 2); ++j) {
    const ZetaValue z = zeta_direct(j, 1e-10);
    values["L(" + std::to_string(j) + ")"] = z.value;
    atoms["L(" + std::to_string(j) + ")"] = {{"value", z.value}, {"error_bound", z.error_bound}};
  }
  values["Res"] = 1.0;
  atoms["Res"] = {{"value", 1.0}, {"error_bound", 0.0}};
  if (alpha) {
    values["Alpha"] = *alpha;
    atoms["Alpha"] = {{"value", *alpha}, {"error_bound", 0.0}};
  }
  return atoms;
}

int cmd_period(int t, bool zeta, std::optional<double> alpha, bool text, std::ostream& out) {
  const PeriodExpression formula = period_formula(t);
  json j{{"version", kReportVersion},
         {"command", "period"},
         {"t", t},
         {"formula", to_string(formula)},
         {"tree", to_json(formula)},
         {"normalization", kMeasureNote}};
  if (t >= 2) j["norm_constant"] = to_string(norm_constant(t));
  if (t >= 3 && t % 2 == 1) {
    j["intertwining_eigenvalue"] = to_string(intertwining_eigenvalue(t));
    j["derivation_consistent"] = to_monomial(odd_period_from_components(t)) == to_monomial(formula);
  }
  std::optional<double> value;
  if (zeta) {
    if (t % 2 == 1 && !alpha) {
      throw Error(ErrorCode::MissingAtom, "odd t needs --alpha for the opaque Alpha atom");
    }
    AtomAssignment<double> values;
    j["instantiation"] = "sigma trivial on GL_1 over Q: L(j) = zeta(j), Res = 1";
    j["atoms"] = zeta_assignment(t, alpha, values);
    value = evaluate_period(formula, values);
    j["value"] = *value;
  }
  if (!text) {
    out << j.dump(2) << "\n";
  } else {
    out << "t = " << t << ": |period|^2 = " << to_string(formula) << "  (" << kMeasureNote << ")\n";
    if (value) out << "value = " << std::setprecision(12) << *value << "\n";
  }
  return kExitOk;
}

int cmd_residue(int t, bool text, std::ostream& out) {
  const ResidueSurvival r = residue_survival(t);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"i", row.i},
                    {"w", row.w.images()},
                    {"bookkeeping_set", row.bookkeeping_set},
                    {"expected_set", row.expected_set},
                    {"descents", row.descents},
                    {"pole_order", row.pole_order},
                    {"survives", row.survives}});
  }
  if (!text) {
    out << json{{"version", kReportVersion},
                {"command", "residue-survival"},
                {"t", r.t},
                {"m", r.m},
                {"required_order", r.required_order},
                {"rows", rows},
                {"survivors", r.survivors},
                {"sets_match", r.sets_match()},
                {"only_w_Q_survives", r.only_wq_survives()}}
                   .dump(2)
        << "\n";
  } else {
    auto set = [](const std::vector<int>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    out << "t = " << r.t << ", required pole order " << r.required_order << "\n";
    for (const auto& row : r.rows) {
      out << "  w^(" << row.i << "): set " << set(row.bookkeeping_set) << ", descents "
          << set(row.descents) << ", pole order " << row.pole_order
          << (row.survives ? "  survives" : "") << "\n";
    }
    out << "sets match closed form: " << yes_no(r.sets_match())
        << ", only w_Q survives: " << yes_no(r.only_wq_survives()) << "\n";
  }
  return r.sets_match() && r.only_wq_survives() ? kExitOk : kExitInvariantViolation;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldTooLarge:
    case ErrorCode::GroupTooLarge:
    case ErrorCode::ArenaTooSmall:
      return kExitResourceRefusal;
    case ErrorCode::ParseError:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::InvalidArgument:
    case ErrorCode::MissingAtom:
    case ErrorCode::UnsupportedComposition:
    case ErrorCode::NonPrimeP:
    case ErrorCode::EmptyBlock:
      return kExitInputError;
    default:
      return kExitInvariantViolation;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Klyachko models: finite-field Gelfand checks, kappa, derivatives, periods",
               "klyachko"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  GroupFlags gelfand_flags, table_flags;
  auto* verify = app.add_subcommand("verify-gelfand", "check sum_k M_{n-2k,2k} is a Gelfand model");
  add_group_flags(verify, gelfand_flags);
  auto* table = app.add_subcommand("table", "dump the character table of GL_n(F_q)");
  add_group_flags(table, table_flags);

  std::string kappa_param, derive_param;
  auto* kap = app.add_subcommand("kappa", "Klyachko type of a unitary parameter");
  kap->add_option("param", kappa_param, "e.g. \"U(rho:1,1,3)@0 x P(U(rho:1,2,2),1/4)\"")->required();
  auto* der = app.add_subcommand("derive", "chain of highest derivatives");
  der->add_option("param", derive_param, "parameter expression")->required();

  int period_t = 1;
  bool use_zeta = false;
  std::optional<double> alpha;
  auto* per = app.add_subcommand("period", "period formula for L(sigma, t)");
  per->add_option("--t", period_t, "Speh length t")->required()->check(CLI::Range(1, 200));
  per->add_flag("--zeta", use_zeta, "evaluate with L(j) = zeta(j), Res = 1");
  per->add_option("--alpha", alpha, "value for the Alpha atom (odd t)");

  int residue_t = 3;
  auto* res = app.add_subcommand("residue-survival", "pole bookkeeping along Q of type (r, 2mr)");
  res->add_option("--t", residue_t, "odd t >= 3")->required()->check(CLI::Range(3, 201));

  // CLI11 also looks for --format after the subcommand.
  for (auto* sub : {verify, table, kap, der, per, res}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  const bool text = format == "text";
  try {
    if (verify->parsed()) return cmd_verify_gelfand(gelfand_flags, text, out);
    if (table->parsed()) return cmd_table(table_flags, text, out);
    if (kap->parsed()) return cmd_kappa(kappa_param, text, out);
    if (der->parsed()) return cmd_derive(derive_param, text, out);
    if (per->parsed()) return cmd_period(period_t, use_zeta, alpha, text, out);
    if (res->parsed()) return cmd_residue(residue_t, text, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariantViolation;
  }
  return kExitInputError;
}

}  // namespace klyachko::cli
