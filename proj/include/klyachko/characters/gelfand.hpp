#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "klyachko/characters/character_table.hpp"
#include "klyachko/groups/group_table.hpp"

namespace klyachko {

inline constexpr const char* kReportVersion = "1.0";

struct GelfandOptions {
  GroupLimits limits;
  int max_field_order = kDefaultMaxFieldOrder;
  std::optional<std::uint64_t> ell;
  int psi_twist = 1;  // psi(x) = zeta_p^{Tr(psi_twist * x)}
  CharacterTableOptions table;
  std::filesystem::path cache_dir;  // empty: no cache
};

struct GelfandRow {
  std::size_t index = 0;
  std::uint64_t dim = 0;
  std::vector<std::uint64_t> mults;  // m_{n-2k,2k} for k = 0..n/2
  std::uint64_t total = 0;
};

struct ModelSummary {
  int k = 0;
  int r = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t index = 0;  // dimension of M_{r,2k}
};

struct GelfandReport {
  int n = 0;
  int q = 0;
  std::uint64_t group_order = 0;
  std::uint64_t ell = 0;
  int psi_seed = 1;
  std::uint64_t table_seed = 0;
  std::size_t class_count = 0;
  std::vector<ModelSummary> models;
  std::vector<GelfandRow> rows;

  // Observed properties of this (n, q) run; never assumed.
  bool existence = false;     // every m_pi >= 1
  bool disjointness = false;  // at most one nonzero entry per row
  bool uniqueness = false;    // every entry <= 1
  bool gelfand = false;       // every m_pi == 1

  std::uint64_t model_dimension_sum = 0;        // sum_k [G : H_{n-2k,2k}]
  std::uint64_t irreducible_dimension_sum = 0;  // sum_pi dim pi
  bool orthogonality = false;
};

/// Builds the multiplicity matrix of every irreducible of GL_n(F_q) in
/// every Klyachko model M_{n-2k,2k}.
GelfandReport verify_gelfand(int n, int q, const GelfandOptions& options = {});

/// {version, n, q, ell, psi_seed, table_seed, group_order, class_count,
///  dims, models, rows: [{index, dim, mults: [[k, m]...], total}], flags,
///  dim_check}
nlohmann::json gelfand_report_to_json(const GelfandReport& report);

}  // namespace klyachko
