#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include <json.hpp>

#include "klyachko/groups/group_table.hpp"

namespace klyachko {

inline constexpr std::uint32_t kGroupCacheVersion = 1;

/// Binary cache layout (little-endian host order):
///   magic "KLYGTAB1" (8 bytes), u32 version, u32 n, u32 p, u32 e,
///   u64 element count, u64 class count, u64 exponent,
///   u64 elements[count], u32 class_of[count],
///   per class: u64 representative code, u64 size, u64 inverse class,
///              u64 element order, u32 factor count,
///              per factor: u32 length, u8 coefficients[length].
void save_group_cache(const GroupTable& table, const std::filesystem::path& path);

/// Reads a cache written for exactly (n, field). Returns nullopt when the
/// file is missing or describes another group; throws CacheFormat on a
/// damaged file.
std::optional<GroupTable> load_group_cache(int n, const FiniteField& field,
                                           const std::filesystem::path& path);

std::filesystem::path group_cache_path(const std::filesystem::path& dir, int n,
                                       const FiniteField& field);

/// Loads from dir when possible, otherwise builds and (if dir is nonempty)
/// writes the cache.
GroupTable cached_group_table(int n, const FiniteField& field, const GroupLimits& limits,
                              const std::filesystem::path& dir);

/// {n, p, e, q, order, exponent, classes: [{index, representative, size,
///  order, invariant_factors, inverse_class}]}
nlohmann::json group_table_to_json(const GroupTable& table);

}  // namespace klyachko
