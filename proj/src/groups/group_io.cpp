#include "klyachko/groups/group_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <string>

#include "klyachko/error.hpp"

namespace klyachko {
namespace {

constexpr std::array<char, 8> kMagic{'K', 'L', 'Y', 'G', 'T', 'A', 'B', '1'};

template <typename T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw Error(ErrorCode::CacheFormat, "truncated group cache");
  return value;
}

}  // namespace

void save_group_cache(const GroupTable& table, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::CacheFormat, "cannot write " + tmp.string());
    out.write(kMagic.data(), kMagic.size());
    put<std::uint32_t>(out, kGroupCacheVersion);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(table.n()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(table.field().p()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(table.field().e()));
    put<std::uint64_t>(out, table.order());
    put<std::uint64_t>(out, table.class_count());
    put<std::uint64_t>(out, table.exponent());
    out.write(reinterpret_cast<const char*>(table.elements().data()),
              static_cast<std::streamsize>(table.elements().size() * sizeof(std::uint64_t)));
    out.write(reinterpret_cast<const char*>(table.class_index().data()),
              static_cast<std::streamsize>(table.class_index().size() * sizeof(std::uint32_t)));
    for (const auto& c : table.classes()) {
      put<std::uint64_t>(out, table.codec().pack(c.representative));
      put<std::uint64_t>(out, c.size);
      put<std::uint64_t>(out, c.inverse_class);
      put<std::uint64_t>(out, c.element_order);
      put<std::uint32_t>(out, static_cast<std::uint32_t>(c.invariant_factors.size()));
      for (const auto& poly : c.invariant_factors) {
        put<std::uint32_t>(out, static_cast<std::uint32_t>(poly.size()));
        out.write(reinterpret_cast<const char*>(poly.data()), static_cast<std::streamsize>(poly.size()));
      }
    }
    if (!out) throw Error(ErrorCode::CacheFormat, "failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<GroupTable> load_group_cache(int n, const FiniteField& field,
                                           const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error(ErrorCode::CacheFormat, "bad magic in " + path.string());
  if (get<std::uint32_t>(in) != kGroupCacheVersion) return std::nullopt;
  const auto cn = get<std::uint32_t>(in);
  const auto cp = get<std::uint32_t>(in);
  const auto ce = get<std::uint32_t>(in);
  if (static_cast<int>(cn) != n || static_cast<int>(cp) != field.p() ||
      static_cast<int>(ce) != field.e()) {
    return std::nullopt;
  }
  const auto count = get<std::uint64_t>(in);
  const auto class_count = get<std::uint64_t>(in);
  const auto exponent = get<std::uint64_t>(in);
  const auto expected = gl_order(n, field.q());
  if (!expected || count != *expected || class_count == 0 || class_count > count) {
    throw Error(ErrorCode::CacheFormat, "inconsistent counts in " + path.string());
  }

  GroupTable table(n, field);
  auto& elements = GroupTableAccess::elements(table);
  auto& class_of = GroupTableAccess::class_of(table);
  auto& classes = GroupTableAccess::classes(table);
  elements.resize(count);
  class_of.resize(count);
  in.read(reinterpret_cast<char*>(elements.data()), static_cast<std::streamsize>(count * sizeof(std::uint64_t)));
  in.read(reinterpret_cast<char*>(class_of.data()), static_cast<std::streamsize>(count * sizeof(std::uint32_t)));
  if (!in) throw Error(ErrorCode::CacheFormat, "truncated element list in " + path.string());
  classes.resize(class_count);
  std::uint64_t total = 0;
  for (auto& c : classes) {
    c.representative = table.codec().unpack(get<std::uint64_t>(in));
    c.size = get<std::uint64_t>(in);
    c.inverse_class = get<std::uint64_t>(in);
    c.element_order = get<std::uint64_t>(in);
    const auto factors = get<std::uint32_t>(in);
    if (factors > static_cast<std::uint32_t>(n)) throw Error(ErrorCode::CacheFormat, "bad factor count");
    c.invariant_factors.resize(factors);
    for (auto& poly : c.invariant_factors) {
      const auto len = get<std::uint32_t>(in);
      if (len > static_cast<std::uint32_t>(n + 1)) throw Error(ErrorCode::CacheFormat, "bad factor length");
      poly.resize(len);
      in.read(reinterpret_cast<char*>(poly.data()), len);
    }
    if (!in || c.inverse_class >= class_count) throw Error(ErrorCode::CacheFormat, "bad class record");
    total += c.size;
  }
  if (total != count) throw Error(ErrorCode::CacheFormat, "class sizes do not sum to the order");
  for (auto idx : class_of) {
    if (idx >= class_count) throw Error(ErrorCode::CacheFormat, "class index out of range");
  }
  GroupTableAccess::exponent(table) = exponent;
  return table;
}

std::filesystem::path group_cache_path(const std::filesystem::path& dir, int n,
                                       const FiniteField& field) {
  return dir / ("gl_" + std::to_string(n) + "_" + std::to_string(field.p()) + "_" +
                std::to_string(field.e()) + ".klyc");
}

GroupTable cached_group_table(int n, const FiniteField& field, const GroupLimits& limits,
                              const std::filesystem::path& dir) {
  if (dir.empty()) return make_group_table(n, field, limits);
  const auto path = group_cache_path(dir, n, field);
  const auto order = gl_order(n, field.q());
  if (!order || *order > limits.max_elements) {
    throw Error(ErrorCode::GroupTooLarge, "group exceeds the element cap");
  }
  try {
    if (auto cached = load_group_cache(n, field, path)) return std::move(*cached);
  } catch (const Error&) {
    // Damaged cache files are rebuilt below.
  }
  GroupTable table = make_group_table(n, field, limits);
  save_group_cache(table, path);
  return table;
}

nlohmann::json group_table_to_json(const GroupTable& table) {
  using nlohmann::json;
  json classes = json::array();
  for (std::size_t i = 0; i < table.class_count(); ++i) {
    const auto& c = table.classes()[i];
    json rep = json::array();
    for (int r = 0; r < table.n(); ++r) {
      json row = json::array();
      for (int col = 0; col < table.n(); ++col) row.push_back(c.representative(r, col));
      rep.push_back(std::move(row));
    }
    json factors = json::array();
    for (const auto& poly : c.invariant_factors) {
      factors.push_back(std::vector<int>(poly.begin(), poly.end()));
    }
    classes.push_back({{"index", i},
                       {"representative", std::move(rep)},
                       {"size", c.size},
                       {"order", c.element_order},
                       {"invariant_factors", std::move(factors)},
                       {"inverse_class", c.inverse_class}});
  }
  return {{"n", table.n()},
          {"p", table.field().p()},
          {"e", table.field().e()},
          {"q", table.field().q()},
          {"modulus", table.field().modulus()},
          {"order", table.order()},
          {"exponent", table.exponent()},
          {"classes", std::move(classes)}};
}

}  // namespace klyachko
