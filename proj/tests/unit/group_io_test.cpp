#include <doctest.h>

#include <filesystem>
#include <unistd.h>

#include "klyachko/error.hpp"
#include "klyachko/groups/group_io.hpp"

using namespace klyachko;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("klyachko_io_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cache round trip") {
  const fs::path dir = scratch_dir();
  const FiniteField f = FiniteField::of_order(4);
  const GroupTable g = make_group_table(2, f);
  const fs::path path = group_cache_path(dir, 2, f);
  save_group_cache(g, path);
  const auto loaded = load_group_cache(2, f, path);
  REQUIRE(loaded.has_value());
  CHECK(loaded->elements() == g.elements());
  CHECK(loaded->class_index() == g.class_index());
  CHECK(loaded->exponent() == g.exponent());
  REQUIRE(loaded->class_count() == g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    CHECK(loaded->classes()[c].representative == g.classes()[c].representative);
    CHECK(loaded->classes()[c].size == g.classes()[c].size);
    CHECK(loaded->classes()[c].invariant_factors == g.classes()[c].invariant_factors);
    CHECK(loaded->classes()[c].inverse_class == g.classes()[c].inverse_class);
  }

  // Another group's file is ignored, not misread.
  CHECK_FALSE(load_group_cache(3, f, path).has_value());
  CHECK_FALSE(load_group_cache(2, f, dir / "missing.klyc").has_value());

  // A truncated file is reported.
  fs::resize_file(path, fs::file_size(path) / 2);
  try {
    load_group_cache(2, f, path);
    FAIL("expected CacheFormat");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CacheFormat);
  }

  // A fresh directory is populated, then reused.
  const fs::path fresh = dir / "fresh";
  const GroupTable built = cached_group_table(2, f, {}, fresh);
  CHECK(fs::exists(group_cache_path(fresh, 2, f)));
  CHECK(cached_group_table(2, f, {}, fresh).elements() == built.elements());
  fs::remove_all(dir);
}

TEST_CASE("group json") {
  const GroupTable g = make_group_table(2, FiniteField::of_order(3));
  const auto j = group_table_to_json(g);
  CHECK(j["order"] == 48);
  CHECK(j["q"] == 3);
  CHECK(j["classes"].size() == 8);
  std::uint64_t total = 0;
  for (const auto& c : j["classes"]) total += c["size"].get<std::uint64_t>();
  CHECK(total == 48);
}
