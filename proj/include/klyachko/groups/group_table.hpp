#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "klyachko/groups/finite_field.hpp"
#include "klyachko/groups/matrix_gf.hpp"
#include "klyachko/groups/polynomial.hpp"

namespace klyachko {

inline constexpr std::uint64_t kDefaultMaxElements = 10'000'000;

struct GroupLimits {
  std::uint64_t max_elements = kDefaultMaxElements;
  unsigned threads = 1;
};

struct ConjClass {
  MatrixGF representative;  // least element in row-major order
  std::uint64_t size = 0;
  std::vector<PolyGF> invariant_factors;
  std::size_t inverse_class = 0;
  std::uint64_t element_order = 0;
};

/// GL_n(F_q), every element listed in increasing packed-code order.
class GroupTable {
 public:
  GroupTable(int n, FiniteField field);

  int n() const noexcept { return n_; }
  const FiniteField& field() const noexcept { return field_; }
  const MatrixCodec& codec() const noexcept { return codec_; }

  std::uint64_t order() const noexcept { return elements_.size(); }
  const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }
  MatrixGF element(std::size_t index) const { return codec_.unpack(elements_[index]); }

  /// Position of a packed element, nullopt if not present.
  std::optional<std::size_t> index_of(std::uint64_t code) const noexcept;
  std::optional<std::size_t> index_of(const MatrixGF& m) const noexcept {
    return index_of(codec_.pack(m));
  }

  bool has_classes() const noexcept { return !classes_.empty(); }
  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  /// Class index of each element, aligned with elements().
  const std::vector<std::uint32_t>& class_index() const noexcept { return class_of_; }
  std::size_t class_of(std::size_t element_index) const { return class_of_[element_index]; }
  std::size_t class_of(const MatrixGF& m) const;
  std::size_t identity_class() const;

  /// lcm of element orders; available once classes are computed.
  std::uint64_t exponent() const noexcept { return exponent_; }

 private:
  friend GroupTable gl_enumerate(int, const FiniteField&, const GroupLimits&);
  friend GroupTable conjugacy_classes(GroupTable, unsigned);
  friend class GroupTableAccess;

  int n_;
  FiniteField field_;
  MatrixCodec codec_;
  std::vector<std::uint64_t> elements_;
  std::vector<std::uint32_t> class_of_;
  std::vector<ConjClass> classes_;
  std::uint64_t exponent_ = 0;
};

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i); nullopt on 64-bit overflow.
std::optional<std::uint64_t> gl_order(int n, int q) noexcept;

/// Every invertible n x n matrix over the field, in increasing code order.
/// Throws GroupTooLarge when the order formula exceeds limits.max_elements.
GroupTable gl_enumerate(int n, const FiniteField& field, const GroupLimits& limits = {});

/// Fills the class partition keyed by invariant factors of xI - g.
GroupTable conjugacy_classes(GroupTable table, unsigned threads = 1);

/// Enumeration followed by class computation.
GroupTable make_group_table(int n, const FiniteField& field, const GroupLimits& limits = {});

/// Grants the cache reader write access to a table's internals.
class GroupTableAccess {
 public:
  static std::vector<std::uint64_t>& elements(GroupTable& t) { return t.elements_; }
  static std::vector<std::uint32_t>& class_of(GroupTable& t) { return t.class_of_; }
  static std::vector<ConjClass>& classes(GroupTable& t) { return t.classes_; }
  static std::uint64_t& exponent(GroupTable& t) { return t.exponent_; }
};

}  // namespace klyachko
