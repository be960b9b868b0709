#include "klyachko/groups/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "klyachko/error.hpp"
#include "klyachko/parallel.hpp"

namespace klyachko {

GroupTable::GroupTable(int n, FiniteField field)
    : n_(n), field_(std::move(field)), codec_(n, field_.q()) {}

std::optional<std::size_t> GroupTable::index_of(std::uint64_t code) const noexcept {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), code);
  if (it == elements_.end() || *it != code) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t GroupTable::class_of(const MatrixGF& m) const {
  const auto idx = index_of(m);
  if (!idx) throw Error(ErrorCode::NotInSubgroup, "matrix is not an element of the table");
  return class_of_.at(*idx);
}

std::size_t GroupTable::identity_class() const { return class_of(MatrixGF::identity(n_)); }

std::optional<std::uint64_t> gl_order(int n, int q) noexcept {
  unsigned __int128 order = 1;
  unsigned __int128 qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<unsigned>(q);
  unsigned __int128 qi = 1;
  const unsigned __int128 limit = ~std::uint64_t{0};
  for (int i = 0; i < n; ++i) {
    order *= (qn - qi);
    if (order > limit) return std::nullopt;
    qi *= static_cast<unsigned>(q);
  }
  return static_cast<std::uint64_t>(order);
}

namespace {

// Row vectors of length n over F_q, encoded base q with the first entry most
// significant so that code order is lexicographic.
struct RowSpace {
  int n;
  int q;
  std::uint64_t count;
  std::vector<std::vector<FiniteField::Element>> digits;

  RowSpace(int n_, int q_) : n(n_), q(q_), count(1) {
    for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(q);
    digits.resize(count);
    for (std::uint64_t v = 0; v < count; ++v) {
      auto& d = digits[v];
      d.resize(n);
      std::uint64_t c = v;
      for (int i = n - 1; i >= 0; --i) {
        d[i] = static_cast<FiniteField::Element>(c % q);
        c /= q;
      }
    }
  }

  std::uint64_t encode(const std::vector<FiniteField::Element>& d) const {
    std::uint64_t c = 0;
    for (int i = 0; i < n; ++i) c = c * q + d[i];
    return c;
  }
};

void enumerate_rows(const FiniteField& f, const RowSpace& space, const MatrixCodec& codec,
                    std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& span,
                    std::vector<char>& in_span, std::vector<std::uint64_t>& out) {
  const int n = space.n;
  if (static_cast<int>(rows.size()) == n) {
    MatrixGF m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = space.digits[rows[i]][j];
    out.push_back(codec.pack(m));
    return;
  }
  std::vector<FiniteField::Element> tmp(n);
  for (std::uint64_t v = 0; v < space.count; ++v) {
    if (in_span[v]) continue;
    // Extend the span by all s + c*v.
    std::vector<std::uint64_t> grown;
    grown.reserve(span.size() * space.q);
    for (std::uint64_t s : span) {
      for (int c = 0; c < space.q; ++c) {
        for (int j = 0; j < n; ++j) {
          tmp[j] = f.add(space.digits[s][j],
                         f.mul(static_cast<FiniteField::Element>(c), space.digits[v][j]));
        }
        grown.push_back(space.encode(tmp));
      }
    }
    for (std::uint64_t g : grown) in_span[g] = 1;
    rows.push_back(v);
    enumerate_rows(f, space, codec, rows, grown, in_span, out);
    rows.pop_back();
    for (std::uint64_t g : grown) in_span[g] = 0;
    for (std::uint64_t s : span) in_span[s] = 1;
  }
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

GroupTable gl_enumerate(int n, const FiniteField& field, const GroupLimits& limits) {
  if (n < 1) throw Error(ErrorCode::SizeMismatch, "group rank must be >= 1");
  const auto order = gl_order(n, field.q());
  if (!order || *order > limits.max_elements || !MatrixCodec::fits(n, field.q())) {
    throw Error(ErrorCode::GroupTooLarge,
                "|GL_" + std::to_string(n) + "(F_" + std::to_string(field.q()) +
                    ")| exceeds the element cap " + std::to_string(limits.max_elements));
  }
  GroupTable table(n, field);
  RowSpace space(n, field.q());
  std::vector<char> in_span(space.count, 0);
  in_span[0] = 1;
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> out;
  out.reserve(*order);
  enumerate_rows(field, space, table.codec(), rows, {0}, in_span, out);
  std::sort(out.begin(), out.end());
  if (out.size() != *order) {
    throw Error(ErrorCode::InvariantViolation, "enumeration produced " +
                                                   std::to_string(out.size()) +
                                                   " elements, expected " + std::to_string(*order));
  }
  table.elements_ = std::move(out);
  return table;
}

GroupTable conjugacy_classes(GroupTable table, unsigned threads) {
  const auto& f = table.field();
  const std::size_t count = table.elements_.size();
  std::vector<std::vector<PolyGF>> keys(count);
  const unsigned workers = worker_count(threads, count);
  parallel_chunks(count, workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) keys[i] = invariant_factors(f, table.element(i));
  });

  // Elements are visited in increasing order, so the first element carrying a
  // key is the least one of its class.
  std::map<std::vector<PolyGF>, std::uint32_t> class_by_key;
  table.class_of_.assign(count, 0);
  table.classes_.clear();
  for (std::size_t i = 0; i < count; ++i) {
    auto [it, inserted] =
        class_by_key.try_emplace(keys[i], static_cast<std::uint32_t>(table.classes_.size()));
    if (inserted) {
      ConjClass c;
      c.representative = table.element(i);
      c.invariant_factors = keys[i];
      table.classes_.push_back(std::move(c));
    }
    table.class_of_[i] = it->second;
    ++table.classes_[it->second].size;
  }

  table.exponent_ = 1;
  for (auto& c : table.classes_) {
    const auto inv = inverse(f, c.representative);
    if (!inv) throw Error(ErrorCode::InvariantViolation, "class representative is singular");
    c.inverse_class = table.class_of(*inv);
    c.element_order = element_order(f, c.representative);
    table.exponent_ = lcm_u64(table.exponent_, c.element_order);
  }
  return table;
}

GroupTable make_group_table(int n, const FiniteField& field, const GroupLimits& limits) {
  return conjugacy_classes(gl_enumerate(n, field, limits), limits.threads);
}

}  // namespace klyachko
