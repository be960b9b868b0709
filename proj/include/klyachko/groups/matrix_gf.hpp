#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "klyachko/groups/finite_field.hpp"

namespace klyachko {

inline constexpr int kMaxMatrixDim = 8;

/// Square matrix over a small finite field, entries are field codes.
///
/// The matrix does not own its field; every arithmetic helper takes the
/// field explicitly. Comparison is lexicographic in row-major order, which
/// agrees with comparison of packed codes.
class MatrixGF {
 public:
  using Element = FiniteField::Element;

  MatrixGF() = default;
  explicit MatrixGF(int n);
  MatrixGF(int n, const std::vector<int>& row_major);

  static MatrixGF identity(int n);

  int size() const noexcept { return n_; }
  Element operator()(int i, int j) const noexcept { return e_[i * n_ + j]; }
  Element& operator()(int i, int j) noexcept { return e_[i * n_ + j]; }

  std::vector<int> entries() const;

  friend bool operator==(const MatrixGF& a, const MatrixGF& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const MatrixGF& a, const MatrixGF& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  int n_ = 0;
  std::array<Element, kMaxMatrixDim * kMaxMatrixDim> e_{};
};

MatrixGF multiply(const FiniteField& f, const MatrixGF& a, const MatrixGF& b);
MatrixGF transpose(const MatrixGF& a);
FiniteField::Element determinant(const FiniteField& f, const MatrixGF& a);
/// Gauss-Jordan inverse; nullopt for singular input.
std::optional<MatrixGF> inverse(const FiniteField& f, const MatrixGF& a);
/// Multiplicative order of an invertible matrix.
std::uint64_t element_order(const FiniteField& f, const MatrixGF& a);

/// Fixed-width packing of a matrix into 64 bits, first entry most
/// significant. Packed order equals the row-major lexicographic order.
class MatrixCodec {
 public:
  MatrixCodec(int n, int q);

  /// True iff n*n entries of the needed bit width fit into 64 bits.
  static bool fits(int n, int q) noexcept;

  int size() const noexcept { return n_; }
  int bits() const noexcept { return bits_; }

  std::uint64_t pack(const MatrixGF& m) const noexcept;
  MatrixGF unpack(std::uint64_t code) const noexcept;

 private:
  int n_;
  int bits_;
};

}  // namespace klyachko
