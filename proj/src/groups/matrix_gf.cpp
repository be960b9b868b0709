#include "klyachko/groups/matrix_gf.hpp"

#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "klyachko/error.hpp"

namespace klyachko {

MatrixGF::MatrixGF(int n) : n_(n) {
  if (n < 0 || n > kMaxMatrixDim) {
    throw Error(ErrorCode::SizeMismatch, "matrix size " + std::to_string(n) + " unsupported");
  }
}

MatrixGF::MatrixGF(int n, const std::vector<int>& row_major) : MatrixGF(n) {
  if (static_cast<int>(row_major.size()) != n * n) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(n * n) + " entries");
  }
  for (int i = 0; i < n * n; ++i) e_[i] = static_cast<Element>(row_major[i]);
}

MatrixGF MatrixGF::identity(int n) {
  MatrixGF m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<int> MatrixGF::entries() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_ * n_);
}

MatrixGF multiply(const FiniteField& f, const MatrixGF& a, const MatrixGF& b) {
  const int n = a.size();
  if (b.size() != n) throw Error(ErrorCode::SizeMismatch, "multiply: sizes differ");
  MatrixGF c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  }
  return c;
}

MatrixGF transpose(const MatrixGF& a) {
  MatrixGF t(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
  return t;
}

FiniteField::Element determinant(const FiniteField& f, const MatrixGF& a) {
  MatrixGF m = a;
  const int n = m.size();
  FiniteField::Element det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    const auto inv = f.inv(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const auto factor = f.mul(m(i, col), inv);
      for (int j = col; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(col, j)));
    }
  }
  return det;
}

std::optional<MatrixGF> inverse(const FiniteField& f, const MatrixGF& a) {
  const int n = a.size();
  MatrixGF m = a;
  MatrixGF r = MatrixGF::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(r(pivot, j), r(col, j));
      }
    }
    const auto inv = f.inv(m(col, col));
    for (int j = 0; j < n; ++j) {
      m(col, j) = f.mul(m(col, j), inv);
      r(col, j) = f.mul(r(col, j), inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const auto factor = m(i, col);
      for (int j = 0; j < n; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(col, j)));
        r(i, j) = f.sub(r(i, j), f.mul(factor, r(col, j)));
      }
    }
  }
  return r;
}

std::uint64_t element_order(const FiniteField& f, const MatrixGF& a) {
  const MatrixGF id = MatrixGF::identity(a.size());
  MatrixGF power = a;
  std::uint64_t k = 1;
  while (!(power == id)) {
    power = multiply(f, power, a);
    ++k;
  }
  return k;
}

MatrixCodec::MatrixCodec(int n, int q)
    : n_(n), bits_(std::bit_width(static_cast<unsigned>(q - 1))) {
  if (!fits(n, q)) {
    throw Error(ErrorCode::GroupTooLarge,
                "matrices of size " + std::to_string(n) + " over F_" + std::to_string(q) +
                    " do not fit the 64-bit element code");
  }
}

bool MatrixCodec::fits(int n, int q) noexcept {
  const int bits = std::bit_width(static_cast<unsigned>(q - 1));
  return n >= 1 && n <= kMaxMatrixDim && n * n * bits <= 64;
}

std::uint64_t MatrixCodec::pack(const MatrixGF& m) const noexcept {
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) code = (code << bits_) | m(i, j);
  return code;
}

MatrixGF MatrixCodec::unpack(std::uint64_t code) const noexcept {
  MatrixGF m(n_);
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  for (int idx = n_ * n_ - 1; idx >= 0; --idx) {
    m(idx / n_, idx % n_) = static_cast<FiniteField::Element>(code & mask);
    code >>= bits_;
  }
  return m;
}

}  // namespace klyachko
