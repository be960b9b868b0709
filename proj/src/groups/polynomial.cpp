#include "klyachko/groups/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "klyachko/error.hpp"

namespace klyachko {

int degree(const PolyGF& a) noexcept { return static_cast<int>(a.size()) - 1; }

void normalize(PolyGF& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyGF poly_add(const FiniteField& f, const PolyGF& a, const PolyGF& b) {
  PolyGF c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.add(c[i], b[i]);
  normalize(c);
  return c;
}

PolyGF poly_sub(const FiniteField& f, const PolyGF& a, const PolyGF& b) {
  PolyGF c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = f.sub(c[i], b[i]);
  normalize(c);
  return c;
}

PolyGF poly_mul(const FiniteField& f, const PolyGF& a, const PolyGF& b) {
  if (a.empty() || b.empty()) return {};
  PolyGF c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  normalize(c);
  return c;
}

void poly_divmod(const FiniteField& f, const PolyGF& a, const PolyGF& b, PolyGF& quot,
                 PolyGF& rem) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  rem = a;
  normalize(rem);
  const int db = degree(b);
  quot.assign(std::max(0, degree(rem) - db + 1), 0);
  const auto lead_inv = f.inv(b.back());
  while (degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const auto c = f.mul(rem.back(), lead_inv);
    quot[shift] = c;
    for (int j = 0; j <= db; ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b[j]));
    normalize(rem);
  }
  normalize(quot);
}

PolyGF make_monic(const FiniteField& f, const PolyGF& a) {
  if (a.empty()) return a;
  const auto inv = f.inv(a.back());
  PolyGF r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], inv);
  return r;
}

namespace {

using PolyMatrix = std::vector<std::vector<PolyGF>>;

// row_i -= c * row_k
void row_axpy(const FiniteField& f, PolyMatrix& m, int i, int k, const PolyGF& c) {
  for (std::size_t j = 0; j < m[i].size(); ++j) {
    m[i][j] = poly_sub(f, m[i][j], poly_mul(f, c, m[k][j]));
  }
}

// col_j -= c * col_k
void col_axpy(const FiniteField& f, PolyMatrix& m, int j, int k, const PolyGF& c) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i][j] = poly_sub(f, m[i][j], poly_mul(f, c, m[i][k]));
  }
}

}  // namespace

std::vector<PolyGF> invariant_factors(const FiniteField& f, const MatrixGF& g) {
  const int n = g.size();
  PolyMatrix m(n, std::vector<PolyGF>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PolyGF entry{f.neg(g(i, j))};
      if (i == j) entry.push_back(1);
      normalize(entry);
      m[i][j] = std::move(entry);
    }
  }

  std::vector<PolyGF> diagonal;
  for (int k = 0; k < n; ++k) {
    for (;;) {
      // Move a nonzero entry of least degree to (k, k).
      int bi = -1;
      int bj = -1;
      for (int i = k; i < n; ++i) {
        for (int j = k; j < n; ++j) {
          if (m[i][j].empty()) continue;
          if (bi < 0 || degree(m[i][j]) < degree(m[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) break;  // remaining block is zero (cannot happen for xI - g)
      std::swap(m[k], m[bi]);
      for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][bj]);

      bool dirty = false;
      PolyGF quot;
      PolyGF rem;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k].empty()) continue;
        poly_divmod(f, m[i][k], m[k][k], quot, rem);
        row_axpy(f, m, i, k, quot);
        dirty = dirty || !rem.empty();
      }
      for (int j = k + 1; j < n; ++j) {
        if (m[k][j].empty()) continue;
        poly_divmod(f, m[k][j], m[k][k], quot, rem);
        col_axpy(f, m, j, k, quot);
        dirty = dirty || !rem.empty();
      }
      if (dirty) continue;

      // Pivot must divide the rest of the block.
      int bad_row = -1;
      for (int i = k + 1; i < n && bad_row < 0; ++i) {
        for (int j = k + 1; j < n; ++j) {
          if (m[i][j].empty()) continue;
          poly_divmod(f, m[i][j], m[k][k], quot, rem);
          if (!rem.empty()) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (int j = k; j < n; ++j) m[k][j] = poly_add(f, m[k][j], m[bad_row][j]);
    }
    diagonal.push_back(make_monic(f, m[k][k]));
  }

  std::vector<PolyGF> factors;
  for (auto& d : diagonal) {
    if (degree(d) >= 1) factors.push_back(std::move(d));
  }
  std::sort(factors.begin(), factors.end(),
            [](const PolyGF& a, const PolyGF& b) { return degree(a) < degree(b); });
  return factors;
}

}  // namespace klyachko
