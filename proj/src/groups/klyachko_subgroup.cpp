#include "klyachko/groups/klyachko_subgroup.hpp"

#include <string>

#include "klyachko/error.hpp"

namespace klyachko {
namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_spec(const KlyachkoSubgroupSpec& spec) {
  if (spec.r < 0 || spec.k < 0) {
    throw Error(ErrorCode::InvalidArgument, "r and k must be nonnegative");
  }
}

// Offsets of the unipotent and symplectic blocks inside an n x n matrix.
struct Blocks {
  int u0;
  int h0;
};

Blocks blocks_of(const KlyachkoSubgroupSpec& spec) {
  return spec.orientation == Orientation::H ? Blocks{0, spec.r} : Blocks{2 * spec.k, 0};
}

}  // namespace

MatrixGF symplectic_form(const FiniteField& f, int k) {
  MatrixGF j(2 * k);
  for (int i = 0; i < k; ++i) {
    j(i, k + (k - 1 - i)) = 1;
    j(k + i, k - 1 - i) = f.neg(1);
  }
  return j;
}

bool sp_membership(const FiniteField& f, const MatrixGF& g, int k) {
  if (g.size() != 2 * k) {
    throw Error(ErrorCode::SizeMismatch,
                "expected a " + std::to_string(2 * k) + "x" + std::to_string(2 * k) + " matrix");
  }
  const MatrixGF j = symplectic_form(f, k);
  return multiply(f, multiply(f, transpose(g), j), g) == j;
}

bool h_membership(const FiniteField& f, const MatrixGF& g, const KlyachkoSubgroupSpec& spec) {
  check_spec(spec);
  const int n = spec.n();
  if (g.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "matrix size " + std::to_string(g.size()) +
                                             " differs from r + 2k = " + std::to_string(n));
  }
  const int r = spec.r;
  const int k2 = 2 * spec.k;
  const auto [u0, h0] = blocks_of(spec);

  // Lower-left block must vanish: rows of the lower diagonal block against
  // columns of the upper one.
  const int low0 = spec.orientation == Orientation::H ? r : k2;
  for (int i = low0; i < n; ++i)
    for (int j = 0; j < low0; ++j)
      if (g(i, j) != 0) return false;

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const auto v = g(u0 + i, u0 + j);
      if (i == j && v != 1) return false;
      if (i > j && v != 0) return false;
    }
  }

  MatrixGF h(k2);
  for (int i = 0; i < k2; ++i)
    for (int j = 0; j < k2; ++j) h(i, j) = g(h0 + i, h0 + j);
  return sp_membership(f, h, spec.k);
}

int psi_r_value(const FiniteField& f, const MatrixGF& g, const KlyachkoSubgroupSpec& spec) {
  if (!h_membership(f, g, spec)) {
    throw Error(ErrorCode::NotInSubgroup, "matrix is not in the Klyachko subgroup");
  }
  const int u0 = blocks_of(spec).u0;
  FiniteField::Element sum = 0;
  for (int i = 0; i + 1 < spec.r; ++i) sum = f.add(sum, g(u0 + i, u0 + i + 1));
  return f.trace(f.mul(spec.psi_twist, sum));
}

std::uint64_t sp_order(int q, int k) {
  std::uint64_t order = ipow(static_cast<std::uint64_t>(q), k * k);
  for (int i = 1; i <= k; ++i) order *= ipow(static_cast<std::uint64_t>(q), 2 * i) - 1;
  return order;
}

std::uint64_t klyachko_subgroup_order(int q, const KlyachkoSubgroupSpec& spec) {
  check_spec(spec);
  const auto uq = static_cast<std::uint64_t>(q);
  return ipow(uq, spec.r * (spec.r - 1) / 2) * ipow(uq, 2 * spec.k * spec.r) * sp_order(q, spec.k);
}

}  // namespace klyachko
