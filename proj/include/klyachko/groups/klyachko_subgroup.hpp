#pragma once

#include <cstdint>

#include "klyachko/groups/finite_field.hpp"
#include "klyachko/groups/matrix_gf.hpp"

namespace klyachko {

/// Which corner carries the unipotent block.
///   H  : ( u X ; 0 h ), u in U_r upper left, h in Sp(2k) lower right.
///   HPrime : ( h X ; 0 u ), the mirrored family used with derivatives.
enum class Orientation { H, HPrime };

/// The pair (H_{r,2k}, psi_r). psi is x -> zeta_p^{Tr(psi_twist * x)}; every
/// nontrivial additive character of F_q has this form for a unique nonzero
/// twist.
struct KlyachkoSubgroupSpec {
  int r = 0;
  int k = 0;
  FiniteField::Element psi_twist = 1;
  Orientation orientation = Orientation::H;

  int n() const noexcept { return r + 2 * k; }
};

/// The 2k x 2k form ( 0 w_k ; -w_k 0 ), w_k the antidiagonal permutation.
MatrixGF symplectic_form(const FiniteField& f, int k);

/// ^t g J g == J. Throws SizeMismatch unless g is 2k x 2k.
bool sp_membership(const FiniteField& f, const MatrixGF& g, int k);

/// Block shape test for H_{r,2k} (or H'_{2k,r}). Throws SizeMismatch when
/// g is not (r + 2k) x (r + 2k).
bool h_membership(const FiniteField& f, const MatrixGF& g, const KlyachkoSubgroupSpec& spec);

/// Exponent e in Z/p with psi_r(g) = zeta_p^e. Throws NotInSubgroup.
int psi_r_value(const FiniteField& f, const MatrixGF& g, const KlyachkoSubgroupSpec& spec);

/// q^{k^2} prod_{i=1..k} (q^{2i} - 1).
std::uint64_t sp_order(int q, int k);
/// |U_r| * q^{2kr} * |Sp(2k)|.
std::uint64_t klyachko_subgroup_order(int q, const KlyachkoSubgroupSpec& spec);

}  // namespace klyachko
