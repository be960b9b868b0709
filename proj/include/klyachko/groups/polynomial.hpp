#pragma once

#include <vector>

#include "klyachko/groups/finite_field.hpp"
#include "klyachko/groups/matrix_gf.hpp"

namespace klyachko {

/// Polynomial over F_q, coefficients low degree first, no trailing zeros.
/// The zero polynomial has no coefficients.
using PolyGF = std::vector<FiniteField::Element>;

int degree(const PolyGF& a) noexcept;  // -1 for zero
void normalize(PolyGF& a);
PolyGF poly_add(const FiniteField& f, const PolyGF& a, const PolyGF& b);
PolyGF poly_sub(const FiniteField& f, const PolyGF& a, const PolyGF& b);
PolyGF poly_mul(const FiniteField& f, const PolyGF& a, const PolyGF& b);
/// Euclidean division: a = quot * b + rem, b nonzero.
void poly_divmod(const FiniteField& f, const PolyGF& a, const PolyGF& b, PolyGF& quot,
                 PolyGF& rem);
PolyGF make_monic(const FiniteField& f, const PolyGF& a);

/// Invariant factors of the similarity class of g: the non-constant monic
/// diagonal entries of the Smith normal form of xI - g over F_q[x], in
/// divisibility order. Their degrees sum to the size of g.
std::vector<PolyGF> invariant_factors(const FiniteField& f, const MatrixGF& g);

}  // namespace klyachko
