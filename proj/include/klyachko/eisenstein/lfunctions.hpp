#pragma once

#include <complex>
#include <vector>

#include "klyachko/segments/rational.hpp"

namespace klyachko {

/// Local factor of L(s, sigma x sigma~) at one unramified place with
/// Satake parameters alpha_1..alpha_r and residue field of size q.
struct LocalRSFactor {
  std::vector<std::complex<double>> satake;
  double q = 0;

  /// alpha_i / alpha_j for all (i, j), row-major: the factor is
  /// prod (1 - c X)^{-1} with X = q^{-s}.
  std::vector<std::complex<double>> ratios() const;

  /// Coefficients of prod (1 - c X), lowest degree first (length r^2 + 1).
  std::vector<std::complex<double>> denominator_coefficients() const;

  /// Raises PoleAtEvaluationPoint when some |c q^{-s}| = 1.
  std::complex<double> at(double s) const;
  std::complex<double> at(const Rational& s) const;
};

/// Convenience wrapper; validates that all alpha_i are nonzero and q > 1.
std::complex<double> local_rs_factor(const std::vector<std::complex<double>>& satake, double q,
                                     double s);

struct ZetaValue {
  double value = 0;
  double error_bound = 0;  // |zeta(s) - value| <= error_bound
  long long terms = 0;
};

/// zeta(s), s > 1, from the partial sum to N plus the midpoint of the
/// integral bounds on the tail; N is grown until the bound is <= tolerance.
ZetaValue zeta_direct(double s, double tolerance = 1e-10);

}  // namespace klyachko
