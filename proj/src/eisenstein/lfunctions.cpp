#include "klyachko/eisenstein/lfunctions.hpp"

#include <boost/rational.hpp>
#include <cmath>
#include <limits>

#include "klyachko/error.hpp"

namespace klyachko {

std::vector<std::complex<double>> LocalRSFactor::ratios() const {
  std::vector<std::complex<double>> out;
  out.reserve(satake.size() * satake.size());
  for (const auto& a : satake)
    for (const auto& b : satake) out.push_back(a / b);
  return out;
}

std::vector<std::complex<double>> LocalRSFactor::denominator_coefficients() const {
  std::vector<std::complex<double>> poly{1.0};
  for (const auto& c : ratios()) {
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= c * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

std::complex<double> LocalRSFactor::at(double s) const {
  if (!(q > 1)) throw Error(ErrorCode::InvalidArgument, "residue field size must exceed 1");
  for (const auto& a : satake) {
    if (a == std::complex<double>(0.0)) throw Error(ErrorCode::InvalidArgument, "zero Satake parameter");
  }
  const double x = std::pow(q, -s);
  std::complex<double> value = 1.0;
  for (const auto& c : ratios()) {
    const std::complex<double> z = c * x;
    if (std::abs(std::abs(z) - 1.0) <= 1e-12) {
      throw Error(ErrorCode::PoleAtEvaluationPoint, "|alpha_i/alpha_j q^-s| = 1");
    }
    value /= 1.0 - z;
  }
  return value;
}

std::complex<double> LocalRSFactor::at(const Rational& s) const {
  return at(boost::rational_cast<double>(s));
}

std::complex<double> local_rs_factor(const std::vector<std::complex<double>>& satake, double q,
                                     double s) {
  return LocalRSFactor{satake, q}.at(s);
}

ZetaValue zeta_direct(double s, double tolerance) {
  if (!(s > 1)) throw Error(ErrorCode::InvalidArgument, "direct series needs s > 1");
  if (!(tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  // Tail sum_{n>N} n^-s lies in [(N+1)^{1-s}, N^{1-s}] / (s-1).
  auto half_width = [s](double n) {
    return (std::pow(n, 1 - s) - std::pow(n + 1, 1 - s)) / (2 * (s - 1));
  };
  long long n = 16;
  while (half_width(static_cast<double>(n)) > tolerance / 2) {
    if (n > (1LL << 40)) throw Error(ErrorCode::InvalidArgument, "tolerance not reachable");
    n *= 2;
  }
  double sum = 0;
  for (long long k = n; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  const double nd = static_cast<double>(n);
  const double tail = (std::pow(nd, 1 - s) + std::pow(nd + 1, 1 - s)) / (2 * (s - 1));
  const double rounding = nd * std::numeric_limits<double>::epsilon() * sum;
  return {sum + tail, half_width(nd) + rounding, n};
}

}  // namespace klyachko
