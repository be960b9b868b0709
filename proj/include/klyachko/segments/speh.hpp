#pragma once

#include <string>
#include <vector>

#include "klyachko/segments/segment.hpp"

namespace klyachko {

/// U(delta, t)[alpha] where delta is the square-integrable representation
/// attached to the d singletons rho[(d-1)/2], ..., rho[(1-d)/2].
struct SpehBlock {
  CuspidalLabel rho;  // shift 0
  int d = 1;
  int t = 1;
  Rational alpha{0};

  int delta_degree() const noexcept { return rho.degree * d; }
  int degree() const noexcept { return delta_degree() * t; }

  friend bool operator==(const SpehBlock&, const SpehBlock&) = default;
};

/// a(delta, t, alpha): d segments of length t centred at
/// (1-d)/2 + alpha, ..., (d-1)/2 + alpha. Throws EmptyBlock for t = 0.
Multisegment speh_multisegment(const SpehBlock& block);

/// U(delta, t)[alpha] -> U(delta, t-1)[alpha - 1/2]. Throws EmptyBlock for t = 0.
SpehBlock speh_highest_derivative(const SpehBlock& block);

struct ProductDerivative {
  int order = 0;
  std::vector<SpehBlock> blocks;  // empty blocks removed
};

/// Highest derivative of U(delta_1,t_1)[alpha_1] x ... x U(delta_m,t_m)[alpha_m].
ProductDerivative product_highest_derivative(const std::vector<SpehBlock>& blocks);

enum class BlockKind { Plain, Paired };

/// A plain block is U(delta,t)[alpha]; a paired one is
/// U(delta,t)[alpha] x U(delta,t)[-alpha], stored with alpha >= 0.
struct TadicBlock {
  SpehBlock block;
  BlockKind kind = BlockKind::Plain;

  friend bool operator==(const TadicBlock&, const TadicBlock&) = default;
};

class TadicParameter {
 public:
  TadicParameter() = default;
  explicit TadicParameter(std::vector<TadicBlock> blocks);

  const std::vector<TadicBlock>& blocks() const noexcept { return blocks_; }
  bool empty() const noexcept { return blocks_.empty(); }
  int n() const noexcept;

  /// The Speh factors of the product, each pair contributing both twists.
  std::vector<SpehBlock> expand() const;

  friend bool operator==(const TadicParameter&, const TadicParameter&) = default;

 private:
  std::vector<TadicBlock> blocks_;
};

enum class ModelFamily { H, HPrime };

struct KlyachkoType {
  int r = 0;
  int k = 0;
  int n = 0;
  ModelFamily family = ModelFamily::H;

  friend bool operator==(const KlyachkoType&, const KlyachkoType&) = default;
};

/// "H_{1,2} with psi_1", or "H'_{2,1} with conj(psi'_1)" for the flipped family.
std::string model_name(const KlyachkoType& type);

TadicParameter contragredient(const TadicParameter& param);

/// r = sum of deg(delta) over odd-t factors, k = sum of deg(delta) * floor(t/2)
/// over all factors, paired blocks counted twice.
KlyachkoType kappa(const TadicParameter& param);

bool validate_unitary(const TadicParameter& param) noexcept;

/// Same (r, k) read on the transpose-inverse side.
KlyachkoType dual_model_type(const KlyachkoType& type) noexcept;

}  // namespace klyachko
