#include "klyachko/segments/speh.hpp"

#include <algorithm>
#include <tuple>

#include "klyachko/error.hpp"

namespace klyachko {

Multisegment speh_multisegment(const SpehBlock& block) {
  if (block.t == 0) throw Error(ErrorCode::EmptyBlock, "U(delta,0) has no multisegment");
  if (block.t < 0 || block.d < 1) throw Error(ErrorCode::InvalidArgument, "need d >= 1, t >= 0");
  const Rational half_width(block.t - 1, 2);
  std::vector<Segment> segs;
  segs.reserve(block.d);
  for (int j = 0; j < block.d; ++j) {
    const Rational centre = Rational(1 - block.d, 2) + j + block.alpha;
    segs.emplace_back(block.rho.unshifted(), centre - half_width, centre + half_width);
  }
  return Multisegment(std::move(segs));
}

SpehBlock speh_highest_derivative(const SpehBlock& block) {
  if (block.t == 0) throw Error(ErrorCode::EmptyBlock, "U(delta,0) has no derivative");
  SpehBlock out = block;
  out.t -= 1;
  out.alpha -= kHalf;
  return out;
}

ProductDerivative product_highest_derivative(const std::vector<SpehBlock>& blocks) {
  ProductDerivative out;
  for (const auto& b : blocks) {
    if (b.t < 1) throw Error(ErrorCode::EmptyBlock, "product factor with t = 0");
    out.order += b.delta_degree();
    SpehBlock next = speh_highest_derivative(b);
    if (next.t > 0) out.blocks.push_back(std::move(next));
  }
  return out;
}

namespace {

auto block_key(const TadicBlock& b) {
  const auto& s = b.block;
  return std::tie(s.rho.name, s.rho.degree, s.rho.dual, s.rho.self_dual, s.d, s.t, b.kind);
}

bool block_less(const TadicBlock& x, const TadicBlock& y) {
  if (block_key(x) != block_key(y)) return block_key(x) < block_key(y);
  return x.block.alpha < y.block.alpha;
}

}  // namespace

TadicParameter::TadicParameter(std::vector<TadicBlock> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    b.block.rho = b.block.rho.unshifted();
    if (b.kind == BlockKind::Paired && b.block.alpha < kZero) b.block.alpha = -b.block.alpha;
  }
  std::sort(blocks_.begin(), blocks_.end(), block_less);
}

int TadicParameter::n() const noexcept {
  int total = 0;
  for (const auto& b : blocks_) total += b.block.degree() * (b.kind == BlockKind::Paired ? 2 : 1);
  return total;
}

std::vector<SpehBlock> TadicParameter::expand() const {
  std::vector<SpehBlock> out;
  for (const auto& b : blocks_) {
    out.push_back(b.block);
    if (b.kind == BlockKind::Paired) {
      out.push_back(b.block);
      out.back().alpha = -b.block.alpha;
    }
  }
  return out;
}

std::string model_name(const KlyachkoType& type) {
  const std::string r = std::to_string(type.r);
  const std::string two_k = std::to_string(2 * type.k);
  if (type.family == ModelFamily::H) return "H_{" + r + "," + two_k + "} with psi_" + r;
  return "H'_{" + two_k + "," + r + "} with conj(psi'_" + r + ")";
}

TadicParameter contragredient(const TadicParameter& param) {
  std::vector<TadicBlock> blocks = param.blocks();
  for (auto& b : blocks) {
    b.block.rho = b.block.rho.contragredient();
    b.block.alpha = -b.block.alpha;
  }
  return TadicParameter(std::move(blocks));
}

KlyachkoType kappa(const TadicParameter& param) {
  KlyachkoType out;
  for (const auto& s : param.expand()) {
    if (s.t < 1) throw Error(ErrorCode::EmptyBlock, "kappa needs t >= 1 in every block");
    if (s.t % 2 == 1) out.r += s.delta_degree();
    out.k += (s.t / 2) * s.delta_degree();
  }
  out.n = out.r + 2 * out.k;
  if (out.n != param.n()) {
    throw Error(ErrorCode::InvariantViolation, "r + 2k differs from the parameter degree");
  }
  return out;
}

bool validate_unitary(const TadicParameter& param) noexcept {
  for (const auto& b : param.blocks()) {
    const Rational& a = b.block.alpha;
    if (b.kind == BlockKind::Plain && a != kZero) return false;
    if (b.kind == BlockKind::Paired && !(a > kZero && a < kHalf)) return false;
  }
  return true;
}

KlyachkoType dual_model_type(const KlyachkoType& type) noexcept {
  KlyachkoType out = type;
  out.family = type.family == ModelFamily::H ? ModelFamily::HPrime : ModelFamily::H;
  return out;
}

}  // namespace klyachko
