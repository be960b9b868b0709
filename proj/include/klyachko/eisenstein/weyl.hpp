#pragma once

#include <vector>

#include "klyachko/segments/rational.hpp"

namespace klyachko {

/// A point of a_M^* for M of type (r, ..., r), one coordinate per block.
using ExponentVector = std::vector<Rational>;

/// Lambda_t = ((t-1)/2, (t-3)/2, ..., (1-t)/2).
ExponentVector lambda_vec(int t);

/// Permutation of [1, t]; w(i) is stored at images()[i - 1].
class WeylElement {
 public:
  explicit WeylElement(std::vector<int> images);

  static WeylElement identity(int t);
  /// The cycle (1 2 ... i) in S_t: j -> j + 1 for j < i, i -> 1.
  static WeylElement cycle(int i, int t);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const noexcept { return images_; }
  WeylElement inverse() const;

  /// (w lambda)_j = lambda_{w^{-1}(j)}.
  ExponentVector act(const ExponentVector& lambda) const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> images_;
};

/// {i in [1, t-1] : w(i) > w(i+1)}
std::vector<int> descent_set(const WeylElement& w);

/// w^(1), ..., w^(t) for Q of type (r, 2mr), t = 2m + 1; w^(i) = (1 2 ... i).
/// Other compositions raise UnsupportedComposition.
std::vector<WeylElement> coset_reps(int t);

struct ResidueRow {
  int i = 0;
  WeylElement w = WeylElement::identity(1);
  /// {w^{-1}(j) : j in [1, 2m], (w Lambda)_j - (w Lambda)_{j+1} = 1}
  std::vector<int> bookkeeping_set;
  /// [1, 2m] minus {i - 1, i}; the closed form the set should equal for i > 1.
  std::vector<int> expected_set;
  std::vector<int> descents;
  /// #{j in [2, 2m] : unit drop at j} + |descents|
  int pole_order = 0;
  bool survives = false;
};

struct ResidueSurvival {
  int t = 0;
  int m = 0;
  int required_order = 0;  // 2m
  std::vector<ResidueRow> rows;
  std::vector<int> survivors;  // indices i whose term survives

  /// Every i > 1 has bookkeeping_set == expected_set.
  bool sets_match() const noexcept;
  /// The survivors are exactly {t}, i.e. w_Q.
  bool only_wq_survives() const noexcept;
};

/// Residue bookkeeping for the constant term along Q of type (r, 2mr).
/// Requires t odd and >= 3.
ResidueSurvival residue_survival(int t);

/// w_Q Lambda_{2m+1} - (Lambda_1, Lambda_{2m}) read in a_L^* coordinates.
ExponentVector mu_Q(int m);

}  // namespace klyachko
