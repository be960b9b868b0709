#include "klyachko/eisenstein/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "klyachko/error.hpp"

namespace klyachko {

ExponentVector lambda_vec(int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "Lambda_t needs t >= 1");
  ExponentVector out;
  out.reserve(t);
  for (int j = 1; j <= t; ++j) out.emplace_back(t + 1 - 2 * j, 2);
  return out;
}

WeylElement::WeylElement(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation of [1, t]");
    }
  }
}

WeylElement WeylElement::identity(int t) {
  std::vector<int> images(t);
  std::iota(images.begin(), images.end(), 1);
  return WeylElement(std::move(images));
}

WeylElement WeylElement::cycle(int i, int t) {
  if (i < 1 || i > t) throw Error(ErrorCode::InvalidArgument, "cycle length out of range");
  std::vector<int> images(t);
  std::iota(images.begin(), images.end(), 1);
  for (int j = 1; j < i; ++j) images[j - 1] = j + 1;
  images[i - 1] = 1;
  return WeylElement(std::move(images));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return WeylElement(std::move(inv));
}

ExponentVector WeylElement::act(const ExponentVector& lambda) const {
  if (lambda.size() != images_.size()) {
    throw Error(ErrorCode::InvalidArgument, "exponent vector length differs from t");
  }
  ExponentVector out(lambda.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i] - 1] = lambda[i];
  return out;
}

std::vector<int> descent_set(const WeylElement& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

std::vector<WeylElement> coset_reps(int t) {
  if (t < 1 || t % 2 == 0) {
    throw Error(ErrorCode::UnsupportedComposition,
                "coset representatives only for Q of type (r, 2mr), t = 2m + 1");
  }
  std::vector<WeylElement> out;
  for (int i = 1; i <= t; ++i) out.push_back(WeylElement::cycle(i, t));
  return out;
}

bool ResidueSurvival::sets_match() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ResidueRow& r) { return r.i == 1 || r.bookkeeping_set == r.expected_set; });
}

bool ResidueSurvival::only_wq_survives() const noexcept {
  return survivors == std::vector<int>{t};
}

ResidueSurvival residue_survival(int t) {
  if (t < 3 || t % 2 == 0) {
    throw Error(ErrorCode::UnsupportedComposition, "residue bookkeeping needs odd t >= 3");
  }
  ResidueSurvival out;
  out.t = t;
  out.m = (t - 1) / 2;
  out.required_order = 2 * out.m;
  const ExponentVector lambda = lambda_vec(t);

  int i = 0;
  for (const WeylElement& w : coset_reps(t)) {
    ++i;
    ResidueRow row{i, w, {}, {}, descent_set(w), 0, false};
    const WeylElement w_inv = w.inverse();
    const ExponentVector image = w.act(lambda);
    int drops_in_levi = 0;
    for (int j = 1; j <= 2 * out.m; ++j) {
      if (image[j - 1] - image[j] != kOne) continue;
      row.bookkeeping_set.push_back(w_inv(j));
      if (j >= 2) ++drops_in_levi;
    }
    std::sort(row.bookkeeping_set.begin(), row.bookkeeping_set.end());
    for (int j = 1; j <= 2 * out.m; ++j)
      if (j != i - 1 && j != i) row.expected_set.push_back(j);
    row.pole_order = drops_in_levi + static_cast<int>(row.descents.size());
    row.survives = row.pole_order >= out.required_order;
    if (row.survives) out.survivors.push_back(i);
    out.rows.push_back(std::move(row));
  }
  return out;
}

ExponentVector mu_Q(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "mu_Q needs m >= 1");
  const int t = 2 * m + 1;
  const ExponentVector moved = WeylElement::cycle(t, t).act(lambda_vec(t));
  ExponentVector lambda_q = lambda_vec(1);
  const ExponentVector tail = lambda_vec(2 * m);
  lambda_q.insert(lambda_q.end(), tail.begin(), tail.end());

  ExponentVector diff(t);
  for (int j = 0; j < t; ++j) diff[j] = moved[j] - lambda_q[j];
  // Blocks of L have sizes 1 and 2m; the difference must be constant on each.
  for (int j = 2; j < t; ++j) {
    if (diff[j] != diff[1]) {
      throw Error(ErrorCode::InvariantViolation, "mu_Q not constant on the second block");
    }
  }
  return {diff[0], diff[1]};
}

}  // namespace klyachko
