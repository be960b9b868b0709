#include "klyachko/segments/segment.hpp"

#include <algorithm>

#include "klyachko/error.hpp"

namespace klyachko {

CuspidalLabel CuspidalLabel::shifted(const Rational& y) const {
  CuspidalLabel out = *this;
  out.shift += y;
  return out;
}

CuspidalLabel CuspidalLabel::contragredient() const {
  CuspidalLabel out = *this;
  if (!self_dual) out.dual = !dual;
  out.shift = -shift;
  return out;
}

CuspidalLabel CuspidalLabel::unshifted() const {
  CuspidalLabel out = *this;
  out.shift = 0;
  return out;
}

std::string display_name(const CuspidalLabel& label) {
  return label.dual ? label.name + "~" : label.name;
}

Segment::Segment(const CuspidalLabel& rho, Rational a, Rational b)
    : base_(rho.unshifted()), a_(a + rho.shift), b_(b + rho.shift) {
  if (rho.degree < 1) throw Error(ErrorCode::InvalidArgument, "cuspidal degree must be >= 1");
  if (!is_integer(b_ - a_) || b_ < a_) {
    throw Error(ErrorCode::InvalidArgument, "segment needs b - a a nonnegative integer");
  }
}

bool Segment::contains(const Segment& other) const noexcept {
  return base_.same_line(other.base_) && is_integer(other.a_ - a_) && a_ <= other.a_ &&
         other.b_ <= b_;
}

std::strong_ordering operator<=>(const Segment& x, const Segment& y) noexcept {
  if (auto c = x.base_.name <=> y.base_.name; c != 0) return c;
  if (auto c = x.base_.degree <=> y.base_.degree; c != 0) return c;
  if (auto c = x.base_.dual <=> y.base_.dual; c != 0) return c;
  if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Segment& s) {
  return "[" + to_string(s.a()) + "," + to_string(s.b()) + "]^(" + display_name(s.base()) + ":" +
         std::to_string(s.base().degree) + ")";
}

Multisegment::Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
  std::sort(segments_.begin(), segments_.end());
}

void Multisegment::insert(const Segment& s) {
  segments_.insert(std::upper_bound(segments_.begin(), segments_.end(), s), s);
}

int Multisegment::degree() const noexcept {
  int d = 0;
  for (const auto& s : segments_) d += s.degree();
  return d;
}

std::string to_string(const Multisegment& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += to_string(m.segments()[i]);
  }
  return out + "}";
}

bool segment_precedes(const Segment& first, const Segment& second) noexcept {
  if (!first.base().same_line(second.base())) return false;
  const Rational k = second.a() - first.a();
  if (!is_integer(k) || k <= kZero) return false;
  if (first.contains(second)) return false;
  // With a' > a the union is a segment iff there is no gap.
  return second.a() <= first.b() + 1;
}

std::vector<Segment> admissible_order(const Multisegment& m) {
  std::vector<Segment> order = m.segments();
  std::stable_sort(order.begin(), order.end(), [](const Segment& x, const Segment& y) {
    const auto& bx = x.base();
    const auto& by = y.base();
    if (bx.name != by.name) return bx.name < by.name;
    if (bx.degree != by.degree) return bx.degree < by.degree;
    if (bx.dual != by.dual) return bx.dual < by.dual;
    if (x.b() != y.b()) return x.b() > y.b();
    return x.a() > y.a();
  });
  if (!is_admissible(order)) {
    throw Error(ErrorCode::InvariantViolation, "sorted order is not admissible");
  }
  return order;
}

bool is_admissible(const std::vector<Segment>& order) noexcept {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (segment_precedes(order[i], order[j])) return false;
  return true;
}

Multisegment derivative_multisegment(const Multisegment& m) {
  std::vector<Segment> out;
  for (const auto& s : m.segments()) {
    if (s.b() - 1 >= s.a()) out.emplace_back(s.base(), s.a(), s.b() - 1);
  }
  return Multisegment(std::move(out));
}

}  // namespace klyachko
