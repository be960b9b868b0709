#pragma once

#include <compare>
#include <string>
#include <vector>

#include "klyachko/segments/rational.hpp"

namespace klyachko {

/// An opaque irreducible cuspidal representation rho of G_r, possibly
/// twisted: the label stands for rho[shift] = |det|^shift rho.
///
/// Only formal properties are modeled. The contragredient marks the name as
/// dual (printed with a trailing '~') unless the label was declared
/// self-dual, and negates the shift.
struct CuspidalLabel {
  std::string name;
  int degree = 1;
  bool dual = false;
  bool self_dual = false;
  Rational shift{0};

  CuspidalLabel shifted(const Rational& y) const;
  CuspidalLabel contragredient() const;
  /// Same label with shift zero.
  CuspidalLabel unshifted() const;

  /// Labels on one cuspidal line share name, degree and duality.
  bool same_line(const CuspidalLabel& other) const noexcept {
    return name == other.name && degree == other.degree && dual == other.dual;
  }

  friend bool operator==(const CuspidalLabel& a, const CuspidalLabel& b) noexcept {
    return a.same_line(b) && a.shift == b.shift;
  }
};

/// Display form "rho", "rho~".
std::string display_name(const CuspidalLabel& label);

/// [a, b]^{(rho)} = {rho[a + i] : 0 <= i <= b - a}. The base label is
/// stored unshifted; any shift it carried is folded into a and b.
class Segment {
 public:
  Segment(const CuspidalLabel& rho, Rational a, Rational b);

  const CuspidalLabel& base() const noexcept { return base_; }
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  int length() const noexcept { return static_cast<int>((b_ - a_).numerator()) + 1; }
  int degree() const noexcept { return base_.degree * length(); }

  /// Set containment, rho[a'+i] in this segment for all i.
  bool contains(const Segment& other) const noexcept;

  friend bool operator==(const Segment& x, const Segment& y) noexcept {
    return x.base_ == y.base_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Canonical order: (name, degree, dual, a, b).
  friend std::strong_ordering operator<=>(const Segment& x, const Segment& y) noexcept;

 private:
  CuspidalLabel base_;
  Rational a_;
  Rational b_;
};

std::string to_string(const Segment& s);

/// Finite multiset of segments kept in canonical sorted order, so that ==
/// is multiset equality.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments);

  void insert(const Segment& s);
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  std::size_t size() const noexcept { return segments_.size(); }
  bool empty() const noexcept { return segments_.empty(); }
  int degree() const noexcept;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<Segment> segments_;
};

std::string to_string(const Multisegment& m);

/// Delta precedes Delta': same cuspidal line, Delta' not contained in
/// Delta, a' = a + k for an integer k > 0, and the union is a segment.
bool segment_precedes(const Segment& first, const Segment& second) noexcept;

/// Arrangement Delta_1..Delta_t with Delta_i not preceding Delta_j for
/// i < j: sorted by (line, decreasing b, decreasing a).
std::vector<Segment> admissible_order(const Multisegment& m);

/// True iff no earlier segment precedes a later one.
bool is_admissible(const std::vector<Segment>& order) noexcept;

/// a^- : every [a, b] becomes [a, b - 1], singletons are dropped.
Multisegment derivative_multisegment(const Multisegment& m);

}  // namespace klyachko
