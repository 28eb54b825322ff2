#pragma once

#include <map>

#include "kfin/element.hpp"
#include "kfin/group.hpp"
#include "kfin/rational.hpp"

namespace kfin {

/// Finitely supported element of the rational group algebra QG. Zero coefficients are
/// never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(const Group& group) : group_(&group) {}
  /// The basis element 1*g.
  static GroupAlgebraElement basis(const Group& group, const Element& g, const Rational& coeff = 1);

  const Group& group() const noexcept { return *group_; }
  const std::map<Element, Rational>& support() const noexcept { return terms_; }
  Rational coefficient(const Element& g) const;
  void add_term(const Element& g, const Rational& coeff);
  bool is_zero() const noexcept { return terms_.empty(); }

  GroupAlgebraElement scaled(const Rational& c) const;
  /// x*(g) = x(g^-1); complex conjugation is trivial on rational coefficients.
  GroupAlgebraElement star() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.terms_ == b.terms_; }

 private:
  const Group* group_;
  std::map<Element, Rational> terms_;
};

}  // namespace kfin
