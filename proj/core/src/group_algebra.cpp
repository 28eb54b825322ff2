#include "kfin/group_algebra.hpp"

#include "kfin/error.hpp"

namespace kfin {

GroupAlgebraElement GroupAlgebraElement::basis(const Group& group, const Element& g, const Rational& coeff) {
  group.check_member(g);
  GroupAlgebraElement x(group);
  x.add_term(g, coeff);
  return x;
}

Rational GroupAlgebraElement::coefficient(const Element& g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? Rational{} : it->second;
}

void GroupAlgebraElement::add_term(const Element& g, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
  GroupAlgebraElement out(*group_);
  if (c.is_zero()) return out;
  for (const auto& [g, a] : terms_) out.terms_.emplace(g, a * c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::star() const {
  GroupAlgebraElement out(*group_);
  for (const auto& [g, a] : terms_) out.terms_.emplace(group_->inverse(g), a);
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (group_ != o.group_) throw InvalidArgument("group algebra elements over different groups");
  for (const auto& [g, a] : o.terms_) add_term(g, a);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (group_ != o.group_) throw InvalidArgument("group algebra elements over different groups");
  for (const auto& [g, a] : o.terms_) add_term(g, -a);
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.group_ != b.group_) throw InvalidArgument("group algebra elements over different groups");
  GroupAlgebraElement out(*a.group_);
  for (const auto& [g, x] : a.terms_) {
    for (const auto& [h, y] : b.terms_) out.add_term(a.group_->multiply(g, h), x * y);
  }
  return out;
}

}  // namespace kfin
