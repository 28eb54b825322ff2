#include "kfin/conjugacy.hpp"

#include <algorithm>
#include <unordered_set>

#include "kfin/error.hpp"

namespace kfin {

ConjugacyIndex::ConjugacyIndex(const Group& group) : elements_(group.enumerate_all()) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  class_id_.assign(elements_.size(), kUnassigned);

  std::vector<Element> inverses;
  for (const auto& s : group.generators()) inverses.push_back(group.inverse(s));

  // elements_ is sorted, so the first unassigned element is its class minimum.
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_id_[i] != kUnassigned) continue;
    const std::size_t cls = reps_.size();
    reps_.push_back(elements_[i]);
    std::size_t size = 1;
    class_id_[i] = cls;
    std::vector<std::size_t> frontier{i};
    while (!frontier.empty()) {
      const auto cur = frontier.back();
      frontier.pop_back();
      for (std::size_t k = 0; k < inverses.size(); ++k) {
        const auto next = group.multiply(group.multiply(group.generators()[k], elements_[cur]), inverses[k]);
        const auto j = index_.at(next);
        if (class_id_[j] == kUnassigned) {
          class_id_[j] = cls;
          ++size;
          frontier.push_back(j);
        }
      }
    }
    sizes_.push_back(size);
  }
}

std::size_t ConjugacyIndex::class_of(const Element& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw InvalidArgument("element/spec mismatch: element not in the enumerated group");
  return class_id_[it->second];
}

std::vector<Element> ConjugacyIndex::members(std::size_t cls) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_id_[i] == cls) out.push_back(elements_[i]);
  }
  return out;
}

ClassOracle::ClassOracle(const Group& group) : group_(&group) {
  if (group.is_finite() && *group.size() <= group.options().enumeration_cap) {
    index_ = std::make_unique<ConjugacyIndex>(group);
  }
}

std::optional<Element> ClassOracle::class_key(const Element& g) const {
  if (index_) return index_->representative(index_->class_of(g));
  return group_->class_normal_form(g);
}

bool ClassOracle::certified(const Element& h) const {
  return index_ != nullptr || group_->class_normal_form(h).has_value();
}

bool ClassOracle::in_class(const Element& g, const Element& h) const {
  if (index_) return index_->class_of(g) == index_->class_of(h);
  const auto key_h = group_->class_normal_form(h);
  if (!key_h) {
    throw Unsupported("conjugacy class of " + group_->format(h) + " in " + group_->name() +
                      " has no certified description");
  }
  const auto key_g = group_->class_normal_form(g);
  return key_g && *key_g == *key_h;
}

ConjugationOrbit conjugation_orbit(const Group& group, const Element& h, std::uint32_t depth) {
  group.check_member(h);
  std::vector<Element> inverses;
  for (const auto& s : group.generators()) inverses.push_back(group.inverse(s));

  std::unordered_set<Element, ElementHash> seen{h};
  std::vector<Element> frontier{h};
  ConjugationOrbit orbit;
  std::uint32_t round = 0;
  while (!frontier.empty() && round < depth) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (std::size_t k = 0; k < inverses.size(); ++k) {
        auto c = group.multiply(group.multiply(group.generators()[k], x), inverses[k]);
        if (seen.insert(c).second) {
          if (seen.size() > group.options().max_ball) {
            throw ResourceLimit("conjugation orbit exceeds the cap of " + std::to_string(group.options().max_ball));
          }
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
    ++round;
  }
  orbit.closed = frontier.empty();
  orbit.depth = round;
  orbit.members.assign(seen.begin(), seen.end());
  std::sort(orbit.members.begin(), orbit.members.end());
  return orbit;
}

ConjugacyClass conjugacy_class(const Group& group, const Element& h, std::uint32_t radius) {
  group.check_member(h);
  ConjugacyClass cls;
  if (group.is_finite() && *group.size() <= group.options().enumeration_cap) {
    const ConjugacyIndex index(group);
    const auto id = index.class_of(h);
    cls.representative = index.representative(id);
    cls.members = index.members(id);
    cls.complete = true;
    cls.certified = true;
    return cls;
  }

  auto orbit = conjugation_orbit(group, h, radius);
  if (orbit.closed) {
    cls.representative = orbit.members.front();
    cls.members = std::move(orbit.members);
    cls.complete = true;
    cls.certified = true;
    return cls;
  }

  cls.search_radius = radius;
  if (const auto key = group.class_normal_form(h)) {
    // Infinite class with an analytic description: list it exactly within the ball.
    cls.representative = *key;
    cls.certified = true;
    for (const auto& entry : group.enumerate_ball(radius)) {
      const auto k = group.class_normal_form(entry.element);
      if (k && *k == *key) cls.members.push_back(entry.element);
    }
    std::sort(cls.members.begin(), cls.members.end());
    return cls;
  }

  cls.representative = orbit.members.front();
  cls.members = std::move(orbit.members);
  return cls;
}

}  // namespace kfin
