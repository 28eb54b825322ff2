#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kfin/element.hpp"
#include "kfin/group.hpp"

namespace kfin {

/// Conjugacy classes of a finite group, found by closing each element's orbit under
/// conjugation by the generators. Classes are numbered in order of their minimal
/// element, which is also the class representative.
class ConjugacyIndex {
 public:
  explicit ConjugacyIndex(const Group& group);

  std::size_t class_count() const noexcept { return reps_.size(); }
  std::size_t class_of(const Element& g) const;
  const Element& representative(std::size_t cls) const { return reps_.at(cls); }
  std::size_t class_size(std::size_t cls) const { return sizes_.at(cls); }
  std::vector<Element> members(std::size_t cls) const;
  const std::vector<Element>& elements() const noexcept { return elements_; }

 private:
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::vector<std::size_t> class_id_;
  std::vector<Element> reps_;
  std::vector<std::size_t> sizes_;
};

/// Answers "is g conjugate to h" from whichever source the group supports: the full
/// class index for finite groups within the enumeration cap, otherwise the families'
/// analytic class normal forms.
class ClassOracle {
 public:
  explicit ClassOracle(const Group& group);

  const Group& group() const noexcept { return *group_; }
  /// Canonical class representative of g, when decidable.
  std::optional<Element> class_key(const Element& g) const;
  /// Whether membership in C(h) is decidable for every g.
  bool certified(const Element& h) const;
  /// Throws Unsupported when membership in C(h) is not decidable.
  bool in_class(const Element& g, const Element& h) const;
  const ConjugacyIndex* index() const noexcept { return index_.get(); }

 private:
  const Group* group_;
  std::unique_ptr<ConjugacyIndex> index_;
};

struct ConjugationOrbit {
  std::vector<Element> members;  // sorted
  bool closed = false;           // the orbit closed before the depth limit, so the class is finite
  std::uint32_t depth = 0;
};

/// Breadth-first closure of {h} under conjugation by generators, at most `depth` rounds.
ConjugationOrbit conjugation_orbit(const Group& group, const Element& h, std::uint32_t depth);

struct ConjugacyClass {
  Element representative;
  std::vector<Element> members;  // complete when `complete`, else those found within `search_radius`
  bool complete = false;
  /// Membership is decided by a certificate (finite enumeration or analytic class form)
  /// rather than a radius-bounded search.
  bool certified = false;
  std::optional<std::uint32_t> search_radius;
};

/// C(h) = { f h f^-1 }. Finite groups: the complete class. Infinite groups: orbit closure
/// under conjugation by generators; infinite classes are listed within word radius
/// `radius` and flagged incomplete.
ConjugacyClass conjugacy_class(const Group& group, const Element& h, std::uint32_t radius = 12);

}  // namespace kfin
