#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kfin/element.hpp"
#include "kfin/group_spec.hpp"

namespace kfin {

struct GroupOptions {
  /// Iteration bound for orders that cannot be computed analytically.
  std::uint64_t order_cap = 4096;
  /// Largest finite group enumerate_all will materialize.
  std::uint64_t enumeration_cap = 10080;
  /// Largest word-metric ball (per atom cache and per product ball).
  std::uint64_t max_ball = 1'000'000;
};

struct BallEntry {
  Element element;
  std::uint32_t length = 0;

  friend bool operator==(const BallEntry&, const BallEntry&) = default;
};

namespace detail {
class Atom;
}

/// Group oracle over a canonical GroupSpec.
///
/// Products use the coordinate concatenation of their atoms and the generating set
/// formed by embedding each atom's generators with the identity elsewhere, so the
/// word length of a tuple is the sum of the component lengths.
///
/// Immutable after construction apart from internally synchronized caches (BFS
/// spheres, finite enumerations); safe to share between threads.
class Group {
 public:
  explicit Group(GroupSpec spec, GroupOptions options = {});
  ~Group();
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  static std::shared_ptr<const Group> from_text(std::string_view spec_text, GroupOptions options = {});

  const GroupSpec& spec() const noexcept { return spec_; }
  const GroupOptions& options() const noexcept { return options_; }
  std::string name() const { return render(spec_); }

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, std::int64_t k) const;
  /// f h f^-1
  Element conjugate(const Element& f, const Element& h) const;
  bool is_identity(const Element& a) const { return a == identity_; }

  bool is_member(const Element& a) const;
  /// Throws InvalidArgument when `a` is not a normal-form element of this group.
  void check_member(const Element& a) const;

  OrderResult order(const Element& g) const { return order(g, options_.order_cap); }
  OrderResult order(const Element& g, std::uint64_t cap) const;

  /// Default generating set; inverse-closed, identity-free, deterministic order.
  const std::vector<Element>& generators() const noexcept { return generators_; }

  /// Shortest generator-word length, or nullopt when g is not within `radius_cap`.
  std::optional<std::uint32_t> word_length(const Element& g, std::uint32_t radius_cap) const;

  /// All elements of word length <= radius with their lengths, ordered by (length, element).
  std::vector<BallEntry> enumerate_ball(std::uint32_t radius) const;

  bool is_finite() const noexcept { return finite_; }
  /// Group order (saturating at UINT64_MAX); nullopt for infinite groups.
  std::optional<std::uint64_t> size() const;
  /// Every element once, in Element order.
  std::vector<Element> enumerate_all() const;

  /// Canonical (minimal) member of the conjugacy class of g, when the families of all
  /// components describe their classes analytically.
  std::optional<Element> class_normal_form(const Element& g) const;
  /// True when class_normal_form succeeds for every element.
  bool has_class_normal_form() const;
  /// Conjugacy-class representatives of all torsion elements, when every family can list them.
  std::optional<std::vector<Element>> torsion_class_representatives() const;
  bool torsion_free() const;
  /// Every built-in family is virtually nilpotent.
  bool virtually_nilpotent() const { return true; }

  /// Parses an element in per-family notation; product components are comma separated.
  Element parse_element(std::string_view text) const;
  std::string format(const Element& g) const;

 private:
  void check_width(const Element& a) const;

  GroupSpec spec_;
  GroupOptions options_;
  std::vector<std::unique_ptr<detail::Atom>> atoms_;
  std::vector<std::size_t> offsets_;
  std::size_t width_ = 0;
  bool finite_ = true;
  Element identity_;
  std::vector<Element> generators_;
};

}  // namespace kfin
