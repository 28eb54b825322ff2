#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace kfin {

/// A group element in normal form, stored as a flat coordinate vector.
///
/// The owning Group decides how the coordinates split into per-atom components
/// (one residue for Z/n, m integers for Z^m, (reflection, rotation) for dihedral
/// groups, an image array for permutations, exponents (p, q, r) of a^p b^q c^r for
/// the Heisenberg group, a row index for tables).
///
/// Ordering compares coordinates lexicographically under the key
/// 0 < 1 < -1 < 2 < -2 < ..., which agrees with the natural order on the
/// non-negative residues used by finite families and gives every subset of an
/// infinite family a minimum.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Element(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  std::span<std::int64_t> coords() noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept;

 private:
  std::vector<std::int64_t> coords_;
};

/// Order key used by Element comparison.
constexpr std::uint64_t zigzag_key(std::int64_t k) noexcept {
  if (k > 0) return 2 * static_cast<std::uint64_t>(k) - 1;
  if (k < 0) return 2 * (static_cast<std::uint64_t>(-(k + 1)) + 1);
  return 0;
}

inline std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
  const std::size_t n = a.coords_.size() < b.coords_.size() ? a.coords_.size() : b.coords_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto ka = zigzag_key(a.coords_[i]);
    const auto kb = zigzag_key(b.coords_[i]);
    if (ka != kb) return ka <=> kb;
  }
  return a.coords_.size() <=> b.coords_.size();
}

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto c : e.coords()) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Outcome of an order computation: finite order d, or no identity power found up to `cap`.
class OrderResult {
 public:
  static OrderResult finite(std::uint64_t d) { return OrderResult(true, d); }
  static OrderResult exceeds_cap(std::uint64_t cap) { return OrderResult(false, cap); }

  bool is_finite() const noexcept { return finite_; }
  /// The order when finite, the cap otherwise.
  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const OrderResult&, const OrderResult&) = default;

 private:
  OrderResult(bool finite, std::uint64_t v) : finite_(finite), value_(v) {}
  bool finite_;
  std::uint64_t value_;
};

}  // namespace kfin

template <>
struct std::hash<kfin::Element> : kfin::ElementHash {};
