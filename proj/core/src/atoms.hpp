#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kfin/element.hpp"
#include "kfin/group.hpp"
#include "kfin/group_spec.hpp"

namespace kfin::detail {

using Coords = std::vector<std::int64_t>;
using CSpan = std::span<const std::int64_t>;

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : c) h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// One direct factor. Implementations supply the group law and whatever conjugacy
/// structure they know analytically; the base class owns the word-metric cache.
class Atom {
 public:
  explicit Atom(const GroupOptions& options) : options_(options) {}
  virtual ~Atom() = default;
  Atom(const Atom&) = delete;
  Atom& operator=(const Atom&) = delete;

  virtual std::size_t width() const = 0;
  virtual Coords identity() const = 0;
  virtual Coords multiply(CSpan a, CSpan b) const = 0;
  virtual Coords inverse(CSpan a) const = 0;
  virtual OrderResult order(CSpan a, std::uint64_t cap) const;
  /// Inverse-closed, identity-free.
  virtual std::vector<Coords> generators() const = 0;
  virtual std::optional<std::uint64_t> size() const = 0;
  virtual bool is_member(CSpan a) const = 0;
  virtual std::string format(CSpan a) const = 0;
  virtual Coords parse(std::string_view text) const;

  /// Minimal member of the conjugacy class of a, if known analytically.
  virtual std::optional<Coords> class_rep(CSpan) const { return std::nullopt; }
  virtual bool analytic_classes() const { return false; }
  virtual std::optional<std::vector<Coords>> torsion_class_reps() const { return std::nullopt; }
  virtual bool torsion_free() const { return false; }

  /// Finite atoms only. Default: closure of the identity under the generators.
  virtual std::vector<Coords> all_elements() const;

  std::optional<std::uint32_t> word_length(CSpan a, std::uint32_t cap) const;
  /// Elements of length <= r, bucketed by length.
  std::vector<std::vector<Coords>> ball_by_length(std::uint32_t r) const;

 protected:
  /// Letters accepted by the default word parser, e.g. {"x", ...}.
  virtual std::vector<std::pair<std::string, Coords>> letters() const { return {}; }
  Coords power(CSpan a, std::int64_t k) const;

  const GroupOptions options_;

 private:
  void expand_locked(std::uint32_t r) const;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Coords, std::uint32_t, CoordsHash> dist_;
  mutable std::vector<std::vector<Coords>> spheres_;
  mutable bool exhausted_ = false;
};

std::unique_ptr<Atom> make_atom(const FamilyAtom& spec, const GroupOptions& options);

}  // namespace kfin::detail
