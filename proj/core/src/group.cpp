#include "kfin/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "atoms.hpp"
#include "kfin/error.hpp"

namespace kfin {

namespace {

constexpr std::uint64_t kGenerationCheckLimit = 512;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

/// Splits on top-level commas (outside (), []).
std::vector<std::string_view> split_components(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

Group::Group(GroupSpec spec, GroupOptions options) : spec_(canonicalize(std::move(spec))), options_(options) {
  if (spec_.atoms.empty()) throw InvalidArgument("group spec has no atoms");
  for (const auto& atom_spec : spec_.atoms) {
    atoms_.push_back(detail::make_atom(atom_spec, options_));
    offsets_.push_back(width_);
    width_ += atoms_.back()->width();
  }

  std::vector<std::int64_t> id;
  for (const auto& atom : atoms_) {
    auto part = atom->identity();
    id.insert(id.end(), part.begin(), part.end());
  }
  identity_ = Element(std::move(id));

  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (const auto& g : atoms_[i]->generators()) {
      auto coords = identity_;
      std::copy(g.begin(), g.end(), coords.coords().begin() + static_cast<std::ptrdiff_t>(offsets_[i]));
      generators_.push_back(std::move(coords));
    }
  }

  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const bool is_perm = std::holds_alternative<PermutationAtom>(spec_.atoms[i]);
    const auto n = is_perm ? std::optional<std::uint64_t>{} : atoms_[i]->size();
    if (std::holds_alternative<FreeAbelianAtom>(spec_.atoms[i]) ||
        std::holds_alternative<InfiniteDihedralAtom>(spec_.atoms[i]) ||
        std::holds_alternative<HeisenbergAtom>(spec_.atoms[i])) {
      finite_ = false;
    }
    // Permutation atoms are defined as the closure of their generators.
    if (n && *n <= kGenerationCheckLimit) {
      const auto closure = atoms_[i]->all_elements().size();
      const auto reached = atoms_[i]->ball_by_length(static_cast<std::uint32_t>(*n));
      std::size_t count = 0;
      for (const auto& sphere : reached) count += sphere.size();
      if (count != closure || closure != *n) {
        throw InvalidArgument("default generating set does not generate " + render(spec_.atoms[i]));
      }
    }
  }
}

Group::~Group() = default;

std::shared_ptr<const Group> Group::from_text(std::string_view spec_text, GroupOptions options) {
  return std::make_shared<const Group>(parse_group_spec(spec_text), options);
}

void Group::check_width(const Element& a) const {
  if (a.size() != width_) {
    throw InvalidArgument("element/spec mismatch: element has " + std::to_string(a.size()) +
                          " coordinates, " + name() + " expects " + std::to_string(width_));
  }
}

bool Group::is_member(const Element& a) const {
  if (a.size() != width_) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!atoms_[i]->is_member(a.coords().subspan(offsets_[i], atoms_[i]->width()))) return false;
  }
  return true;
}

void Group::check_member(const Element& a) const {
  check_width(a);
  if (!is_member(a)) throw InvalidArgument("element/spec mismatch: not a normal-form element of " + name());
}

Element Group::identity() const { return identity_; }

Element Group::multiply(const Element& a, const Element& b) const {
  check_width(a);
  check_width(b);
  std::vector<std::int64_t> out;
  out.reserve(width_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto w = atoms_[i]->width();
    auto part = atoms_[i]->multiply(a.coords().subspan(offsets_[i], w), b.coords().subspan(offsets_[i], w));
    out.insert(out.end(), part.begin(), part.end());
  }
  return Element(std::move(out));
}

Element Group::inverse(const Element& a) const {
  check_width(a);
  std::vector<std::int64_t> out;
  out.reserve(width_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    auto part = atoms_[i]->inverse(a.coords().subspan(offsets_[i], atoms_[i]->width()));
    out.insert(out.end(), part.begin(), part.end());
  }
  return Element(std::move(out));
}

Element Group::power(const Element& a, std::int64_t k) const {
  Element base = k < 0 ? inverse(a) : a;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Element result = identity_;
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Element Group::conjugate(const Element& f, const Element& h) const { return multiply(multiply(f, h), inverse(f)); }

OrderResult Group::order(const Element& g, std::uint64_t cap) const {
  check_width(g);
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto r = atoms_[i]->order(g.coords().subspan(offsets_[i], atoms_[i]->width()), cap);
    if (!r.is_finite()) return OrderResult::exceeds_cap(cap);
    d = lcm_u64(d, r.value());
  }
  return OrderResult::finite(d);
}

std::optional<std::uint32_t> Group::word_length(const Element& g, std::uint32_t radius_cap) const {
  check_member(g);
  std::uint32_t total = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto len = atoms_[i]->word_length(g.coords().subspan(offsets_[i], atoms_[i]->width()), radius_cap);
    if (!len) return std::nullopt;
    total += *len;
    if (total > radius_cap) return std::nullopt;
  }
  return total;
}

std::vector<BallEntry> Group::enumerate_ball(std::uint32_t radius) const {
  std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> balls;
  for (const auto& atom : atoms_) balls.push_back(atom->ball_by_length(radius));

  // Count product tuples with total length <= radius before materializing.
  std::vector<std::uint64_t> counts(radius + 1, 0);
  counts[0] = 1;
  for (const auto& ball : balls) {
    std::vector<std::uint64_t> next(radius + 1, 0);
    for (std::uint32_t used = 0; used <= radius; ++used) {
      if (counts[used] == 0) continue;
      for (std::size_t l = 0; l < ball.size() && used + l <= radius; ++l) {
        next[used + l] = std::min<std::uint64_t>(next[used + l] + saturating_mul(counts[used], ball[l].size()),
                                                 UINT64_MAX / 2);
      }
    }
    counts = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : counts) total = std::min<std::uint64_t>(total + c, UINT64_MAX / 2);
  if (total > options_.max_ball) {
    throw ResourceLimit("ball of radius " + std::to_string(radius) + " has " + std::to_string(total) +
                        " elements, above the cap of " + std::to_string(options_.max_ball));
  }

  std::vector<BallEntry> out;
  out.reserve(total);
  std::vector<std::int64_t> coords;
  coords.reserve(width_);
  auto recurse = [&](auto&& self, std::size_t atom, std::uint32_t used) -> void {
    if (atom == atoms_.size()) {
      out.push_back({Element(coords), used});
      return;
    }
    const auto& ball = balls[atom];
    for (std::size_t l = 0; l < ball.size() && used + l <= radius; ++l) {
      for (const auto& part : ball[l]) {
        coords.insert(coords.end(), part.begin(), part.end());
        self(self, atom + 1, used + static_cast<std::uint32_t>(l));
        coords.resize(coords.size() - part.size());
      }
    }
  };
  recurse(recurse, 0, 0);
  std::sort(out.begin(), out.end(), [](const BallEntry& a, const BallEntry& b) {
    return a.length != b.length ? a.length < b.length : a.element < b.element;
  });
  return out;
}

std::optional<std::uint64_t> Group::size() const {
  if (!finite_) return std::nullopt;
  std::uint64_t n = 1;
  for (const auto& atom : atoms_) n = saturating_mul(n, *atom->size());
  return n;
}

std::vector<Element> Group::enumerate_all() const {
  if (!finite_) throw Unsupported("cannot enumerate the infinite group " + name());
  std::vector<std::vector<std::vector<std::int64_t>>> parts;
  std::uint64_t n = 1;
  for (const auto& atom : atoms_) {
    n = saturating_mul(n, *atom->size());
    if (n > options_.enumeration_cap) {
      throw ResourceLimit(name() + " has more than " + std::to_string(options_.enumeration_cap) +
                          " elements (enumeration cap)");
    }
  }
  for (const auto& atom : atoms_) parts.push_back(atom->all_elements());

  std::vector<Element> out;
  out.reserve(n);
  std::vector<std::int64_t> coords;
  auto recurse = [&](auto&& self, std::size_t atom) -> void {
    if (atom == parts.size()) {
      out.emplace_back(coords);
      return;
    }
    for (const auto& p : parts[atom]) {
      coords.insert(coords.end(), p.begin(), p.end());
      self(self, atom + 1);
      coords.resize(coords.size() - p.size());
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Element> Group::class_normal_form(const Element& g) const {
  check_member(g);
  std::vector<std::int64_t> out;
  out.reserve(width_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    auto rep = atoms_[i]->class_rep(g.coords().subspan(offsets_[i], atoms_[i]->width()));
    if (!rep) return std::nullopt;
    out.insert(out.end(), rep->begin(), rep->end());
  }
  return Element(std::move(out));
}

bool Group::has_class_normal_form() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const auto& a) { return a->analytic_classes(); });
}

std::optional<std::vector<Element>> Group::torsion_class_representatives() const {
  std::vector<std::vector<std::vector<std::int64_t>>> per_atom;
  for (const auto& atom : atoms_) {
    auto reps = atom->torsion_class_reps();
    if (!reps) return std::nullopt;
    per_atom.push_back(std::move(*reps));
  }
  std::vector<Element> out;
  std::vector<std::int64_t> coords;
  auto recurse = [&](auto&& self, std::size_t atom) -> void {
    if (atom == per_atom.size()) {
      out.emplace_back(coords);
      return;
    }
    for (const auto& p : per_atom[atom]) {
      coords.insert(coords.end(), p.begin(), p.end());
      self(self, atom + 1);
      coords.resize(coords.size() - p.size());
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool Group::torsion_free() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const auto& a) {
    if (a->torsion_free()) return true;
    auto s = a->size();
    return s && *s == 1;
  });
}

Element Group::parse_element(std::string_view text) const {
  const auto parts = atoms_.size() == 1 ? std::vector<std::string_view>{text} : split_components(text);
  if (parts.size() != atoms_.size()) {
    throw ParseError("expected " + std::to_string(atoms_.size()) + " comma-separated components for " + name(), 0);
  }
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    auto part = atoms_[i]->parse(parts[i]);
    coords.insert(coords.end(), part.begin(), part.end());
  }
  Element e(std::move(coords));
  check_member(e);
  return e;
}

std::string Group::format(const Element& g) const {
  check_width(g);
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) out += ',';
    out += atoms_[i]->format(g.coords().subspan(offsets_[i], atoms_[i]->width()));
  }
  return out;
}

}  // namespace kfin
