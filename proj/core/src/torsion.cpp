#include "kfin/torsion.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "kfin/error.hpp"
#include "kfin/union_find.hpp"

namespace kfin {

std::string to_string(FfinMethod method) {
  switch (method) {
    case FfinMethod::Auto: return "auto";
    case FfinMethod::Enumeration: return "enumeration";
    case FfinMethod::Analytic: return "analytic";
    case FfinMethod::RadiusBounded: return "radius-bounded";
  }
  return "unknown";
}

std::string to_string(PolyFullKind kind) {
  switch (kind) {
    case PolyFullKind::CertifiedTrue: return "CertifiedTrue";
    case PolyFullKind::EmpiricallyConsistent: return "EmpiricallyConsistent";
    case PolyFullKind::EmpiricallyRefuted: return "EmpiricallyRefuted";
  }
  return "unknown";
}

namespace {

std::uint64_t finite_order(const Group& group, const Element& g) {
  const auto r = group.order(g);
  if (!r.is_finite()) {
    throw Unsupported("order of " + group.format(g) + " exceeds the cap of " + std::to_string(r.value()));
  }
  return r.value();
}

/// Collects union-find components into sorted FfinClass records.
std::vector<FfinClass> collect_classes(UnionFind& uf, const std::vector<Element>& reps,
                                       const std::vector<std::uint64_t>& orders) {
  std::map<std::size_t, FfinClass> by_root;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto& cls = by_root[uf.find(i)];
    cls.conjugacy_reps.push_back(reps[i]);
    cls.order = orders[i];
  }
  std::vector<FfinClass> out;
  for (auto& [root, cls] : by_root) {
    std::sort(cls.conjugacy_reps.begin(), cls.conjugacy_reps.end());
    cls.representative = cls.conjugacy_reps.front();
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const FfinClass& a, const FfinClass& b) {
    return a.order != b.order ? a.order < b.order : a.representative < b.representative;
  });
  return out;
}

TorsionPartition ffin_by_enumeration(const Group& group) {
  const ConjugacyIndex index(group);
  TorsionPartition result;
  result.method = FfinMethod::Enumeration;
  result.exact = true;

  std::vector<std::uint64_t> class_order(index.class_count(), 0);
  std::vector<std::size_t> torsion_classes;
  std::size_t over_cap = 0;
  for (std::size_t c = 0; c < index.class_count(); ++c) {
    const auto r = group.order(index.representative(c));
    if (!r.is_finite()) {
      ++over_cap;
      continue;
    }
    class_order[c] = r.value();
    torsion_classes.push_back(c);
  }
  if (over_cap > 0) {
    result.warnings.push_back(std::to_string(over_cap) +
                              " conjugacy classes have order above the order cap and were treated as infinite");
    result.exact = false;
  }

  std::unordered_map<std::size_t, std::size_t> slot;  // class id -> union-find slot
  std::vector<Element> reps;
  std::vector<std::uint64_t> orders;
  for (auto c : torsion_classes) {
    slot.emplace(c, reps.size());
    reps.push_back(index.representative(c));
    orders.push_back(class_order[c]);
  }

  UnionFind uf(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto d = orders[i];
    Element x = group.identity();
    for (std::uint64_t a = 1; a <= d; ++a) {
      x = group.multiply(x, reps[i]);
      const auto c = index.class_of(x);
      if (class_order[c] == d) uf.unite(i, slot.at(c));
    }
  }
  result.classes = collect_classes(uf, reps, orders);
  result.f_value = result.classes.size();
  return result;
}

TorsionPartition ffin_analytic(const Group& group, std::vector<Element> reps) {
  TorsionPartition result;
  result.method = FfinMethod::Analytic;
  result.exact = true;

  std::unordered_map<Element, std::size_t, ElementHash> slot;
  std::vector<std::uint64_t> orders;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    slot.emplace(reps[i], i);
    orders.push_back(finite_order(group, reps[i]));
  }

  UnionFind uf(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto d = orders[i];
    Element x = group.identity();
    for (std::uint64_t a = 1; a <= d; ++a) {
      x = group.multiply(x, reps[i]);
      const auto key = group.class_normal_form(x);
      if (!key) throw Unsupported("power of a torsion representative has no class normal form");
      const auto it = slot.find(*key);
      if (it == slot.end()) throw Unsupported("torsion class list of " + group.name() + " is not closed under powers");
      if (orders[it->second] == d) uf.unite(i, it->second);
    }
  }
  result.classes = collect_classes(uf, reps, orders);
  result.f_value = result.classes.size();
  return result;
}

TorsionPartition ffin_radius_bounded(const Group& group, std::uint32_t radius) {
  TorsionPartition result;
  result.method = FfinMethod::RadiusBounded;
  result.exact = false;
  result.search_radius = radius;

  std::vector<Element> torsion;
  std::vector<std::uint64_t> orders;
  std::size_t over_cap = 0;
  for (auto& entry : group.enumerate_ball(radius)) {
    const auto r = group.order(entry.element);
    if (r.is_finite()) {
      torsion.push_back(std::move(entry.element));
      orders.push_back(r.value());
    } else if (group.is_finite()) {
      ++over_cap;
    }
  }
  if (over_cap > 0) {
    result.warnings.push_back(std::to_string(over_cap) +
                              " elements have order above the order cap and were treated as infinite");
  }
  std::sort(torsion.begin(), torsion.end());
  orders.clear();
  for (const auto& t : torsion) orders.push_back(group.order(t).value());

  std::unordered_map<Element, std::size_t, ElementHash> slot;
  for (std::size_t i = 0; i < torsion.size(); ++i) slot.emplace(torsion[i], i);

  std::vector<Element> inverses;
  for (const auto& s : group.generators()) inverses.push_back(group.inverse(s));

  UnionFind conj(torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    for (std::size_t k = 0; k < inverses.size(); ++k) {
      const auto c = group.multiply(group.multiply(group.generators()[k], torsion[i]), inverses[k]);
      if (auto it = slot.find(c); it != slot.end()) conj.unite(i, it->second);
    }
  }

  // Conjugacy classes seen inside the ball, each represented by its minimum.
  std::map<std::size_t, std::size_t> root_to_class;
  std::vector<Element> reps;
  std::vector<std::uint64_t> rep_orders;
  std::vector<std::size_t> class_of(torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    const auto root = conj.find(i);
    auto [it, inserted] = root_to_class.emplace(root, reps.size());
    if (inserted) {
      reps.push_back(torsion[i]);  // torsion is sorted, so the first seen is the minimum
      rep_orders.push_back(orders[i]);
    }
    class_of[i] = it->second;
  }

  UnionFind fin(reps.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    const auto d = orders[i];
    Element x = group.identity();
    for (std::uint64_t a = 1; a <= d; ++a) {
      x = group.multiply(x, torsion[i]);
      const auto it = slot.find(x);
      if (it != slot.end() && orders[it->second] == d) fin.unite(class_of[i], class_of[it->second]);
    }
  }
  result.classes = collect_classes(fin, reps, rep_orders);
  result.f_value = result.classes.size();
  return result;
}

}  // namespace

bool is_power_conjugate(const ClassOracle& oracle, const Element& g, const Element& h) {
  const auto& group = oracle.group();
  const auto dg = finite_order(group, g);
  const auto dh = finite_order(group, h);
  if (dg != dh) return false;
  if (!oracle.certified(h)) {
    throw Unsupported("conjugacy class of " + group.format(h) + " cannot be decided in " + group.name());
  }
  Element x = group.identity();
  for (std::uint64_t a = 1; a <= dg; ++a) {
    x = group.multiply(x, g);
    if (oracle.in_class(x, h)) return true;
  }
  return false;
}

bool is_power_conjugate(const Group& group, const Element& g, const Element& h) {
  group.check_member(g);
  group.check_member(h);
  return is_power_conjugate(ClassOracle(group), g, h);
}

TorsionPartition compute_ffin(const Group& group, const TorsionOptions& options) {
  const bool enumerable = group.is_finite() && *group.size() <= group.options().enumeration_cap;
  switch (options.method) {
    case FfinMethod::Enumeration:
      if (!group.is_finite()) throw Unsupported("enumeration method requires a finite group");
      return ffin_by_enumeration(group);
    case FfinMethod::Analytic: {
      auto reps = group.torsion_class_representatives();
      if (!reps) throw Unsupported(group.name() + " has no analytic torsion class description");
      return ffin_analytic(group, std::move(*reps));
    }
    case FfinMethod::RadiusBounded:
      return ffin_radius_bounded(group, options.search_radius);
    case FfinMethod::Auto:
      break;
  }
  if (enumerable) return ffin_by_enumeration(group);
  if (auto reps = group.torsion_class_representatives()) return ffin_analytic(group, std::move(*reps));
  if (group.is_finite()) {
    throw ResourceLimit(group.name() + " exceeds the enumeration cap and has no analytic torsion description");
  }
  return ffin_radius_bounded(group, options.search_radius);
}

PolTorsionPartition compute_ffin_pol(const Group& group, std::uint32_t radius, const TorsionOptions& options) {
  PolTorsionPartition out;
  out.partition = compute_ffin(group, options);
  out.certified = true;
  for (const auto& cls : out.partition.classes) {
    auto verdict = classify_gpol(group, cls.representative, radius);
    if (verdict.polynomial()) {
      ++out.f_pol_value;
    } else {
      out.partition.warnings.push_back("class of " + group.format(cls.representative) +
                                       " has inconclusive growth at radius " + std::to_string(radius) +
                                       " and is not counted in F^pol");
    }
    if (verdict.kind != GpolVerdict::Kind::CertifiedPolynomial) out.certified = false;
    out.verdicts.push_back(std::move(verdict));
  }
  return out;
}

PolyFullVerdict is_polynomially_full(const Group& group, std::uint32_t radius, bool use_certificates) {
  if (use_certificates) {
    if (group.is_finite()) return {PolyFullKind::CertifiedTrue, "finite group", std::nullopt};
    if (group.torsion_free()) return {PolyFullKind::CertifiedTrue, "torsion-free: G^fin = {e}", std::nullopt};
    if (group.virtually_nilpotent()) {
      return {PolyFullKind::CertifiedTrue, "virtually nilpotent: polynomial growth", std::nullopt};
    }
  }
  const auto partition = compute_ffin(group);
  for (const auto& cls : partition.classes) {
    const auto verdict = measure_gpol(group, cls.representative, radius);
    if (!verdict.polynomial()) {
      return {PolyFullKind::EmpiricallyRefuted,
              "class of " + group.format(cls.representative) + " does not fit a polynomial model", radius};
    }
  }
  return {PolyFullKind::EmpiricallyConsistent, "every torsion class fits a polynomial model", radius};
}

}  // namespace kfin
