#include "bounds.hpp"

#include "kfin/error.hpp"

namespace kfin::app {

ManifoldBoundArithmetic manifold_bound_arithmetic(std::size_t f_pol, std::int64_t dim) {
  if (dim < 1) throw InvalidArgument("manifold dimension must be at least 1");
  ManifoldBoundArithmetic out;
  const auto f = static_cast<std::int64_t>(f_pol);
  const bool four_k_minus_one = dim % 4 == 3 && dim >= 7;
  const bool odd_at_least_five = dim % 2 == 1 && dim >= 5;

  if (four_k_minus_one) {
    out.s_bound = f - 1;
    out.s_note = "applies: dimension 4k-1 with k > 1, rank S(M) >= F^pol - 1";
  } else {
    out.s_note = "not applicable: needs dimension 4k-1 with k > 1, got " + std::to_string(dim);
  }

  if (four_k_minus_one) {
    out.p_bound = f;
    out.p_note = "applies: dimension 4k-1 with k > 1, rank P(M) >= F^pol";
  } else if (odd_at_least_five) {
    out.p_bound = f - 1;
    out.p_note = "applies: dimension 2k-1 with k > 2, rank P(M) >= F^pol - 1";
  } else if (dim % 2 == 0) {
    out.p_note = "not applicable: even dimension " + std::to_string(dim);
  } else {
    out.p_note = "not applicable: needs odd dimension at least 5, got " + std::to_string(dim);
  }
  if (dim % 2 == 0) out.s_note = "not applicable: even dimension " + std::to_string(dim);
  return out;
}

BoundsReport manifold_bounds(const Group& group, std::int64_t dim, const ManifoldFlags& flags, std::uint32_t radius) {
  if (dim < 1) throw InvalidArgument("manifold dimension must be at least 1");
  const auto sandwich = rank_bounds(group, radius);
  BoundsReport r;
  r.group = group.name();
  r.f_value = sandwich.upper;
  r.f_pol_value = sandwich.lower;
  r.f_pol_certified = sandwich.lower_certified;
  r.f_exact = sandwich.upper_exact;
  r.radius = radius;
  r.poly_full = sandwich.poly_full;
  r.rank_exact = sandwich.exact;
  r.manifold_dim = dim;
  r.flags = flags;
  r.bounds = manifold_bound_arithmetic(r.f_pol_value, dim);
  return r;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "bounds";
  j["group"] = r.group;
  j["f_value"] = r.f_value;
  j["f_exact"] = r.f_exact;
  j["f_pol_value"] = r.f_pol_value;
  j["confidence"] = r.f_pol_certified ? std::string("certified") : "empirical-at-radius-" + std::to_string(r.radius);
  j["poly_full"] = to_json(r.poly_full);
  j["rank_sandwich"] = Json{{"lower", r.f_pol_value},
                            {"upper", r.f_value},
                            {"exact", r.rank_exact ? Json(*r.rank_exact) : Json(nullptr)}};
  if (r.rank_exact) {
    j["k_fin_structure"] = "free abelian of rank " + std::to_string(*r.rank_exact);
  } else {
    j["k_fin_structure"] = nullptr;
  }
  j["manifold_dim"] = r.manifold_dim;
  j["hypotheses"] = Json{{"fundamental_group", "the group spec stands in for pi_1(M)"},
                         {"oriented", r.flags.oriented},
                         {"spin_psc", r.flags.spin_psc}};
  j["s_bound"] = r.bounds.s_bound ? Json(*r.bounds.s_bound) : Json(nullptr);
  j["p_bound"] = r.bounds.p_bound ? Json(*r.bounds.p_bound) : Json(nullptr);
  j["applicability"] = Json{{"s_bound", r.bounds.s_note}, {"p_bound", r.bounds.p_note}};
  Json warnings = Json::array();
  if (r.bounds.p_bound && !r.flags.spin_psc) {
    warnings.push_back("P(M) bound assumes a compact spin manifold admitting positive scalar curvature; --spin-psc not asserted");
  }
  if (r.bounds.s_bound && !r.flags.oriented) {
    warnings.push_back("S(M) bound assumes a compact oriented manifold; --oriented not asserted");
  }
  j["warnings"] = warnings;
  return j;
}

Json run_bounds(const std::string& spec, std::int64_t dim, const ManifoldFlags& flags, const RunOptions& options) {
  const Group group(parse_group_spec(spec), options.group);
  return to_json(manifold_bounds(group, dim, flags, options.radius));
}

}  // namespace kfin::app
