#include "kfin/growth.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "kfin/conjugacy.hpp"
#include "kfin/error.hpp"

namespace kfin {

std::string to_string(GpolVerdict::Kind kind) {
  switch (kind) {
    case GpolVerdict::Kind::CertifiedPolynomial: return "CertifiedPolynomial";
    case GpolVerdict::Kind::EmpiricalDegree: return "EmpiricalDegree";
    case GpolVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

namespace {

template <typename Pred>
void count_spheres(const std::vector<BallEntry>& ball, GrowthProfile& profile, Pred in_class) {
  for (const auto& entry : ball) {
    if (in_class(entry.element)) ++profile.sphere_counts[entry.length];
  }
}

}  // namespace

GrowthProfile conjugacy_growth(const Group& group, const Element& h, std::uint32_t radius,
                               const GrowthOptions& options) {
  group.check_member(h);
  GrowthProfile profile;
  profile.element = h;
  profile.radius = radius;
  profile.sphere_counts.assign(radius + 1, 0);
  profile.conjugator_radius = options.conjugator_radius ? options.conjugator_radius : 2 * radius;

  const auto ball = group.enumerate_ball(radius);

  if (group.is_finite() && *group.size() <= group.options().enumeration_cap) {
    const ConjugacyIndex index(group);
    const auto cls = index.class_of(h);
    profile.membership = ClassMembership::FiniteEnumeration;
    profile.class_size = index.class_size(cls);
    profile.exact = true;
    count_spheres(ball, profile, [&](const Element& g) { return index.class_of(g) == cls; });
  } else {
    auto orbit = conjugation_orbit(group, h, profile.conjugator_radius);
    const std::unordered_set<Element, ElementHash> members(orbit.members.begin(), orbit.members.end());
    const auto key = group.class_normal_form(h);
    if (orbit.closed) {
      profile.membership = ClassMembership::OrbitSearch;
      profile.class_size = members.size();
      profile.exact = true;
      count_spheres(ball, profile, [&](const Element& g) { return members.contains(g); });
    } else if (key) {
      profile.membership = ClassMembership::AnalyticForm;
      profile.exact = true;
      count_spheres(ball, profile, [&](const Element& g) {
        const auto k = group.class_normal_form(g);
        return k && *k == *key;
      });
    } else {
      // Lower bounds: conjugates needing a longer conjugator are missed.
      profile.membership = ClassMembership::OrbitSearch;
      profile.exact = false;
      count_spheres(ball, profile, [&](const Element& g) { return members.contains(g); });
    }
  }

  std::uint64_t running = 0;
  for (auto n : profile.sphere_counts) profile.cumulative.push_back(running += n);
  profile.complete = profile.class_size && running == *profile.class_size;
  return profile;
}

DegreeFit fit_polynomial_degree(std::span<const std::uint64_t> cumulative, bool exhausted) {
  if (cumulative.size() < 5) throw InvalidArgument("degree fit needs a profile of radius at least 4");
  const auto radius = static_cast<std::uint32_t>(cumulative.size() - 1);
  DegreeFit fit;
  fit.first_radius = (radius + 1) / 2;
  fit.last_radius = radius;

  const bool flat = std::all_of(cumulative.begin(), cumulative.end(),
                                [&](std::uint64_t c) { return c == cumulative.front(); });
  const bool empty_window = cumulative[fit.first_radius] == 0;
  if (flat || empty_window) {
    fit.degenerate = true;
    fit.accepted = flat;
    fit.constant = static_cast<double>(cumulative.back());
    return fit;
  }

  std::vector<double> xs, ys;
  for (auto l = fit.first_radius; l <= radius; ++l) {
    xs.push_back(std::log(static_cast<double>(l)));
    ys.push_back(std::log(static_cast<double>(cumulative[l])));
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + fit.slope * xs[i]);
    sse += r * r;
  }
  fit.residual = std::sqrt(sse / n);
  fit.degree = static_cast<std::uint32_t>(std::max(0.0, std::round(fit.slope)));
  fit.sphere_degree = exhausted ? 0 : (fit.degree > 0 ? fit.degree - 1 : 0);
  for (auto l = fit.first_radius; l <= radius; ++l) {
    fit.constant = std::max(fit.constant, static_cast<double>(cumulative[l]) / std::pow(l, fit.degree));
  }
  fit.accepted = fit.residual < kFitResidualTolerance;
  return fit;
}

DegreeFit fit_polynomial_degree(const GrowthProfile& profile) {
  return fit_polynomial_degree(profile.cumulative, profile.complete);
}

GpolVerdict measure_gpol(const Group& group, const Element& h, std::uint32_t radius, const GrowthOptions& options) {
  GpolVerdict verdict;
  verdict.radius = radius;
  if (radius < 4) {
    verdict.reason = "radius below 4 is too small to fit";
    return verdict;
  }
  const auto profile = conjugacy_growth(group, h, radius, options);
  const auto fit = fit_polynomial_degree(profile);
  verdict.fit = fit;
  if (fit.accepted) {
    verdict.kind = GpolVerdict::Kind::EmpiricalDegree;
    verdict.degree = fit.sphere_degree;
    verdict.reason = "log-log fit residual " + std::to_string(fit.residual) + " at radius " + std::to_string(radius);
    if (!profile.exact) verdict.reason += "; counts are lower bounds from a bounded conjugator search";
  } else {
    verdict.reason = "log-log fit residual " + std::to_string(fit.residual) + " exceeds tolerance";
  }
  return verdict;
}

GpolVerdict classify_gpol(const Group& group, const Element& h, std::uint32_t radius, const GrowthOptions& options) {
  group.check_member(h);
  GpolVerdict verdict;
  verdict.kind = GpolVerdict::Kind::CertifiedPolynomial;
  if (group.is_finite()) {
    verdict.reason = "finite group";
    return verdict;
  }
  const auto depth = options.conjugator_radius ? options.conjugator_radius : 2 * radius;
  if (conjugation_orbit(group, h, depth).closed) {
    verdict.reason = "finite conjugacy class";
    return verdict;
  }
  if (group.class_normal_form(h)) {
    verdict.reason = "analytic class description in a virtually nilpotent family";
    if (radius >= 4) verdict.fit = fit_polynomial_degree(conjugacy_growth(group, h, radius, options));
    verdict.radius = radius;
    return verdict;
  }
  return measure_gpol(group, h, radius, options);
}

MajorantSeries majorant_partial_sums(const MajorantParams& params, std::uint32_t terms) {
  if (terms < 1) throw InvalidArgument("majorant needs at least one term");
  if (!(params.growth_constant > 0)) throw InvalidArgument("growth constant must be positive");
  MajorantSeries series;
  series.divergence_risk = 2 * params.decay < params.growth_degree + 4;
  const double root_c = std::sqrt(params.growth_constant);
  const double half_d = params.growth_degree / 2.0;
  double sum = 0;
  series.partial_sums.reserve(terms);
  for (std::uint32_t l = 1; l <= terms; ++l) {
    sum += root_c * std::pow(l, half_d) * std::pow(l - 0.5, -static_cast<double>(params.decay));
    series.partial_sums.push_back(sum);
  }
  return series;
}

}  // namespace kfin
