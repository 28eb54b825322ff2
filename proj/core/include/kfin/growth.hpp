#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kfin/element.hpp"
#include "kfin/group.hpp"

namespace kfin {

enum class ClassMembership {
  FiniteEnumeration,  // complete class index of a finite group
  AnalyticForm,       // family class normal form
  OrbitSearch,        // conjugation-orbit BFS, bounded by the conjugator radius
};

struct GrowthOptions {
  /// Depth of the conjugation-orbit search; 0 means twice the measurement radius.
  std::uint32_t conjugator_radius = 0;
};

/// Conjugacy-class growth in the word metric: n_{h,l} = |{g in C(h) : |g| = l}|.
struct GrowthProfile {
  Element element;
  std::uint32_t radius = 0;
  std::vector<std::uint64_t> sphere_counts;  // l = 0..radius
  std::vector<std::uint64_t> cumulative;     // prefix sums of sphere_counts
  /// The whole class was found inside the ball (so the class is finite).
  bool complete = false;
  /// Every count is exact; false only for orbit-search profiles of unclosed orbits, whose
  /// counts are lower bounds.
  bool exact = false;
  ClassMembership membership = ClassMembership::FiniteEnumeration;
  std::uint32_t conjugator_radius = 0;
  /// Size of the class when it is known to be finite.
  std::optional<std::uint64_t> class_size;
};

GrowthProfile conjugacy_growth(const Group& group, const Element& h, std::uint32_t radius,
                               const GrowthOptions& options = {});

/// Log-log least-squares fit of the cumulative counts over the upper half of radii.
struct DegreeFit {
  /// Rounded non-negative slope of log(cumulative) against log(l).
  std::uint32_t degree = 0;
  /// Exponent d of the sphere bound n_{h,l} <= c l^d implied by the fit: 0 for exhausted
  /// classes, otherwise max(degree - 1, 0).
  std::uint32_t sphere_degree = 0;
  double slope = 0.0;
  /// max over the fitted radii of cumulative_l / l^degree.
  double constant = 0.0;
  /// Root-mean-square residual in log-log space.
  double residual = 0.0;
  std::uint32_t first_radius = 0;
  std::uint32_t last_radius = 0;
  /// No class members beyond l = 0, or no members inside the fitted window.
  bool degenerate = false;
  bool accepted = false;
};

/// Residual threshold below which a fit counts as a polynomial model.
inline constexpr double kFitResidualTolerance = 0.15;

DegreeFit fit_polynomial_degree(const GrowthProfile& profile);
/// Same fit on a raw cumulative series (index = radius); `exhausted` marks a finite class.
DegreeFit fit_polynomial_degree(std::span<const std::uint64_t> cumulative, bool exhausted = false);

struct GpolVerdict {
  enum class Kind { CertifiedPolynomial, EmpiricalDegree, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// Sphere-growth exponent for EmpiricalDegree; 0 otherwise.
  std::uint32_t degree = 0;
  std::string reason;
  std::optional<DegreeFit> fit;
  std::optional<std::uint32_t> radius;

  bool polynomial() const noexcept { return kind != Kind::Inconclusive; }
};

std::string to_string(GpolVerdict::Kind kind);

/// Membership of h in G^pol: certified for finite classes and for classes with an analytic
/// description, otherwise measured at `radius` and fitted.
GpolVerdict classify_gpol(const Group& group, const Element& h, std::uint32_t radius,
                          const GrowthOptions& options = {});
/// As above but always measures, ignoring certificates.
GpolVerdict measure_gpol(const Group& group, const Element& h, std::uint32_t radius,
                         const GrowthOptions& options = {});

/// Growth parameters of a polynomially growing class: n_{h,l} <= C_h l^{d_h}, with
/// decay exponent b_h >= d_h / 2 + 2.
struct MajorantParams {
  double growth_constant = 1.0;  // C_h
  std::uint32_t growth_degree = 0;  // d_h
  std::uint32_t decay = 2;          // b_h
};

struct MajorantSeries {
  /// partial_sums[k-1] = sum_{l=1}^{k} sqrt(C_h) l^{d_h/2} (l - 1/2)^{-b_h}
  std::vector<double> partial_sums;
  /// b_h < d_h/2 + 2: the comparison with sum l^-2 is not available.
  bool divergence_risk = false;
};

MajorantSeries majorant_partial_sums(const MajorantParams& params, std::uint32_t terms);

}  // namespace kfin
