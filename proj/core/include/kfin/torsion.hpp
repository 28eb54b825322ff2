#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kfin/conjugacy.hpp"
#include "kfin/element.hpp"
#include "kfin/group.hpp"
#include "kfin/growth.hpp"

namespace kfin {

enum class FfinMethod {
  Auto,
  Enumeration,    // finite group: every element, classes by orbit closure
  Analytic,       // torsion class representatives supplied by the families
  RadiusBounded,  // torsion elements of a word ball, relations searched inside the ball
};

std::string to_string(FfinMethod method);

struct TorsionOptions {
  FfinMethod method = FfinMethod::Auto;
  /// Ball radius for the radius-bounded method.
  std::uint32_t search_radius = 12;
};

/// One ~fin class: torsion elements of equal order d with some power g^a conjugate to h.
struct FfinClass {
  Element representative;  // minimum over the class
  std::uint64_t order = 1;
  std::vector<Element> conjugacy_reps;  // merged conjugacy-class representatives, sorted
};

struct TorsionPartition {
  std::vector<FfinClass> classes;  // sorted by (order, representative)
  std::size_t f_value = 0;
  bool exact = false;
  FfinMethod method = FfinMethod::Auto;
  std::optional<std::uint32_t> search_radius;
  std::vector<std::string> warnings;
};

/// g ~fin h: equal finite orders d and g^a in C(h) for some a in [1, d].
/// Throws Unsupported when an order exceeds the cap or C(h) cannot be decided.
bool is_power_conjugate(const Group& group, const Element& g, const Element& h);
bool is_power_conjugate(const ClassOracle& oracle, const Element& g, const Element& h);

/// The partition of torsion conjugacy classes under ~fin; f_value is F_G.
TorsionPartition compute_ffin(const Group& group, const TorsionOptions& options = {});

struct PolTorsionPartition {
  TorsionPartition partition;
  std::vector<GpolVerdict> verdicts;  // parallel to partition.classes
  std::size_t f_pol_value = 0;
  /// Every verdict is CertifiedPolynomial.
  bool certified = false;
};

/// F^pol_G: ~fin classes whose representative lies in G^pol. Inconclusive verdicts are
/// not counted.
PolTorsionPartition compute_ffin_pol(const Group& group, std::uint32_t radius, const TorsionOptions& options = {});

enum class PolyFullKind { CertifiedTrue, EmpiricallyConsistent, EmpiricallyRefuted };

struct PolyFullVerdict {
  PolyFullKind kind = PolyFullKind::CertifiedTrue;
  std::string reason;
  std::optional<std::uint32_t> radius;  // set for empirical verdicts
};

std::string to_string(PolyFullKind kind);

/// G^fin inside G^pol. Certified for finite, torsion-free and virtually nilpotent groups
/// unless `use_certificates` is false, in which case every torsion class is measured.
PolyFullVerdict is_polynomially_full(const Group& group, std::uint32_t radius, bool use_certificates = true);

}  // namespace kfin
