#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kfin/conjugacy.hpp"
#include "kfin/group_algebra.hpp"
#include "kfin/rational.hpp"
#include "kfin/torsion.hpp"

namespace kfin {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// p_g = (1 + g + ... + g^{d-1}) / d for g of order d.
GroupAlgebraElement projection_pg(const Group& group, const Element& g);

/// x * x == x and x* == x, exactly.
bool is_projection(const GroupAlgebraElement& x);

/// tau_h(x): the sum of the coefficients of x over C(h). Throws Unsupported when C(h)
/// has no certified description.
Rational trace_tau(const Group& group, const Element& h, const GroupAlgebraElement& x);
Rational trace_tau(const ClassOracle& oracle, const Element& h, const GroupAlgebraElement& x);

struct TraceMatrixReport {
  std::vector<std::pair<Element, std::uint64_t>> reps;  // sorted by (order, element)
  RationalMatrix matrix;                                // entry (i, j) = tau_{s_i}(p_{s_j})
  bool upper_triangular = false;
  std::vector<Rational> diagonal;
  /// diagonal[i] >= 1/d_i for every i.
  bool diagonal_bound = false;
  std::size_t rank = 0;
};

/// Builds the trace matrix over `reps`, sorted by order. Duplicates are rejected.
TraceMatrixReport trace_matrix(const Group& group, std::vector<Element> reps);
/// Trace matrix over the representatives of compute_ffin.
TraceMatrixReport trace_matrix(const Group& group);

/// Exact rank over Q by fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rational_rank(const RationalMatrix& m);

struct BoundsSandwich {
  std::size_t lower = 0;  // F^pol
  std::size_t upper = 0;  // F
  /// Set when the group is certified polynomially full, so both bounds coincide.
  std::optional<std::size_t> exact;
  bool lower_certified = false;
  bool upper_exact = false;
  PolyFullVerdict poly_full;
  PolTorsionPartition partition;
};

BoundsSandwich rank_bounds(const Group& group, std::uint32_t radius, const TorsionOptions& options = {});

}  // namespace kfin
