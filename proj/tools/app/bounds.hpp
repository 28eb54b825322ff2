#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "report.hpp"

namespace kfin::app {

struct ManifoldFlags {
  bool oriented = false;
  bool spin_psc = false;
};

/// Lower bounds for the ranks of S(M) and P(M) from F^pol of pi_1(M), by dimension.
struct ManifoldBoundArithmetic {
  std::optional<std::int64_t> s_bound;
  std::optional<std::int64_t> p_bound;
  std::string s_note;
  std::string p_note;
};

ManifoldBoundArithmetic manifold_bound_arithmetic(std::size_t f_pol, std::int64_t dim);

struct BoundsReport {
  std::string group;
  std::size_t f_value = 0;
  std::size_t f_pol_value = 0;
  bool f_pol_certified = false;
  bool f_exact = false;
  std::uint32_t radius = 0;
  PolyFullVerdict poly_full;
  std::optional<std::size_t> rank_exact;
  std::int64_t manifold_dim = 0;
  ManifoldFlags flags;
  ManifoldBoundArithmetic bounds;
};

BoundsReport manifold_bounds(const Group& group, std::int64_t dim, const ManifoldFlags& flags, std::uint32_t radius);
Json to_json(const BoundsReport& report);
Json run_bounds(const std::string& spec, std::int64_t dim, const ManifoldFlags& flags, const RunOptions& options);

}  // namespace kfin::app
