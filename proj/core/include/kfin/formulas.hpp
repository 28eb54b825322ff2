#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kfin/group.hpp"
#include "kfin/group_spec.hpp"
#include "kfin/rational.hpp"

namespace kfin {

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
/// Sorted positive divisors, by trial division.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct FormulaResult {
  std::string family;
  BigInt value;
  std::string formula_name;
};

/// Sum over d_i | n_i of phi(d_1)...phi(d_k) / phi(lcm(d_1, ..., d_k)); the free rank drops out.
FormulaResult ffin_abelian(const std::vector<std::uint64_t>& torsion, std::uint64_t free_rank = 0);
/// Number of divisors of n plus 1 (n odd) or 2 (n even).
FormulaResult ffin_dihedral(std::uint64_t n);
FormulaResult ffin_infinite_dihedral();
/// Integer partitions of n by the pentagonal-number recurrence, 0 <= n <= 200.
BigInt partition_count(std::uint32_t n);
FormulaResult ffin_symmetric(std::uint32_t n);

/// Closed form for a spec, when one applies: abelian products, a single dihedral or
/// symmetric atom, or D_inf.
std::optional<FormulaResult> formula_for(const GroupSpec& spec);

struct CrossValidation {
  std::string spec;
  std::optional<BigInt> formula_value;
  std::optional<std::size_t> brute_force_value;
  bool brute_force_exact = false;
  bool agree = false;
  std::string note;
};

/// Formula value against an independent brute-force count. Finite groups are enumerated
/// in full; infinite ones use the radius-bounded search at `radius` and are flagged inexact.
CrossValidation cross_validate(const std::string& spec_text, std::uint32_t radius = 12,
                               const GroupOptions& options = {});

}  // namespace kfin
