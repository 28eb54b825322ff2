#include "kfin/formulas.hpp"

#include <functional>

#include "kfin/error.hpp"
#include "kfin/group.hpp"
#include "kfin/torsion.hpp"

namespace kfin {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + " needs a positive argument");
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  require_positive(a, "lcm");
  require_positive(b, "lcm");
  return a / gcd(a, b) * b;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

FormulaResult ffin_abelian(const std::vector<std::uint64_t>& torsion, std::uint64_t free_rank) {
  std::vector<std::vector<std::uint64_t>> divs;
  std::string family;
  for (auto n : torsion) {
    divs.push_back(divisors(n));
    family += (family.empty() ? "" : " x ") + ("Z/" + std::to_string(n));
  }
  if (free_rank > 0) family += (family.empty() ? "" : " x ") + ("Z^" + std::to_string(free_rank));
  if (family.empty()) family = "trivial";

  Rational total;
  std::vector<std::uint64_t> pick(divs.size());
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == divs.size()) {
      std::uint64_t num = 1, l = 1;
      for (auto d : pick) {
        num *= euler_phi(d);
        l = lcm(l, d);
      }
      total += Rational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(euler_phi(l))));
      return;
    }
    for (auto d : divs[i]) {
      pick[i] = d;
      walk(i + 1);
    }
  };
  walk(0);
  if (!total.is_integer()) throw Error("abelian divisor-totient sum is not an integer: " + total.to_string());
  return {family, total.numerator(), "abelian-divisor-totient"};
}

FormulaResult ffin_dihedral(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("dihedral formula needs n >= 2");
  const auto value = divisors(n).size() + (n % 2 == 1 ? 1 : 2);
  return {"D" + std::to_string(n), BigInt(static_cast<unsigned long>(value)), "dihedral-divisors"};
}

FormulaResult ffin_infinite_dihedral() { return {"Dinf", BigInt(3), "infinite-dihedral"}; }

BigInt partition_count(std::uint32_t n) {
  if (n > 200) throw InvalidArgument("partition count is limited to n <= 200");
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    BigInt sum = 0;
    for (std::int64_t k = 1;; ++k) {
      const auto g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const auto g2 = k * (3 * k + 1) / 2;
      BigInt term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1) sum += term;
      else sum -= term;
    }
    p[m] = sum;
  }
  return p[n];
}

FormulaResult ffin_symmetric(std::uint32_t n) {
  if (n < 1) throw InvalidArgument("symmetric formula needs n >= 1");
  return {"S" + std::to_string(n), partition_count(n), "partition-count"};
}

std::optional<FormulaResult> formula_for(const GroupSpec& spec) {
  std::vector<std::uint64_t> torsion;
  std::uint64_t free_rank = 0;
  bool abelian = true;
  for (const auto& atom : spec.atoms) {
    if (const auto* c = std::get_if<CyclicAtom>(&atom)) {
      torsion.push_back(c->n);
    } else if (const auto* f = std::get_if<FreeAbelianAtom>(&atom)) {
      free_rank += f->rank;
    } else {
      abelian = false;
    }
  }
  if (abelian) return ffin_abelian(torsion, free_rank);
  if (spec.atoms.size() != 1) return std::nullopt;
  const auto& atom = spec.atoms.front();
  if (const auto* d = std::get_if<DihedralAtom>(&atom)) return ffin_dihedral(d->n);
  if (std::holds_alternative<InfiniteDihedralAtom>(atom)) return ffin_infinite_dihedral();
  if (const auto* s = std::get_if<SymmetricAtom>(&atom)) return ffin_symmetric(s->n);
  return std::nullopt;
}

CrossValidation cross_validate(const std::string& spec_text, std::uint32_t radius, const GroupOptions& options) {
  const Group group(parse_group_spec(spec_text), options);
  CrossValidation out;
  out.spec = render(group.spec());
  if (auto f = formula_for(group.spec())) out.formula_value = f->value;

  if (group.is_finite()) {
    if (*group.size() <= group.options().enumeration_cap) {
      out.brute_force_value = compute_ffin(group, {FfinMethod::Enumeration}).f_value;
      out.brute_force_exact = true;
    } else {
      out.note = "brute force infeasible: group exceeds the enumeration cap";
    }
  } else {
    out.brute_force_value = compute_ffin(group, {FfinMethod::RadiusBounded, radius}).f_value;
    out.note = "infinite group: radius-bounded search at radius " + std::to_string(radius);
  }
  if (!out.formula_value) out.note += std::string(out.note.empty() ? "" : "; ") + "no closed form for this family";
  out.agree = out.formula_value && out.brute_force_value &&
              *out.formula_value == BigInt(static_cast<unsigned long>(*out.brute_force_value));
  return out;
}

}  // namespace kfin
