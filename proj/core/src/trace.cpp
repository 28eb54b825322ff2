#include "kfin/trace.hpp"

#include <algorithm>

#include "kfin/error.hpp"

namespace kfin {

GroupAlgebraElement projection_pg(const Group& group, const Element& g) {
  group.check_member(g);
  const auto r = group.order(g);
  if (!r.is_finite()) throw InvalidArgument(group.format(g) + " is not a torsion element within the order cap");
  const auto d = r.value();
  const Rational coeff(BigInt(1), BigInt(static_cast<unsigned long>(d)));
  GroupAlgebraElement p(group);
  Element x = group.identity();
  for (std::uint64_t a = 0; a < d; ++a) {
    p.add_term(x, coeff);
    x = group.multiply(x, g);
  }
  return p;
}

bool is_projection(const GroupAlgebraElement& x) { return x * x == x && x.star() == x; }

Rational trace_tau(const ClassOracle& oracle, const Element& h, const GroupAlgebraElement& x) {
  if (!oracle.certified(h)) {
    throw Unsupported("conjugacy class of " + oracle.group().format(h) + " has no certified description");
  }
  Rational sum;
  for (const auto& [g, a] : x.support()) {
    if (oracle.in_class(g, h)) sum += a;
  }
  return sum;
}

Rational trace_tau(const Group& group, const Element& h, const GroupAlgebraElement& x) {
  group.check_member(h);
  return trace_tau(ClassOracle(group), h, x);
}

TraceMatrixReport trace_matrix(const Group& group, std::vector<Element> reps) {
  TraceMatrixReport report;
  for (auto& s : reps) {
    group.check_member(s);
    const auto r = group.order(s);
    if (!r.is_finite()) throw InvalidArgument(group.format(s) + " is not a torsion element within the order cap");
    report.reps.emplace_back(std::move(s), r.value());
  }
  std::sort(report.reps.begin(), report.reps.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  for (std::size_t i = 1; i < report.reps.size(); ++i) {
    if (report.reps[i].first == report.reps[i - 1].first) {
      throw InvalidArgument("duplicate representative " + group.format(report.reps[i].first));
    }
  }

  const ClassOracle oracle(group);
  const auto n = report.reps.size();
  std::vector<GroupAlgebraElement> projections;
  for (const auto& [s, d] : report.reps) projections.push_back(projection_pg(group, s));

  report.matrix.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) report.matrix[i][j] = trace_tau(oracle, report.reps[i].first, projections[j]);
  }

  report.upper_triangular = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!report.matrix[i][j].is_zero()) report.upper_triangular = false;
    }
  }
  report.diagonal_bound = true;
  for (std::size_t i = 0; i < n; ++i) {
    report.diagonal.push_back(report.matrix[i][i]);
    const Rational floor(BigInt(1), BigInt(static_cast<unsigned long>(report.reps[i].second)));
    if (report.matrix[i][i] < floor) report.diagonal_bound = false;
  }
  report.rank = rational_rank(report.matrix);
  return report;
}

TraceMatrixReport trace_matrix(const Group& group) {
  std::vector<Element> reps;
  for (const auto& cls : compute_ffin(group).classes) reps.push_back(cls.representative);
  return trace_matrix(group, std::move(reps));
}

std::size_t rational_rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  const auto cols = m.front().size();
  std::vector<std::vector<BigInt>> a;
  for (const auto& row : m) {
    if (row.size() != cols) throw InvalidArgument("ragged matrix");
    BigInt scale = 1;
    for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<BigInt> ints;
    for (const auto& x : row) ints.push_back(x.numerator() * (scale / x.denominator()));
    a.push_back(std::move(ints));
  }

  const auto rows = a.size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

BoundsSandwich rank_bounds(const Group& group, std::uint32_t radius, const TorsionOptions& options) {
  BoundsSandwich out;
  out.partition = compute_ffin_pol(group, radius, options);
  out.lower = out.partition.f_pol_value;
  out.upper = out.partition.partition.f_value;
  out.lower_certified = out.partition.certified;
  out.upper_exact = out.partition.partition.exact;
  out.poly_full = is_polynomially_full(group, radius);
  if (out.poly_full.kind == PolyFullKind::CertifiedTrue && out.upper_exact) out.exact = out.upper;
  return out;
}

}  // namespace kfin
