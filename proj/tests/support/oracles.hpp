#pragma once

// Reference implementations used to check the library. Each one follows the textbook
// definition directly and shares no code path with the optimized routines it checks.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "kfin/group.hpp"
#include "kfin/rational.hpp"

namespace kfin::oracle {

/// C(h) = { f h f^-1 : f in G } over every f, not just generators.
inline std::set<Element> conjugacy_class(const Group& g, const std::vector<Element>& all, const Element& h) {
  std::set<Element> out;
  for (const auto& f : all) out.insert(g.multiply(g.multiply(f, h), g.inverse(f)));
  return out;
}

inline std::uint64_t order_by_iteration(const Group& g, const Element& x) {
  std::uint64_t d = 1;
  for (Element y = x; !g.is_identity(y); y = g.multiply(y, x)) ++d;
  return d;
}

/// F_G straight from the definition on elements: g ~ h iff equal orders d and some
/// g^a, 1 <= a <= d, lies in C(h). Classes are counted by labelling.
inline std::size_t ffin_by_definition(const Group& g) {
  const auto all = g.enumerate_all();
  std::map<Element, std::size_t> class_label;
  std::vector<std::set<Element>> classes;
  for (const auto& x : all) {
    if (class_label.count(x)) continue;
    classes.push_back(conjugacy_class(g, all, x));
    for (const auto& y : classes.back()) class_label[y] = classes.size() - 1;
  }
  std::map<Element, std::uint64_t> order;
  for (const auto& x : all) order[x] = order_by_iteration(g, x);

  auto related = [&](const Element& a, const Element& b) {
    if (order[a] != order[b]) return false;
    Element p = a;
    for (std::uint64_t k = 1; k <= order[a]; ++k, p = g.multiply(p, a)) {
      if (class_label[p] == class_label[b]) return true;
    }
    return false;
  };
  std::map<Element, bool> labelled;
  std::size_t count = 0;
  for (const auto& x : all) {
    if (labelled[x]) continue;
    ++count;
    for (const auto& y : all) {
      if (related(x, y)) labelled[y] = true;
    }
  }
  return count;
}

inline std::size_t count_conjugacy_classes(const Group& g) {
  const auto all = g.enumerate_all();
  std::set<std::set<Element>> classes;
  for (const auto& x : all) classes.insert(conjugacy_class(g, all, x));
  return classes.size();
}

/// Rank by plain Gaussian elimination over Q.
inline std::size_t rank_by_gauss(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Integer partitions of n by listing them.
inline std::uint64_t partitions_by_listing(int n) {
  std::function<std::uint64_t(int, int)> count = [&](int remaining, int max_part) -> std::uint64_t {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (int part = std::min(remaining, max_part); part >= 1; --part) total += count(remaining - part, part);
    return total;
  };
  return count(n, n);
}

inline std::size_t divisor_count_by_scan(std::uint64_t n) {
  std::size_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

/// Words over the generators, breadth first: the word length of every ball element.
inline std::map<Element, std::uint32_t> word_lengths_by_bfs(const Group& g, std::uint32_t radius) {
  std::map<Element, std::uint32_t> dist{{g.identity(), 0}};
  std::vector<Element> frontier{g.identity()};
  for (std::uint32_t l = 1; l <= radius; ++l) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& s : g.generators()) {
        auto y = g.multiply(x, s);
        if (dist.emplace(y, l).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace kfin::oracle
