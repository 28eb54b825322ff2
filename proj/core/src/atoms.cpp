#include "atoms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "kfin/error.hpp"

namespace kfin::detail {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::size_t& pos) {
  std::int64_t v = 0;
  const char* first = s.data() + pos;
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr == first) throw ParseError("expected an integer", pos);
  pos = static_cast<std::size_t>(ptr - s.data());
  return v;
}

std::int64_t parse_whole_int(std::string_view s) {
  s = trim(s);
  std::size_t pos = 0;
  const auto v = parse_int(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters after integer", pos);
  return v;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const auto r = a % n;
  return r < 0 ? r + n : r;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

// ---------------------------------------------------------------------------
// Permutations as 0-based image arrays, (s*t)(i) = s(t(i)).

std::vector<std::int64_t> cycle_lengths(CSpan p) {
  std::vector<std::int64_t> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Coords compose(CSpan a, CSpan b) {
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Coords invert_perm(CSpan a) {
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<std::int64_t>(i);
  return out;
}

bool is_permutation(CSpan a, std::size_t degree) {
  if (a.size() != degree) return false;
  std::vector<bool> hit(degree, false);
  for (auto v : a) {
    if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::string format_cycles(CSpan p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<std::int64_t>(i)) continue;
    out += '(';
    bool first = true;
    for (auto j = i; !done[j]; j = static_cast<std::size_t>(p[j])) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Product of cycles, rightmost applied first.
Coords parse_cycles(std::string_view text, std::size_t degree) {
  text = trim(text);
  Coords result(degree);
  std::iota(result.begin(), result.end(), 0);
  std::size_t pos = 0;
  std::vector<Coords> factors;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation", pos);
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
      if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const auto at = pos;
      const auto p = parse_int(text, pos);
      if (p < 1 || static_cast<std::size_t>(p) > degree) {
        throw ParseError("cycle point outside 1.." + std::to_string(degree), at);
      }
      if (std::find(cycle.begin(), cycle.end(), static_cast<std::size_t>(p - 1)) != cycle.end()) {
        throw ParseError("point repeated within a cycle", at);
      }
      cycle.push_back(static_cast<std::size_t>(p - 1));
    }
    Coords f(degree);
    std::iota(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      f[cycle[i]] = static_cast<std::int64_t>(cycle[(i + 1) % cycle.size()]);
    }
    factors.push_back(std::move(f));
  }
  for (const auto& f : factors) result = compose(result, f);
  return result;
}

/// Lexicographically smallest permutation with the given cycle type: shorter cycles
/// first, each on consecutive points.
Coords min_perm_of_type(const std::vector<std::int64_t>& ascending_lengths, std::size_t degree) {
  Coords p(degree);
  std::size_t start = 0;
  for (auto len : ascending_lengths) {
    const auto l = static_cast<std::size_t>(len);
    for (std::size_t i = 0; i + 1 < l; ++i) p[start + i] = static_cast<std::int64_t>(start + i + 1);
    p[start + l - 1] = static_cast<std::int64_t>(start);
    start += l;
  }
  return p;
}

void partitions_ascending(std::int64_t remaining, std::int64_t min_part, std::vector<std::int64_t>& cur,
                          std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (auto part = min_part; part <= remaining; ++part) {
    cur.push_back(part);
    partitions_ascending(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

// ---------------------------------------------------------------------------

class CyclicGroupAtom final : public Atom {
 public:
  CyclicGroupAtom(std::uint64_t n, const GroupOptions& o) : Atom(o), n_(static_cast<std::int64_t>(n)) {}

  std::size_t width() const override { return 1; }
  Coords identity() const override { return {0}; }
  Coords multiply(CSpan a, CSpan b) const override { return {mod(a[0] + b[0], n_)}; }
  Coords inverse(CSpan a) const override { return {mod(-a[0], n_)}; }
  OrderResult order(CSpan a, std::uint64_t) const override {
    return OrderResult::finite(static_cast<std::uint64_t>(n_ / std::gcd(n_, a[0])));
  }
  std::vector<Coords> generators() const override {
    if (n_ == 1) return {};
    if (n_ == 2) return {{1}};
    return {{1}, {n_ - 1}};
  }
  std::optional<std::uint64_t> size() const override { return static_cast<std::uint64_t>(n_); }
  bool is_member(CSpan a) const override { return a.size() == 1 && a[0] >= 0 && a[0] < n_; }
  std::string format(CSpan a) const override { return std::to_string(a[0]); }
  Coords parse(std::string_view text) const override { return {mod(parse_whole_int(text), n_)}; }
  std::optional<Coords> class_rep(CSpan a) const override { return Coords(a.begin(), a.end()); }
  bool analytic_classes() const override { return true; }
  std::optional<std::vector<Coords>> torsion_class_reps() const override { return all_elements(); }
  std::vector<Coords> all_elements() const override {
    std::vector<Coords> out;
    for (std::int64_t k = 0; k < n_; ++k) out.push_back({k});
    return out;
  }

 private:
  std::int64_t n_;
};

class FreeAbelianGroupAtom final : public Atom {
 public:
  FreeAbelianGroupAtom(std::uint32_t m, const GroupOptions& o) : Atom(o), m_(m) {}

  std::size_t width() const override { return m_; }
  Coords identity() const override { return Coords(m_, 0); }
  Coords multiply(CSpan a, CSpan b) const override {
    Coords out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = a[i] + b[i];
    return out;
  }
  Coords inverse(CSpan a) const override {
    Coords out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = -a[i];
    return out;
  }
  OrderResult order(CSpan a, std::uint64_t cap) const override {
    const bool zero = std::all_of(a.begin(), a.end(), [](auto v) { return v == 0; });
    return zero ? OrderResult::finite(1) : OrderResult::exceeds_cap(cap);
  }
  std::vector<Coords> generators() const override {
    std::vector<Coords> gens;
    for (std::size_t i = 0; i < m_; ++i) {
      Coords e(m_, 0);
      e[i] = 1;
      gens.push_back(e);
      e[i] = -1;
      gens.push_back(e);
    }
    return gens;
  }
  std::optional<std::uint64_t> size() const override { return std::nullopt; }
  bool is_member(CSpan a) const override { return a.size() == m_; }
  std::string format(CSpan a) const override {
    if (m_ == 1) return std::to_string(a[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < m_; ++i) {
      if (i > 0) out += ',';
      out += std::to_string(a[i]);
    }
    return out + ")";
  }
  Coords parse(std::string_view text) const override {
    text = trim(text);
    if (m_ == 1 && (text.empty() || text.front() != '(')) return {parse_whole_int(text)};
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      throw ParseError("expected (k1,...,km) for a Z^m element", 0);
    }
    Coords out;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      out.push_back(parse_whole_int(body.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (out.size() != m_) throw ParseError("expected " + std::to_string(m_) + " coordinates", 0);
    return out;
  }
  std::optional<Coords> class_rep(CSpan a) const override { return Coords(a.begin(), a.end()); }
  bool analytic_classes() const override { return true; }
  std::optional<std::vector<Coords>> torsion_class_reps() const override {
    return std::vector<Coords>{identity()};
  }
  bool torsion_free() const override { return true; }

 private:
  std::uint32_t m_;
};

/// Elements y^k (reflection bit 0) and x y^k (bit 1), with y x = x y^-1.
/// n == 0 encodes the infinite dihedral group.
class DihedralGroupAtom final : public Atom {
 public:
  DihedralGroupAtom(std::uint64_t n, const GroupOptions& o) : Atom(o), n_(static_cast<std::int64_t>(n)) {}

  std::size_t width() const override { return 2; }
  Coords identity() const override { return {0, 0}; }
  Coords multiply(CSpan a, CSpan b) const override {
    // x^s y^a * x^t y^b = x^(s+t) y^((-1)^t a + b)
    const std::int64_t rot = (b[0] == 1 ? -a[1] : a[1]) + b[1];
    return {(a[0] + b[0]) % 2, reduce(rot)};
  }
  Coords inverse(CSpan a) const override {
    if (a[0] == 1) return {1, a[1]};
    return {0, reduce(-a[1])};
  }
  OrderResult order(CSpan a, std::uint64_t cap) const override {
    if (a[0] == 1) return OrderResult::finite(2);
    if (a[1] == 0) return OrderResult::finite(1);
    if (n_ == 0) return OrderResult::exceeds_cap(cap);
    return OrderResult::finite(static_cast<std::uint64_t>(n_ / std::gcd(n_, a[1])));
  }
  std::vector<Coords> generators() const override {
    std::vector<Coords> gens{{1, 0}, {0, 1}};
    if (n_ != 2) gens.push_back({0, reduce(-1)});
    return gens;
  }
  std::optional<std::uint64_t> size() const override {
    if (n_ == 0) return std::nullopt;
    return static_cast<std::uint64_t>(2 * n_);
  }
  bool is_member(CSpan a) const override {
    if (a.size() != 2 || (a[0] != 0 && a[0] != 1)) return false;
    return n_ == 0 || (a[1] >= 0 && a[1] < n_);
  }
  std::string format(CSpan a) const override {
    std::string out = a[0] == 1 ? "x" : "";
    if (a[1] == 1) {
      out += "y";
    } else if (a[1] != 0) {
      out += "y^" + std::to_string(a[1]);
    }
    return out.empty() ? "e" : out;
  }
  std::optional<Coords> class_rep(CSpan a) const override {
    if (a[0] == 1) {
      // x y^a ~ x y^(a + 2b): one class when n is odd, two (by parity) otherwise.
      if (n_ != 0 && n_ % 2 == 1) return Coords{1, 0};
      return Coords{1, mod(a[1], 2)};
    }
    if (n_ == 0) return Coords{0, a[1] < 0 ? -a[1] : a[1]};
    return Coords{0, a[1] == 0 ? 0 : std::min(a[1], n_ - a[1])};
  }
  bool analytic_classes() const override { return true; }
  std::optional<std::vector<Coords>> torsion_class_reps() const override {
    std::vector<Coords> reps;
    if (n_ == 0) return std::vector<Coords>{{0, 0}, {1, 0}, {1, 1}};
    for (std::int64_t k = 0; k <= n_ / 2; ++k) reps.push_back({0, k});
    reps.push_back({1, 0});
    if (n_ % 2 == 0) reps.push_back({1, 1});
    return reps;
  }
  std::vector<Coords> all_elements() const override {
    std::vector<Coords> out;
    for (std::int64_t s = 0; s < 2; ++s)
      for (std::int64_t k = 0; k < n_; ++k) out.push_back({s, k});
    return out;
  }

 protected:
  std::vector<std::pair<std::string, Coords>> letters() const override {
    return {{"x", {1, 0}}, {"y", {0, reduce(1)}}};
  }

 private:
  std::int64_t reduce(std::int64_t k) const { return n_ == 0 ? k : mod(k, n_); }
  std::int64_t n_;
};

class PermutationGroupAtomBase : public Atom {
 public:
  PermutationGroupAtomBase(std::size_t degree, const GroupOptions& o) : Atom(o), degree_(degree) {}

  std::size_t width() const override { return degree_; }
  Coords identity() const override {
    Coords id(degree_);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  Coords multiply(CSpan a, CSpan b) const override { return compose(a, b); }
  Coords inverse(CSpan a) const override { return invert_perm(a); }
  OrderResult order(CSpan a, std::uint64_t) const override {
    std::uint64_t d = 1;
    for (auto len : cycle_lengths(a)) d = lcm_u64(d, static_cast<std::uint64_t>(len));
    return OrderResult::finite(d);
  }
  std::string format(CSpan a) const override { return format_cycles(a); }
  Coords parse(std::string_view text) const override { return parse_cycles(text, degree_); }

 protected:
  std::size_t degree_;
};

class SymmetricGroupAtom final : public PermutationGroupAtomBase {
 public:
  SymmetricGroupAtom(std::uint32_t n, const GroupOptions& o) : PermutationGroupAtomBase(n, o) {}

  std::vector<Coords> generators() const override {
    std::vector<Coords> gens;
    for (std::size_t i = 0; i < degree_; ++i) {
      for (std::size_t j = i + 1; j < degree_; ++j) {
        Coords t = identity();
        std::swap(t[i], t[j]);
        gens.push_back(std::move(t));
      }
    }
    return gens;
  }
  std::optional<std::uint64_t> size() const override {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= degree_; ++k) {
      if (f > UINT64_MAX / k) return UINT64_MAX;
      f *= k;
    }
    return f;
  }
  bool is_member(CSpan a) const override { return is_permutation(a, degree_); }
  std::optional<Coords> class_rep(CSpan a) const override {
    return min_perm_of_type(cycle_lengths(a), degree_);
  }
  bool analytic_classes() const override { return true; }
  std::optional<std::vector<Coords>> torsion_class_reps() const override {
    std::vector<std::vector<std::int64_t>> parts;
    std::vector<std::int64_t> cur;
    partitions_ascending(static_cast<std::int64_t>(degree_), 1, cur, parts);
    std::vector<Coords> reps;
    for (const auto& p : parts) reps.push_back(min_perm_of_type(p, degree_));
    return reps;
  }
  std::vector<Coords> all_elements() const override {
    std::vector<Coords> out;
    Coords p = identity();
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
};

/// Finite atom whose conjugacy classes are obtained by enumerating the atom.
class EnumeratedClassesMixin {
 protected:
  struct ClassData {
    std::unordered_map<Coords, std::size_t, CoordsHash> class_of;
    std::vector<Coords> reps;
  };

  const ClassData& class_data(const Atom& self) const {
    std::call_once(once_, [&] {
      const auto elems = self.all_elements();
      const auto gens = self.generators();
      ClassData data;
      for (const auto& e : elems) {
        if (data.class_of.count(e) != 0) continue;
        const std::size_t id = data.reps.size();
        std::vector<Coords> orbit{e};
        data.class_of.emplace(e, id);
        Coords rep = e;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          for (const auto& s : gens) {
            auto c = self.multiply(self.multiply(s, orbit[i]), self.inverse(s));
            if (data.class_of.emplace(c, id).second) {
              if (Element(c) < Element(rep)) rep = c;
              orbit.push_back(std::move(c));
            }
          }
        }
        data.reps.push_back(rep);
      }
      data_ = std::move(data);
    });
    return data_;
  }

 private:
  mutable std::once_flag once_;
  mutable ClassData data_;
};

class PermutationGroupAtom final : public PermutationGroupAtomBase, private EnumeratedClassesMixin {
 public:
  PermutationGroupAtom(const PermutationAtom& spec, const GroupOptions& o)
      : PermutationGroupAtomBase(spec.degree, o) {
    std::set<Coords> gens;
    for (const auto& g : spec.generators) {
      Coords c(g.begin(), g.end());
      gens.insert(invert_perm(c));
      gens.insert(std::move(c));
    }
    generators_.assign(gens.begin(), gens.end());
  }

  std::vector<Coords> generators() const override { return generators_; }
  std::optional<std::uint64_t> size() const override { return elements().size(); }
  bool is_member(CSpan a) const override {
    if (!is_permutation(a, degree_)) return false;
    const auto& all = elements();
    return std::binary_search(all.begin(), all.end(), Coords(a.begin(), a.end()),
                              [](const Coords& x, const Coords& y) { return Element(x) < Element(y); });
  }
  std::optional<Coords> class_rep(CSpan a) const override {
    const auto& d = class_data(*this);
    return d.reps.at(d.class_of.at(Coords(a.begin(), a.end())));
  }
  bool analytic_classes() const override { return true; }
  std::optional<std::vector<Coords>> torsion_class_reps() const override { return class_data(*this).reps; }
  std::vector<Coords> all_elements() const override { return elements(); }

 private:
  const std::vector<Coords>& elements() const {
    std::call_once(elements_once_, [&] {
      auto all = Atom::all_elements();
      std::sort(all.begin(), all.end(), [](const Coords& x, const Coords& y) { return Element(x) < Element(y); });
      elements_ = std::move(all);
    });
    return elements_;
  }

  std::vector<Coords> generators_;
  mutable std::once_flag elements_once_;
  mutable std::vector<Coords> elements_;
};

/// Exponent coordinates (p, q, r) for a^p b^q c^r with c = [a, b] = a b a^-1 b^-1 central.
/// (p,q,r)(p',q',r') = (p+p', q+q', r+r' - q p').
class HeisenbergGroupAtom final : public Atom {
 public:
  explicit HeisenbergGroupAtom(const GroupOptions& o) : Atom(o) {}

  std::size_t width() const override { return 3; }
  Coords identity() const override { return {0, 0, 0}; }
  Coords multiply(CSpan a, CSpan b) const override {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2] - a[1] * b[0]};
  }
  Coords inverse(CSpan a) const override { return {-a[0], -a[1], -a[2] - a[0] * a[1]}; }
  OrderResult order(CSpan a, std::uint64_t cap) const override {
    const bool zero = a[0] == 0 && a[1] == 0 && a[2] == 0;
    return zero ? OrderResult::finite(1) : OrderResult::exceeds_cap(cap);
  }
  std::vector<Coords> generators() const override {
    return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  }
  std::optional<std::uint64_t> size() const override { return std::nullopt; }
  bool is_member(CSpan a) const override { return a.size() == 3; }
  std::string format(CSpan a) const override {
    return "[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "]";
  }
  Coords parse(std::string_view text) const override {
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
      if (text.back() != ']') throw ParseError("expected ']'", text.size());
      Coords out;
      auto body = text.substr(1, text.size() - 2);
      std::size_t start = 0;
      while (true) {
        const auto comma = body.find(',', start);
        out.push_back(parse_whole_int(body.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (out.size() != 3) throw ParseError("expected [p,q,r]", 0);
      return out;
    }
    return Atom::parse(text);
  }
  // Only central elements get a class description; other classes are measured by BFS.
  std::optional<Coords> class_rep(CSpan a) const override {
    if (a[0] == 0 && a[1] == 0) return Coords(a.begin(), a.end());
    return std::nullopt;
  }
  std::optional<std::vector<Coords>> torsion_class_reps() const override {
    return std::vector<Coords>{identity()};
  }
  bool torsion_free() const override { return true; }

 protected:
  std::vector<std::pair<std::string, Coords>> letters() const override {
    return {{"a", {1, 0, 0}}, {"b", {0, 1, 0}}, {"c", {0, 0, 1}}};
  }
};

class TableGroupAtom final : public Atom, private EnumeratedClassesMixin {
 public:
  TableGroupAtom(const TableAtom& spec, const GroupOptions& o) : Atom(o), table_(spec) {
    const auto n = table_.size();
    inverse_.resize(n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (table_.table[a][b] == table_.identity) inverse_[a] = b;
    std::set<std::int64_t> gens;
    for (auto g : table_generating_set(table_)) {
      gens.insert(g);
      gens.insert(inverse_[g]);
    }
    for (auto g : gens) generators_.push_back({g});
  }

  std::size_t width() const override { return 1; }
  Coords identity() const override { return {table_.identity}; }
  Coords multiply(CSpan a, CSpan b) const override {
    return {table_.table[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])]};
  }
  Coords inverse(CSpan a) const override { return {inverse_[static_cast<std::size_t>(a[0])]}; }
  std::vector<Coords> generators() const override { return generators_; }
  std::optional<std::uint64_t> size() const override { return table_.size(); }
  bool is_member(CSpan a) const override {
    return a.size() == 1 && a[0] >= 0 && a[0] < static_cast<std::int64_t>(table_.size());
  }
  std::string format(CSpan a) const override { return "#" + std::to_string(a[0]); }
  Coords parse(std::string_view text) const override {
    text = trim(text);
    if (!text.empty() && text.front() == '#') text.remove_prefix(1);
    return {parse_whole_int(text)};
  }
  std::optional<Coords> class_rep(CSpan a) const override {
    const auto& d = class_data(*this);
    return d.reps.at(d.class_of.at(Coords(a.begin(), a.end())));
  }
  bool analytic_classes() const override { return true; }
  std::optional<std::vector<Coords>> torsion_class_reps() const override { return class_data(*this).reps; }
  std::vector<Coords> all_elements() const override {
    std::vector<Coords> out;
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(table_.size()); ++k) out.push_back({k});
    return out;
  }

 private:
  TableAtom table_;
  std::vector<std::int64_t> inverse_;
  std::vector<Coords> generators_;
};

}  // namespace

// ---------------------------------------------------------------------------

OrderResult Atom::order(CSpan a, std::uint64_t cap) const {
  const Coords id = identity();
  Coords x(a.begin(), a.end());
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x == id) return OrderResult::finite(k);
    x = multiply(x, a);
  }
  return OrderResult::exceeds_cap(cap);
}

Coords Atom::power(CSpan a, std::int64_t k) const {
  Coords base = k < 0 ? inverse(a) : Coords(a.begin(), a.end());
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Coords result = identity();
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return result;
}

Coords Atom::parse(std::string_view text) const {
  const auto alphabet = letters();
  text = trim(text);
  if (alphabet.empty()) throw ParseError("element notation not supported for this family", 0);
  Coords result = identity();
  if (text == "e" || text == "1") return result;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
      ++pos;
      continue;
    }
    auto it = std::find_if(alphabet.begin(), alphabet.end(),
                           [&](const auto& l) { return text.substr(pos, l.first.size()) == l.first; });
    if (it == alphabet.end()) throw ParseError(std::string("unknown generator letter '") + ch + "'", pos);
    pos += it->first.size();
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_int(text, pos);
    }
    result = multiply(result, power(it->second, exponent));
    any = true;
  }
  if (!any) throw ParseError("empty element", 0);
  return result;
}

std::vector<Coords> Atom::all_elements() const {
  const auto gens = generators();
  std::unordered_set<Coords, CoordsHash> seen{identity()};
  std::vector<Coords> out{identity()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : gens) {
      auto next = multiply(out[i], s);
      if (seen.insert(next).second) {
        if (out.size() >= options_.enumeration_cap) {
          throw ResourceLimit("finite atom exceeds the enumeration cap of " +
                              std::to_string(options_.enumeration_cap) + " elements");
        }
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

void Atom::expand_locked(std::uint32_t r) const {
  if (spheres_.empty()) {
    spheres_.push_back({identity()});
    dist_.emplace(identity(), 0);
  }
  const auto gens = generators();
  while (!exhausted_ && spheres_.size() <= r) {
    const auto next_len = static_cast<std::uint32_t>(spheres_.size());
    std::vector<Coords> next;
    for (const auto& g : spheres_.back()) {
      for (const auto& s : gens) {
        auto h = multiply(g, s);
        if (dist_.emplace(h, next_len).second) next.push_back(std::move(h));
      }
    }
    if (dist_.size() > options_.max_ball) {
      throw ResourceLimit("word-metric ball exceeds the cap of " + std::to_string(options_.max_ball) + " elements");
    }
    if (next.empty()) {
      exhausted_ = true;
    } else {
      std::sort(next.begin(), next.end(), [](const Coords& x, const Coords& y) { return Element(x) < Element(y); });
      spheres_.push_back(std::move(next));
    }
  }
}

std::optional<std::uint32_t> Atom::word_length(CSpan a, std::uint32_t cap) const {
  const Coords key(a.begin(), a.end());
  std::lock_guard lock(mutex_);
  std::uint32_t r = 0;
  while (true) {
    expand_locked(r);
    if (auto it = dist_.find(key); it != dist_.end()) {
      if (it->second <= cap) return it->second;
      return std::nullopt;
    }
    if (exhausted_ || r >= cap) return std::nullopt;
    ++r;
  }
}

std::vector<std::vector<Coords>> Atom::ball_by_length(std::uint32_t r) const {
  std::lock_guard lock(mutex_);
  expand_locked(r);
  std::vector<std::vector<Coords>> out;
  for (std::size_t l = 0; l < spheres_.size() && l <= r; ++l) out.push_back(spheres_[l]);
  return out;
}

std::unique_ptr<Atom> make_atom(const FamilyAtom& spec, const GroupOptions& options) {
  struct Visitor {
    const GroupOptions& o;
    std::unique_ptr<Atom> operator()(const CyclicAtom& a) const {
      return std::make_unique<CyclicGroupAtom>(a.n, o);
    }
    std::unique_ptr<Atom> operator()(const FreeAbelianAtom& a) const {
      return std::make_unique<FreeAbelianGroupAtom>(a.rank, o);
    }
    std::unique_ptr<Atom> operator()(const DihedralAtom& a) const {
      return std::make_unique<DihedralGroupAtom>(a.n, o);
    }
    std::unique_ptr<Atom> operator()(const InfiniteDihedralAtom&) const {
      return std::make_unique<DihedralGroupAtom>(0, o);
    }
    std::unique_ptr<Atom> operator()(const SymmetricAtom& a) const {
      return std::make_unique<SymmetricGroupAtom>(a.n, o);
    }
    std::unique_ptr<Atom> operator()(const HeisenbergAtom&) const {
      return std::make_unique<HeisenbergGroupAtom>(o);
    }
    std::unique_ptr<Atom> operator()(const PermutationAtom& a) const {
      return std::make_unique<PermutationGroupAtom>(a, o);
    }
    std::unique_ptr<Atom> operator()(const TableAtom& a) const {
      validate_table(a);
      return std::make_unique<TableGroupAtom>(a, o);
    }
  };
  return std::visit(Visitor{options}, spec);
}

}  // namespace kfin::detail
