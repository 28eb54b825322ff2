#include "kfin/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kfin/error.hpp"

namespace kfin {

namespace {

constexpr std::size_t kFullAssociativityCheckLimit = 512;

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec;
    skip_space();
    if (at_end()) fail("empty group spec");
    spec.atoms.push_back(parse_atom());
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != 'x' && !consume_utf8_times()) fail("expected 'x' between atoms");
      if (peek() == 'x') ++pos_;
      skip_space();
      if (at_end()) fail("expected an atom after 'x'");
      spec.atoms.push_back(parse_atom());
    }
    return spec;
  }

 private:
  FamilyAtom parse_atom() {
    const std::size_t start = pos_;
    if (consume("perm:")) return parse_permutation();
    if (consume("table:")) return parse_table();
    if (consume("Heis")) return HeisenbergAtom{};
    if (consume("Dinf")) return InfiniteDihedralAtom{};
    if (consume("Z/")) {
      const auto n = parse_number("Z/n");
      if (n == 0) fail_at("invalid parameter: Z/0", start);
      return CyclicAtom{n};
    }
    if (consume("Z^")) {
      const auto m = parse_number("Z^m");
      if (m == 0) fail_at("invalid parameter: Z^0", start);
      if (m > 64) fail_at("free abelian rank above 64", start);
      return FreeAbelianAtom{static_cast<std::uint32_t>(m)};
    }
    if (consume("Z")) return FreeAbelianAtom{1};
    if (consume("D")) {
      const auto n = parse_number("Dn");
      if (n < 2) fail_at("invalid parameter: dihedral D" + std::to_string(n) + " needs n >= 2", start);
      return DihedralAtom{n};
    }
    if (consume("S")) {
      const auto n = parse_number("Sn");
      if (n == 0) fail_at("invalid parameter: S0", start);
      if (n > 64) fail_at("symmetric degree above 64", start);
      return SymmetricAtom{static_cast<std::uint32_t>(n)};
    }
    fail("unknown atom");
  }

  PermutationAtom parse_permutation() {
    std::vector<std::vector<std::vector<std::uint32_t>>> gens;  // generator -> cycles -> points
    std::uint32_t degree = 1;
    while (true) {
      std::vector<std::vector<std::uint32_t>> cycles;
      std::set<std::uint32_t> seen;
      if (at_end() || peek() != '(') fail("expected '(' starting a cycle");
      while (!at_end() && peek() == '(') {
        ++pos_;
        std::vector<std::uint32_t> cycle;
        while (true) {
          while (!at_end() && (peek() == ' ' || peek() == ',')) ++pos_;
          if (at_end()) fail("unterminated cycle");
          if (peek() == ')') {
            ++pos_;
            break;
          }
          const std::size_t point_pos = pos_;
          const auto p = parse_number("cycle point");
          if (p == 0) fail_at("cycle points start at 1", point_pos);
          if (p > 4096) fail_at("cycle point above 4096", point_pos);
          if (!seen.insert(static_cast<std::uint32_t>(p)).second) {
            fail_at("point repeated within one generator", point_pos);
          }
          cycle.push_back(static_cast<std::uint32_t>(p));
          degree = std::max<std::uint32_t>(degree, static_cast<std::uint32_t>(p));
        }
        cycles.push_back(std::move(cycle));
      }
      gens.push_back(std::move(cycles));
      if (!at_end() && peek() == ';') {
        ++pos_;
        continue;
      }
      break;
    }

    PermutationAtom atom;
    atom.degree = degree;
    std::set<std::vector<std::uint32_t>> images;
    for (const auto& cycles : gens) {
      std::vector<std::uint32_t> img(degree);
      std::iota(img.begin(), img.end(), 0U);
      for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
      }
      bool identity = true;
      for (std::uint32_t i = 0; i < degree; ++i) identity = identity && img[i] == i;
      if (!identity) images.insert(std::move(img));
    }
    atom.generators.assign(images.begin(), images.end());
    return atom;
  }

  TableAtom parse_table() {
    const std::size_t start = pos_;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a path after 'table:'");
    return load_table(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint64_t parse_number(const char* what) {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail_at(std::string("number out of range in ") + what, start);
    if (ec != std::errc() || ptr == first) fail_at(std::string("expected a number in ") + what, start);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  // Accepts the UTF-8 multiplication sign as an alternative to 'x'.
  bool consume_utf8_times() { return consume("\xC3\x97"); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string cycle_notation(const std::vector<std::uint32_t>& img) {
  std::string out;
  std::vector<bool> done(img.size(), false);
  for (std::uint32_t i = 0; i < img.size(); ++i) {
    if (done[i] || img[i] == i) continue;
    out += '(';
    std::uint32_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = img[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::uint32_t> subgroup_closure(const TableAtom& t, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> in(t.size(), false);
  std::vector<std::uint32_t> members{t.identity};
  in[t.identity] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto g : gens) {
      const auto next = t.table[members[i]][g];
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  return members;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return canonicalize(SpecParser(text).parse()); }

GroupSpec canonicalize(GroupSpec spec) {
  std::stable_sort(spec.atoms.begin(), spec.atoms.end());
  std::vector<FamilyAtom> merged;
  for (auto& atom : spec.atoms) {
    if (!merged.empty()) {
      auto* prev = std::get_if<FreeAbelianAtom>(&merged.back());
      const auto* cur = std::get_if<FreeAbelianAtom>(&atom);
      if (prev != nullptr && cur != nullptr) {
        prev->rank += cur->rank;
        continue;
      }
    }
    merged.push_back(std::move(atom));
  }
  spec.atoms = std::move(merged);
  return spec;
}

std::string render(const FamilyAtom& atom) {
  struct Visitor {
    std::string operator()(const CyclicAtom& a) const { return "Z/" + std::to_string(a.n); }
    std::string operator()(const FreeAbelianAtom& a) const {
      return a.rank == 1 ? std::string("Z") : "Z^" + std::to_string(a.rank);
    }
    std::string operator()(const DihedralAtom& a) const { return "D" + std::to_string(a.n); }
    std::string operator()(const InfiniteDihedralAtom&) const { return "Dinf"; }
    std::string operator()(const SymmetricAtom& a) const { return "S" + std::to_string(a.n); }
    std::string operator()(const HeisenbergAtom&) const { return "Heis"; }
    std::string operator()(const PermutationAtom& a) const {
      std::string out = "perm:";
      if (a.generators.empty()) {
        // Trivial permutation group; keep the degree visible so re-parsing is stable.
        return out + "(" + std::to_string(a.degree) + ")";
      }
      for (std::size_t i = 0; i < a.generators.size(); ++i) {
        if (i > 0) out += ';';
        out += cycle_notation(a.generators[i]);
      }
      return out;
    }
    std::string operator()(const TableAtom& a) const { return "table:" + a.source; }
  };
  return std::visit(Visitor{}, atom);
}

std::string render(const GroupSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
    if (i > 0) out += " x ";
    out += render(spec.atoms[i]);
  }
  return out;
}

TableAtom load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open table file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("table file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || doc.value("format", std::string{}) != "kfin-table/1") {
    throw InvalidArgument("table file '" + path + "' is missing \"format\": \"kfin-table/1\"");
  }
  TableAtom t;
  t.source = path;
  try {
    const auto size = doc.at("size").get<std::uint32_t>();
    t.identity = doc.at("identity").get<std::uint32_t>();
    t.table = doc.at("table").get<std::vector<std::vector<std::uint32_t>>>();
    if (t.table.size() != size) {
      throw InvalidArgument("table file '" + path + "': size field does not match the table");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("table file '" + path + "': " + e.what());
  }
  validate_table(t);
  return t;
}

std::vector<std::uint32_t> table_generating_set(const TableAtom& t) {
  std::vector<std::uint32_t> gens;
  std::vector<bool> covered(t.size(), false);
  covered[t.identity] = true;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (covered[i]) continue;
    gens.push_back(i);
    for (auto m : subgroup_closure(t, gens)) covered[m] = true;
  }
  return gens;
}

void validate_table(const TableAtom& t) {
  const std::size_t n = t.table.size();
  if (n == 0) throw InvalidArgument("invalid table: empty");
  if (t.identity >= n) throw InvalidArgument("invalid table: identity index out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (t.table[a].size() != n) throw InvalidArgument("invalid table: row " + std::to_string(a) + " has wrong length");
    for (auto v : t.table[a]) {
      if (v >= n) throw InvalidArgument("invalid table: entry out of range (closure fails)");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t.table[t.identity][a] != a || t.table[a][t.identity] != a) {
      throw InvalidArgument("invalid table: identity index is not a two-sided identity");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) {
      has_inverse = t.table[a][b] == t.identity && t.table[b][a] == t.identity;
    }
    if (!has_inverse) throw InvalidArgument("invalid table: element " + std::to_string(a) + " has no inverse");
  }
  const auto assoc_fails = [&](std::size_t a, std::size_t b, std::size_t c) {
    return t.table[t.table[a][b]][c] != t.table[a][t.table[b][c]];
  };
  if (n <= kFullAssociativityCheckLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (assoc_fails(a, b, c)) throw InvalidArgument("invalid table: not associative");
  } else {
    // Light's test: associativity on all (a, b, s) with s in a generating set suffices.
    for (auto s : table_generating_set(t))
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (assoc_fails(a, b, s)) throw InvalidArgument("invalid table: not associative");
  }
}

}  // namespace kfin
