#include "pgv/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

namespace pgv {

namespace detail {
extern const char* const kOrder16Data;
extern const char* const kOrder81Data;
extern const char* const kSpecialData;
}  // namespace detail

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

bool CatalogEntry::has_tag(std::string_view t) const {
  return std::binary_search(tags.begin(), tags.end(), std::string(t));
}

// ---------------------------------------------------------------- parser

namespace {

struct Token {
  std::string text;
  std::size_t col = 0;  // 1-based
};

struct Cursor {
  std::string_view line;
  std::size_t pos = 0;
  std::size_t lineno = 0;

  void skip_ws() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
  std::size_t col() const { return pos + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(lineno, col(), msg); }

  Token word() {
    skip_ws();
    Token t{"", col()};
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) && line[pos] != ':') {
      t.text += line[pos];
      ++pos;
    }
    return t;
  }
  std::uint64_t number(const char* what) {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
      v = v * 10 + std::uint64_t(line[pos] - '0');
      if (v > (1ULL << 40)) fail(std::string(what) + " too large");
      ++pos;
    }
    if (pos == start) fail(std::string("expected ") + what);
    return v;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= line.size() || line[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

/// word := 1 | term (* term)* ; term := g<k> | g<k>^<e>, with lead < k <= n and 1 <= e < p.
PcWord parse_word(Cursor& c, std::size_t lead, std::size_t n, std::uint32_t p) {
  PcWord w;
  c.skip_ws();
  if (c.pos < c.line.size() && c.line[c.pos] == '1') {
    ++c.pos;
    if (!c.done()) c.fail("unexpected text after identity word");
    return w;
  }
  while (true) {
    c.skip_ws();
    if (c.pos >= c.line.size() || c.line[c.pos] != 'g') c.fail("expected generator 'g<k>'");
    std::size_t gen_col = c.col();
    ++c.pos;
    std::uint64_t k = c.number("generator index");
    if (k < 1 || k > n) throw ParseError(c.lineno, gen_col, "generator index out of range");
    if (k <= lead) throw ParseError(c.lineno, gen_col, "word must use generators after g" + std::to_string(lead));
    std::uint64_t e = 1;
    c.skip_ws();
    if (c.pos < c.line.size() && c.line[c.pos] == '^') {
      ++c.pos;
      std::size_t ecol = c.col();
      e = c.number("exponent");
      if (e < 1 || e >= p) throw ParseError(c.lineno, ecol, "exponent must satisfy 1 <= e < p");
    }
    w.emplace_back(std::size_t(k - 1), std::uint32_t(e));
    if (c.done()) break;
    c.expect('*');
  }
  return w;
}

}  // namespace

std::string format_presentation(const PcPresentation& pres) {
  auto word = [](const PcWord& w) {
    std::string s;
    for (auto [k, e] : w) {
      if (!s.empty()) s += " * ";
      s += "g" + std::to_string(k + 1);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? std::string("1") : s;
  };
  std::ostringstream os;
  os << "group " << pres.name << "\np " << pres.p << "\ngens " << pres.n << "\n";
  for (const auto& r : pres.relations) {
    if (r.j)
      os << "comm " << r.i + 1 << " " << *r.j + 1 << " : " << word(r.rhs) << "\n";
    else
      os << "pow " << r.i + 1 << " : " << word(r.rhs) << "\n";
  }
  os << "end\n";
  return os.str();
}

std::vector<CatalogEntry> parse_presentations(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  std::optional<CatalogEntry> cur;
  std::size_t group_line = 0;
  bool have_p = false, have_n = false;
  std::set<std::pair<std::size_t, std::size_t>> seen;  // (i, j+1) or (i, 0) for powers
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Cursor c{line, 0, lineno};
    if (c.done()) {
      if (end == text.size()) break;
      continue;
    }
    Token kw = c.word();
    if (kw.text == "group") {
      if (cur) throw ParseError(lineno, kw.col, "missing 'end' for group " + cur->name);
      Token name = c.word();
      if (name.text.empty()) c.fail("expected group name");
      if (!c.done()) c.fail("unexpected text after group name");
      if (names.count(name.text)) throw ParseError(lineno, name.col, "duplicate name: " + name.text);
      cur = CatalogEntry{};
      cur->name = name.text;
      cur->presentation.name = name.text;
      group_line = lineno;
      have_p = have_n = false;
      seen.clear();
    } else if (!cur) {
      throw ParseError(lineno, kw.col, "expected 'group'");
    } else if (kw.text == "p") {
      std::size_t col = c.col();
      auto v = c.number("prime");
      if (v > (1u << 15) || !is_prime(std::uint32_t(v))) throw ParseError(lineno, col + 1, "p must be prime");
      if (!c.done()) c.fail("unexpected text after p");
      cur->presentation.p = std::uint32_t(v);
      have_p = true;
    } else if (kw.text == "gens") {
      auto v = c.number("generator count");
      if (v < 1 || v > 64) c.fail("generator count out of range");
      if (!c.done()) c.fail("unexpected text after gens");
      cur->presentation.n = std::size_t(v);
      have_n = true;
    } else if (kw.text == "pow" || kw.text == "comm") {
      if (!have_p || !have_n) throw ParseError(lineno, kw.col, "'p' and 'gens' must precede relations");
      const std::size_t n = cur->presentation.n;
      c.skip_ws();
      std::size_t icol = c.col();
      auto i = c.number("generator index");
      if (i < 1 || i > n) throw ParseError(lineno, icol, "generator index out of range");
      PcRelation rel;
      rel.i = std::size_t(i - 1);
      std::size_t lead = std::size_t(i);
      if (kw.text == "comm") {
        c.skip_ws();
        std::size_t jcol = c.col();
        auto j = c.number("generator index");
        if (j < 1 || j >= i) throw ParseError(lineno, jcol, "commutator needs i > j >= 1");
        rel.j = std::size_t(j - 1);
      }
      c.expect(':');
      std::pair<std::size_t, std::size_t> key{rel.i, rel.j ? *rel.j + 1 : 0};
      if (seen.count(key)) throw ParseError(lineno, kw.col, "duplicate relation");
      seen.insert(key);
      rel.rhs = parse_word(c, lead, n, cur->presentation.p);
      cur->presentation.relations.push_back(std::move(rel));
    } else if (kw.text == "end") {
      if (!c.done()) c.fail("unexpected text after end");
      if (!have_p) throw ParseError(lineno, kw.col, "missing 'p'");
      if (!have_n) throw ParseError(lineno, kw.col, "missing 'gens'");
      std::size_t order = 1;
      for (std::size_t k = 0; k < cur->presentation.n; ++k) {
        order *= cur->presentation.p;
        if (order > (std::size_t(1) << 40)) throw ParseError(lineno, kw.col, "order too large");
      }
      cur->order = order;
      names.insert(cur->name);
      out.push_back(std::move(*cur));
      cur.reset();
    } else {
      throw ParseError(lineno, kw.col, "unknown keyword '" + kw.text + "'");
    }
    if (end == text.size()) break;
  }
  if (cur) throw ParseError(group_line, 1, "missing 'end' for group " + cur->name);
  return out;
}

// ---------------------------------------------------------------- presentations

PcPresentation cyclic_presentation(std::uint32_t p, std::size_t k) { return abelian_presentation(p, {k}); }

PcPresentation abelian_presentation(std::uint32_t p, const std::vector<std::size_t>& exps) {
  PcPresentation pr;
  pr.p = p;
  std::string name;
  std::size_t base = 0;
  for (std::size_t e : exps) {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < e; ++i) q *= p;
    name += (name.empty() ? "C" : "xC") + std::to_string(q);
    for (std::size_t i = 0; i + 1 < e; ++i) pr.relations.push_back({base + i, std::nullopt, {{base + i + 1, 1}}});
    base += e;
  }
  pr.n = base;
  pr.name = name;
  return pr;
}

namespace {

/// r^e for r = g_{first}, with g_{first+k} = r^{p^k}.
PcWord cyclic_word(std::uint64_t e, std::uint32_t p, std::size_t m, std::size_t first) {
  PcWord w;
  for (std::size_t k = 0; k < m; ++k) {
    std::uint32_t d = std::uint32_t(e % p);
    e /= p;
    if (d) w.emplace_back(first + k, d);
  }
  return w;
}

}  // namespace

PcPresentation metacyclic_presentation(const std::string& name, std::uint32_t p, std::size_t m, std::uint64_t t,
                                       std::uint64_t u) {
  PcPresentation pr;
  pr.name = name;
  pr.p = p;
  pr.n = m + 1;
  std::uint64_t rm = 1;
  for (std::size_t k = 0; k < m; ++k) rm *= p;
  if (t % rm) pr.relations.push_back({0, std::nullopt, cyclic_word(t % rm, p, m, 1)});
  for (std::size_t k = 0; k + 1 < m; ++k) pr.relations.push_back({k + 1, std::nullopt, {{k + 2, 1}}});
  // [r^{p^k}, s] = r^{(u-1) p^k}
  std::uint64_t pk = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::uint64_t e = ((u + rm - 1) % rm) * pk % rm;
    if (e) pr.relations.push_back({k + 1, std::size_t(0), cyclic_word(e, p, m, 1)});
    pk *= p;
  }
  return pr;
}

PcPresentation direct_product_presentation(const PcPresentation& a, const PcPresentation& b) {
  if (a.p != b.p) throw Error("direct product needs equal primes");
  PcPresentation pr;
  pr.name = a.name + "x" + b.name;
  pr.p = a.p;
  pr.n = a.n + b.n;
  pr.relations = a.relations;
  for (auto r : b.relations) {
    r.i += a.n;
    if (r.j) *r.j += a.n;
    for (auto& t : r.rhs) t.first += a.n;
    pr.relations.push_back(std::move(r));
  }
  return pr;
}

// ---------------------------------------------------------------- tags

namespace {

std::size_t nilpotency_class(const GroupTable& g) {
  Subgroup cur = whole_group(g);
  Subgroup all = cur;
  std::size_t c = 0;
  while (cur.size() > 1) {
    cur = commutator_subgroup(g, cur, all);
    ++c;
  }
  return c;
}

}  // namespace

void assign_tags(CatalogEntry& e, const GroupTable& g) {
  std::set<std::string> tags(e.tags.begin(), e.tags.end());
  e.order = g.order();
  const bool ab = g.is_abelian();
  tags.insert(ab ? "abelian" : "nonabelian");
  Subgroup all = whole_group(g);
  if (is_cyclic(g, all)) tags.insert("cyclic");
  if (is_elementary_abelian(g, all)) tags.insert("elementary");
  if (!ab) {
    Subgroup z = center(g), d = derived_subgroup(g), f = frattini(g);
    if (z.size() == g.p() && z == d && d == f) tags.insert("extraspecial");
    std::size_t n = 0;
    for (std::size_t o = 1; o < g.order(); o *= g.p()) ++n;
    if (n >= 3 && nilpotency_class(g) == n - 1) tags.insert("maxclass");
  }
  static const std::regex dih("D[0-9]+"), quat("Q[0-9]+"), semi("SD[0-9]+"), modu("M[0-9]+"), heis("He[0-9]+");
  if (std::regex_match(e.name, dih)) tags.insert("dihedral");
  if (std::regex_match(e.name, quat)) tags.insert("quaternion");
  if (std::regex_match(e.name, semi)) tags.insert("semidihedral");
  if (std::regex_match(e.name, modu)) tags.insert("modular");
  if (std::regex_match(e.name, heis)) tags.insert("heisenberg");
  if (e.name.find('x') != std::string::npos) tags.insert("product");
  e.tags.assign(tags.begin(), tags.end());
}

// ---------------------------------------------------------------- groups

namespace {

std::string presentation_key(const PcPresentation& pr) {
  std::ostringstream os;
  os << pr.name << '|' << pr.p << '|' << pr.n;
  for (const auto& r : pr.relations) {
    os << '|' << r.i << ',' << (r.j ? std::to_string(*r.j) : "-") << ':';
    for (auto [k, x] : r.rhs) os << k << '^' << x << ' ';
  }
  return os.str();
}

std::mutex& group_cache_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::string, GroupPtr>& group_cache() {
  static std::map<std::string, GroupPtr> c;
  return c;
}

}  // namespace

GroupPtr entry_group(const CatalogEntry& e, std::size_t order_cap) {
  if (e.order > order_cap) throw Error("order cap");
  std::string key = presentation_key(e.presentation);
  {
    std::lock_guard<std::mutex> lock(group_cache_mutex());
    auto it = group_cache().find(key);
    if (it != group_cache().end()) return it->second;
  }
  GroupPtr g = from_pc_presentation(e.presentation, std::max(order_cap, e.order));
  std::lock_guard<std::mutex> lock(group_cache_mutex());
  return group_cache().emplace(key, g).first->second;
}

// ---------------------------------------------------------------- builtin

namespace {

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<CatalogEntry> build_builtin() {
  std::vector<PcPresentation> pres;
  // abelian groups of order <= 64 (orders 16 and 81 come from the data files)
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    std::uint64_t q = p;
    for (std::size_t k = 1; q <= 64; ++k, q *= p) {
      if (q == 16) continue;
      std::vector<std::vector<std::size_t>> parts;
      std::vector<std::size_t> cur;
      partitions(k, k, cur, parts);
      for (auto& pt : parts) pres.push_back(abelian_presentation(p, pt));
    }
  }
  for (std::uint32_t p = 11; p <= 61; ++p)
    if (is_prime(p)) pres.push_back(cyclic_presentation(p, 1));

  auto pow2 = [](std::size_t k) { return std::uint64_t(1) << k; };
  std::map<std::string, PcPresentation> fam;
  // 2-groups of maximal class, |G| = 2^n with <r> of order 2^(n-1)
  for (std::size_t n = 3; n <= 6; ++n) {
    std::size_t m = n - 1;
    std::string o = std::to_string(pow2(n));
    if (n != 4) {
      fam["D" + o] = metacyclic_presentation("D" + o, 2, m, 0, pow2(m) - 1);
      fam["Q" + o] = metacyclic_presentation("Q" + o, 2, m, pow2(m - 1), pow2(m) - 1);
      if (n >= 5) fam["SD" + o] = metacyclic_presentation("SD" + o, 2, m, 0, pow2(m - 1) - 1);
    }
  }
  // modular groups M_{p^n}: s^p = 1, s^-1 r s = r^(1 + p^(n-2))
  auto add_modular = [&](std::uint32_t p, std::size_t n) {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < n; ++i) q *= p;
    std::uint64_t u = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) u *= p;
    std::string name = "M" + std::to_string(q);
    fam[name] = metacyclic_presentation(name, p, n - 1, 0, u + 1);
  };
  add_modular(2, 5);
  add_modular(2, 6);
  add_modular(3, 3);
  add_modular(3, 5);
  add_modular(5, 3);
  add_modular(7, 3);
  // extraspecial groups of exponent p
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PcPresentation he;
    he.name = "He" + std::to_string(p * p * p);
    he.p = p;
    he.n = 3;
    he.relations.push_back({1, std::size_t(0), {{2, 1}}});
    fam[he.name] = he;
  }
  for (auto& [name, pr] : fam) pres.push_back(pr);

  // direct products; the order-16 ones are in the data file
  auto data16 = parse_presentations(detail::kOrder16Data);
  auto pick16 = [&](const std::string& name) -> PcPresentation {
    for (auto& e : data16)
      if (e.name == name) return e.presentation;
    throw Error("missing data group " + name);
  };
  auto ab = [](std::vector<std::size_t> exps) { return abelian_presentation(2, exps); };
  const PcPresentation d8 = fam.at("D8"), q8 = fam.at("Q8");
  const std::vector<std::pair<PcPresentation, PcPresentation>> prods = {
      {d8, ab({2})},           {d8, ab({1, 1})},        {q8, ab({2})},           {q8, ab({1, 1})},
      {pick16("D16"), ab({1})}, {pick16("Q16"), ab({1})}, {pick16("SD16"), ab({1})}, {pick16("M16"), ab({1})},
      {d8, ab({3})},           {d8, ab({2, 1})},        {d8, ab({1, 1, 1})},     {q8, ab({3})},
      {q8, ab({2, 1})},        {q8, ab({1, 1, 1})},     {pick16("D16"), ab({2})}, {pick16("D16"), ab({1, 1})},
      {pick16("Q16"), ab({2})}, {pick16("SD16"), ab({2})}, {pick16("M16"), ab({2})}, {fam.at("D32"), ab({1})},
      {fam.at("Q32"), ab({1})}, {fam.at("SD32"), ab({1})}, {fam.at("M32"), ab({1})}, {d8, d8},
      {d8, q8},                {q8, q8},
  };
  for (const auto& [a, b] : prods) pres.push_back(direct_product_presentation(a, b));

  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  auto add = [&](CatalogEntry e, const std::vector<std::string>& extra) {
    if (!names.insert(e.name).second) throw Error("duplicate name: " + e.name);
    e.tags = extra;
    e.tags.push_back("builtin");
    std::size_t order = 1;
    for (std::size_t i = 0; i < e.presentation.n; ++i) order *= e.presentation.p;
    e.order = order;
    assign_tags(e, *entry_group(e));
    out.push_back(std::move(e));
  };
  for (auto& pr : pres) add(CatalogEntry{pr.name, pr, {}, 1}, {});
  for (auto [data, label] : {std::pair{detail::kOrder16Data, "order16#"}, std::pair{detail::kOrder81Data, "order81#"}}) {
    auto entries = parse_presentations(data);
    for (std::size_t k = 0; k < entries.size(); ++k)
      add(entries[k], {"datafile", label + std::to_string(k + 1)});
  }
  for (auto& e : parse_presentations(detail::kSpecialData)) add(e, {"special"});
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.presentation.p < b.presentation.p;
  });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> cat = build_builtin();
  return cat;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  if (path.empty() || path == "builtin") return builtin_catalog();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto entries = parse_presentations(ss.str());
  for (auto& e : entries) {
    if (e.order > kMaxOrderCap) {
      e.tags = {"large"};
      continue;
    }
    assign_tags(e, *entry_group(e));
  }
  return entries;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat, std::string_view name) {
  for (const auto& e : cat)
    if (e.name == name) return &e;
  return nullptr;
}

// ---------------------------------------------------------------- tag expressions

TagExpr TagExpr::parse(std::string_view text) {
  TagExpr ex;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t k = s.find(sep, start);
      parts.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
      if (k == std::string_view::npos) break;
      start = k + 1;
    }
    return parts;
  };
  if (trim(text).empty()) return ex;
  for (auto clause : split(text, '|')) {
    std::vector<Term> terms;
    for (auto raw : split(clause, '&')) {
      std::string_view t = trim(raw);
      Term term;
      while (!t.empty() && t.front() == '!') {
        term.negated = !term.negated;
        t = trim(t.substr(1));
      }
      if (t.empty()) throw Error("bad tag expression: empty term in '" + std::string(text) + "'");
      auto number = [&](std::string_view s) {
        s = trim(s);
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw Error("bad tag expression: expected a number in '" + std::string(t) + "'");
        return std::size_t(std::stoull(std::string(s)));
      };
      static const std::pair<const char*, Term::Kind> ops[] = {
          {"order<=", Term::OrderLe}, {"order>=", Term::OrderGe}, {"order<", Term::OrderLt},
          {"order>", Term::OrderGt},  {"order=", Term::OrderEq},  {"p=", Term::PEq},
      };
      bool done = false;
      for (auto [prefix, kind] : ops) {
        std::string_view pre(prefix);
        if (t.substr(0, pre.size()) == pre) {
          term.kind = kind;
          term.value = number(t.substr(pre.size()));
          done = true;
          break;
        }
      }
      if (!done) {
        if (t.substr(0, 5) == "name=") {
          term.kind = Term::NameEq;
          term.text = std::string(trim(t.substr(5)));
        } else if (t == "all") {
          term.kind = Term::All;
        } else {
          for (char c : t)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '#' || c == '_' || c == '-'))
              throw Error("bad tag expression: unexpected character in '" + std::string(t) + "'");
          term.kind = Term::Tag;
          term.text = std::string(t);
        }
      }
      terms.push_back(std::move(term));
    }
    ex.clauses_.push_back(std::move(terms));
  }
  return ex;
}

bool TagExpr::matches(const CatalogEntry& e) const {
  for (const auto& clause : clauses_) {
    bool ok = true;
    for (const auto& t : clause) {
      bool v = false;
      switch (t.kind) {
        case Term::Tag: v = e.has_tag(t.text); break;
        case Term::All: v = true; break;
        case Term::OrderLe: v = e.order <= t.value; break;
        case Term::OrderGe: v = e.order >= t.value; break;
        case Term::OrderLt: v = e.order < t.value; break;
        case Term::OrderGt: v = e.order > t.value; break;
        case Term::OrderEq: v = e.order == t.value; break;
        case Term::PEq: v = e.presentation.p == t.value; break;
        case Term::NameEq: v = e.name == t.text; break;
      }
      if (v == t.negated) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<const CatalogEntry*> select_entries(const std::vector<CatalogEntry>& cat, const TagExpr& expr) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : cat)
    if (expr.matches(e)) out.push_back(&e);
  return out;
}

}  // namespace pgv
