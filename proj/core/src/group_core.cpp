#include "pgv/group_core.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

namespace pgv {

const PcWord* PcPresentation::power(std::size_t i) const {
  for (const auto& r : relations)
    if (!r.j && r.i == i) return &r.rhs;
  return nullptr;
}

const PcWord* PcPresentation::commutator(std::size_t i, std::size_t j) const {
  for (const auto& r : relations)
    if (r.j && r.i == i && *r.j == j) return &r.rhs;
  return nullptr;
}

std::string elem_name_from_exponents(const std::vector<std::uint32_t>& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!e[k]) continue;
    if (!s.empty()) s += '*';
    s += 'g' + std::to_string(k + 1);
    if (e[k] > 1) s += '^' + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

namespace {

bool is_power_of(std::size_t n, std::uint32_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

GroupPtr GroupTable::from_table(std::uint32_t p, std::size_t order, std::vector<Elem> mul,
                                std::vector<std::string> names, Verify verify, std::size_t order_cap) {
  require_prime(p);
  if (order > order_cap) throw Error("order cap");
  if (!is_power_of(order, p)) throw Error("order is not a power of p");
  if (mul.size() != order * order) throw Error("table size mismatch");
  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->p_ = p;
  g->order_ = order;
  g->mul_ = std::move(mul);
  for (std::size_t a = 0; a < order; ++a)
    if (g->mul(Elem(a), 0) != a || g->mul(0, Elem(a)) != a) throw Error("element 0 is not the identity");
  if (verify != Verify::None) {
    std::vector<char> seen(order);
    for (std::size_t a = 0; a < order; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < order; ++b) {
        Elem c = g->mul(Elem(a), Elem(b));
        if (c >= order || seen[c]) throw Error("table is not a Latin square");
        seen[c] = 1;
      }
    }
  }
  g->inv_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (g->mul(Elem(a), Elem(b)) == 0) {
        g->inv_[a] = Elem(b);
        break;
      }
  if (verify == Verify::Full || (verify == Verify::Sampled && order <= 512)) {
    if (!g->check_associativity(true)) throw Error("table is not associative");
  } else if (verify == Verify::Sampled) {
    if (!g->check_associativity(false)) throw Error("table is not associative");
  }
  g->eorder_.assign(order, 1);
  for (std::size_t a = 1; a < order; ++a) {
    std::size_t k = 1;
    Elem x = Elem(a);
    while (x != 0) {
      x = g->mul(x, Elem(a));
      ++k;
      if (k > order) throw Error("element of infinite order");
    }
    g->eorder_[a] = k;
  }
  if (names.empty()) {
    names.resize(order);
    for (std::size_t a = 0; a < order; ++a) names[a] = a == 0 ? "1" : "e" + std::to_string(a);
  }
  g->names_ = std::move(names);
  return g;
}

Elem GroupTable::power(Elem a, std::uint64_t k) const {
  k %= eorder_.empty() ? order_ : eorder_[a];
  Elem r = 0, base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool GroupTable::is_abelian() const {
  for (Elem a : generators())
    for (Elem b : generators())
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool GroupTable::check_associativity(bool exhaustive) const {
  const std::size_t n = order_;
  if (exhaustive) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Elem ab = mul(Elem(a), Elem(b));
        const Elem* rb = &mul_[b * n];
        const Elem* rab = &mul_[std::size_t(ab) * n];
        for (std::size_t c = 0; c < n; ++c)
          if (rab[c] != mul(Elem(a), rb[c])) return false;
      }
    return true;
  }
  std::mt19937_64 rng(0x5eed5eedULL ^ n);
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  const std::size_t samples = 10 * n * n;
  for (std::size_t i = 0; i < samples; ++i) {
    Elem a = Elem(d(rng)), b = Elem(d(rng)), c = Elem(d(rng));
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

std::uint64_t GroupTable::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  feed(p_);
  feed(std::uint32_t(order_));
  for (Elem e : mul_) feed(e);
  return h;
}

std::string GroupTable::fingerprint_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint()));
  return buf;
}

GroupPtr GroupTable::opposite() const {
  std::vector<Elem> m(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) m[a * order_ + b] = mul(Elem(b), Elem(a));
  return from_table(p_, order_, std::move(m), names_, Verify::None, kMaxOrderCap);
}

const std::vector<Elem>& GroupTable::generators() const {
  if (!gens_ready_) {
    Subgroup phi = frattini(*this);
    std::vector<Elem> chosen;
    std::vector<Elem> seeds = phi.members();
    Subgroup current = phi;
    for (std::size_t x = 0; x < order_ && current.size() < order_; ++x) {
      if (current.contains(Elem(x))) continue;
      chosen.push_back(Elem(x));
      seeds.push_back(Elem(x));
      current = subgroup_closure(*this, seeds);
    }
    gens_ = chosen;
    gens_ready_ = true;
  }
  return gens_;
}

const GroupTable::Traversal& GroupTable::traversal() const {
  if (!trav_ready_) {
    const auto& gens = generators();
    Traversal t;
    t.parent.assign(order_, 0);
    t.gen_used.assign(order_, 0);
    std::vector<char> seen(order_, 0);
    seen[0] = 1;
    t.order.push_back(0);
    for (std::size_t idx = 0; idx < t.order.size(); ++idx) {
      Elem e = t.order[idx];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Elem x = mul(e, gens[s]);
        if (!seen[x]) {
          seen[x] = 1;
          t.parent[x] = e;
          t.gen_used[x] = s;
          t.order.push_back(x);
        }
      }
    }
    trav_ = std::move(t);
    trav_ready_ = true;
  }
  return trav_;
}

GroupPtr from_pc_presentation(const PcPresentation& pres, std::size_t order_cap) {
  const std::uint32_t p = pres.p;
  require_prime(p);
  const std::size_t n = pres.n;
  std::size_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= p;
    if (order > order_cap) throw Error("order cap");
  }
  for (const auto& r : pres.relations) {
    std::size_t lead = r.i;
    if (r.i >= n) throw Error("bad word");
    if (r.j) {
      if (*r.j >= r.i) throw Error("bad word");
    }
    for (auto [k, e] : r.rhs) {
      if (k <= lead || k >= n || e == 0 || e >= p) throw Error("bad word");
    }
  }
  std::vector<std::size_t> pw(n + 1, 1);  // pw[k] = p^k
  for (std::size_t k = 1; k <= n; ++k) pw[k] = pw[k - 1] * p;

  std::vector<Elem> sub{0};  // level n: trivial group
  for (std::size_t lv = n; lv-- > 0;) {
    const std::size_t sz = pw[n - lv - 1];
    auto smul = [&](Elem a, Elem b) { return sub[std::size_t(a) * sz + b]; };
    auto gen_at = [&](std::size_t k) { return Elem(pw[n - 1 - k]); };
    auto eval = [&](const PcWord* w) {
      Elem r = 0;
      if (!w) return r;
      for (auto [k, e] : *w)
        for (std::uint32_t t = 0; t < e; ++t) r = smul(r, gen_at(k));
      return r;
    };
    Elem w = eval(pres.power(lv));
    std::vector<Elem> phi_gen(n, 0);
    for (std::size_t k = lv + 1; k < n; ++k) phi_gen[k] = smul(gen_at(k), eval(pres.commutator(k, lv)));
    std::vector<std::vector<Elem>> phipow(p, std::vector<Elem>(sz));
    for (std::size_t y = 0; y < sz; ++y) {
      phipow[0][y] = Elem(y);
      Elem r = 0;
      for (std::size_t k = lv + 1; k < n; ++k) {
        std::size_t e = (y / pw[n - 1 - k]) % p;
        for (std::size_t t = 0; t < e; ++t) r = smul(r, phi_gen[k]);
      }
      phipow[1 % p][y] = r;
    }
    for (std::uint32_t b = 2; b < p; ++b)
      for (std::size_t y = 0; y < sz; ++y) phipow[b][y] = phipow[1][phipow[b - 1][y]];
    const std::size_t big = sz * p;
    std::vector<Elem> table(big * big);
    for (std::size_t x = 0; x < big; ++x) {
      std::size_t a = x / sz, y = x % sz;
      for (std::size_t z = 0; z < big; ++z) {
        std::size_t b = z / sz, zz = z % sz;
        Elem rest = smul(phipow[b][y], Elem(zz));
        std::size_t c = a + b;
        if (c >= p) {
          c -= p;
          rest = smul(w, rest);
        }
        table[x * big + z] = Elem(c * sz + rest);
      }
    }
    sub = std::move(table);
  }
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::vector<std::uint32_t> e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = std::uint32_t((x / pw[n - 1 - k]) % p);
    names[x] = elem_name_from_exponents(e);
  }
  try {
    return GroupTable::from_table(p, order, std::move(sub), std::move(names), GroupTable::Verify::Sampled,
                                  order_cap);
  } catch (const Error& e) {
    if (std::string(e.what()) == "order cap") throw;
    throw Error("inconsistent presentation");
  }
}

// ---------------------------------------------------------------- subgroups

Subgroup::Subgroup(const GroupTable& g, std::vector<Elem> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  bitmap_.assign(g.order(), false);
  for (Elem e : members_) {
    if (e >= g.order()) throw Error("element out of range");
    bitmap_[e] = true;
  }
  normal_ = true;
  for (std::size_t x = 0; x < g.order() && normal_; ++x)
    for (Elem h : members_)
      if (!bitmap_[g.conj(h, Elem(x))]) {
        normal_ = false;
        break;
      }
}

bool Subgroup::subset_of(const Subgroup& o) const {
  for (Elem e : members_)
    if (!o.contains(e)) return false;
  return true;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
  return members_ < o.members_;
}

Subgroup subgroup_closure(const GroupTable& g, const std::vector<Elem>& seeds) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> list{0};
  seen[0] = 1;
  std::vector<Elem> gens;
  for (Elem s : seeds)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem s : gens) {
      Elem x = g.mul(list[i], s);
      if (!seen[x]) {
        seen[x] = 1;
        list.push_back(x);
      }
    }
  return Subgroup(g, std::move(list));
}

Subgroup trivial_subgroup(const GroupTable& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const GroupTable& g) {
  std::vector<Elem> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = Elem(i);
  return Subgroup(g, std::move(all));
}

Subgroup join(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> s = a.members();
  s.insert(s.end(), b.members().begin(), b.members().end());
  return subgroup_closure(g, s);
}

Subgroup meet(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> s;
  for (Elem e : a.members())
    if (b.contains(e)) s.push_back(e);
  return Subgroup(g, std::move(s));
}

Subgroup center(const GroupTable& g) {
  std::vector<Elem> z;
  const auto& gens = g.generators();
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : gens)
      if (g.mul(Elem(x), s) != g.mul(s, Elem(x))) {
        ok = false;
        break;
      }
    if (ok) z.push_back(Elem(x));
  }
  return Subgroup(g, std::move(z));
}

Subgroup centralizer(const GroupTable& g, const Subgroup& s) {
  std::vector<Elem> c;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem h : s.members())
      if (g.mul(Elem(x), h) != g.mul(h, Elem(x))) {
        ok = false;
        break;
      }
    if (ok) c.push_back(Elem(x));
  }
  return Subgroup(g, std::move(c));
}

Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& x, const Subgroup& y) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> seeds;
  for (Elem a : x.members())
    for (Elem b : y.members()) {
      Elem c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  return subgroup_closure(g, seeds);
}

Subgroup derived_subgroup(const GroupTable& g) {
  Subgroup all = whole_group(g);
  return commutator_subgroup(g, all, all);
}

Subgroup agemo1(const GroupTable& g, const Subgroup& s) {
  std::vector<Elem> seeds;
  for (Elem x : s.members()) seeds.push_back(g.power(x, g.p()));
  return subgroup_closure(g, seeds);
}

Subgroup omega1(const GroupTable& g, const Subgroup& s) {
  std::vector<Elem> seeds;
  for (Elem x : s.members())
    if (g.power(x, g.p()) == 0) seeds.push_back(x);
  return subgroup_closure(g, seeds);
}

Subgroup frattini(const GroupTable& g) {
  Subgroup all = whole_group(g);
  return join(g, derived_subgroup(g), agemo1(g, all));
}

std::vector<Subgroup> maximal_subgroups(const GroupTable& g) {
  std::vector<Subgroup> out;
  if (g.order() == 1) return out;
  for (auto& s : normal_subgroups(g, kMaxOrderCap))
    if (s.size() * g.p() == g.order()) out.push_back(s);
  return out;
}

Subgroup frattini_by_maximals(const GroupTable& g) {
  Subgroup acc = whole_group(g);
  for (const auto& m : maximal_subgroups(g)) acc = meet(g, acc, m);
  return acc;
}

ISet iset(const GroupTable& g, const Subgroup& a) {
  Subgroup z = center(g);
  ISet r;
  for (Elem x : a.members())
    if (z.contains(g.power(x, g.p()))) r.members.push_back(x);
  r.generated = subgroup_closure(g, r.members);
  r.closed = r.generated.size() == r.members.size();
  if (r.closed) r.subgroup = r.generated;
  return r;
}

Subgroup iset_subgroup(const GroupTable& g, const Subgroup& a) {
  ISet r = iset(g, a);
  if (!r.closed) throw Error("not a subgroup");
  return *r.subgroup;
}

bool is_abelian(const GroupTable& g, const Subgroup& s) {
  for (Elem a : s.members())
    for (Elem b : s.members())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_elementary_abelian(const GroupTable& g, const Subgroup& s) {
  for (Elem a : s.members())
    if (g.power(a, g.p()) != 0) return false;
  return is_abelian(g, s);
}

bool is_cyclic(const GroupTable& g, const Subgroup& s) {
  for (Elem a : s.members())
    if (g.elem_order(a) == s.size()) return true;
  return false;
}

bool quotient_is_cyclic(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  const std::size_t index = a.size() / b.size();
  if (index == 1) return true;
  for (Elem x : a.members()) {
    std::size_t k = 1;
    Elem y = x;
    while (!b.contains(y)) {
      y = g.mul(y, x);
      ++k;
    }
    if (k == index) return true;
  }
  return false;
}

std::size_t rank_of_elementary(const GroupTable& g, const Subgroup& s) {
  std::size_t r = 0, n = s.size();
  while (n > 1) {
    n /= g.p();
    ++r;
  }
  return r;
}

std::size_t generator_rank(const GroupTable& g, const Subgroup& s) {
  if (s.size() == 1) return 0;
  std::vector<Elem> seeds;
  for (Elem a : s.members())
    for (Elem b : s.members()) seeds.push_back(g.commutator(a, b));
  for (Elem a : s.members()) seeds.push_back(g.power(a, g.p()));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  Subgroup phi = subgroup_closure(g, seeds);
  std::size_t idx = s.size() / phi.size(), r = 0;
  while (idx > 1) {
    idx /= g.p();
    ++r;
  }
  return r;
}

std::vector<Subgroup> normal_subgroups(const GroupTable& g, const Subgroup& within, std::size_t order_cap) {
  if (g.order() > order_cap) throw Error("order cap");
  std::vector<Subgroup> found{trivial_subgroup(g)};
  std::set<std::vector<Elem>> keys{found[0].members()};
  const std::uint32_t p = g.p();
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    Subgroup k = found[idx];  // copy: found grows
    std::vector<char> covered(g.order(), 0);
    for (Elem e : k.members()) covered[e] = 1;
    for (Elem x : within.members()) {
      if (covered[x]) continue;
      if (!k.contains(g.power(x, p))) continue;
      bool central = true;
      for (Elem s : g.generators())
        if (!k.contains(g.commutator(x, s))) {
          central = false;
          break;
        }
      if (!central) continue;
      std::vector<Elem> mem = k.members();
      Elem xp = x;
      for (std::uint32_t t = 1; t < p; ++t) {
        for (Elem e : k.members()) mem.push_back(g.mul(e, xp));
        xp = g.mul(xp, x);
      }
      Subgroup n(g, mem);
      for (Elem e : n.members()) covered[e] = 1;
      if (keys.insert(n.members()).second) found.push_back(std::move(n));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Subgroup> normal_subgroups(const GroupTable& g, std::size_t order_cap) {
  return normal_subgroups(g, whole_group(g), order_cap);
}

// ---------------------------------------------------------------- maps

GroupMap::GroupMap(GroupPtr source, GroupPtr target, std::vector<Elem> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  const auto& s = *source_;
  const auto& t = *target_;
  if (image_.size() != s.order()) throw Error("not a homomorphism");
  for (Elem e : image_)
    if (e >= t.order()) throw Error("not a homomorphism");
  if (image_[0] != 0) throw Error("not a homomorphism");
  for (std::size_t x = 0; x < s.order(); ++x)
    for (Elem g : s.generators())
      if (image_[s.mul(Elem(x), g)] != t.mul(image_[x], image_[g])) throw Error("not a homomorphism");
}

bool GroupMap::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  std::vector<char> seen(target_->order(), 0);
  for (Elem e : image_) {
    if (seen[e]) return false;
    seen[e] = 1;
  }
  return true;
}

std::optional<std::vector<Elem>> extend_from_generators(const GroupTable& src, const GroupTable& dst,
                                                        const std::vector<Elem>& gen_images) {
  const auto& gens = src.generators();
  if (gen_images.size() != gens.size()) throw Error("generator image count mismatch");
  const auto& t = src.traversal();
  std::vector<Elem> img(src.order(), 0);
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    Elem x = t.order[i];
    img[x] = dst.mul(img[t.parent[x]], gen_images[t.gen_used[x]]);
  }
  for (std::size_t x = 0; x < src.order(); ++x)
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (img[src.mul(Elem(x), gens[s])] != dst.mul(img[x], gen_images[s])) return std::nullopt;
  return img;
}

QuotientMap quotient(const GroupPtr& gp, const Subgroup& n) {
  const GroupTable& g = *gp;
  if (!n.normal()) throw Error("not normal");
  QuotientMap q;
  q.source = gp;
  q.kernel = n;
  const Elem unset = Elem(-1);
  q.image_of.assign(g.order(), unset);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (q.image_of[x] != unset) continue;
    Elem c = Elem(q.section.size());
    q.section.push_back(Elem(x));
    for (Elem k : n.members()) q.image_of[g.mul(Elem(x), k)] = c;
  }
  const std::size_t m = q.section.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = q.image_of[g.mul(q.section[a], q.section[b])];
  std::vector<std::string> names(m);
  for (std::size_t a = 0; a < m; ++a) names[a] = g.name(q.section[a]) + "N";
  names[0] = "1";
  q.target = GroupTable::from_table(g.p(), m, std::move(table), std::move(names), GroupTable::Verify::None,
                                    kMaxOrderCap);
  return q;
}

bool is_automorphism(const GroupTable& g, const std::vector<Elem>& f) {
  if (f.size() != g.order() || f[0] != 0) return false;
  std::vector<char> seen(g.order(), 0);
  for (Elem e : f) {
    if (e >= g.order() || seen[e]) return false;
    seen[e] = 1;
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    for (Elem s : g.generators())
      if (f[g.mul(Elem(x), s)] != g.mul(f[x], f[s])) return false;
  return true;
}

std::optional<Elem> is_inner(const GroupTable& g, const std::vector<Elem>& f) {
  if (!is_automorphism(g, f)) throw Error("not automorphism");
  Subgroup z = center(g);
  std::vector<char> done(g.order(), 0);
  for (std::size_t h = 0; h < g.order(); ++h) {
    if (done[h]) continue;
    for (Elem c : z.members()) done[g.mul(Elem(h), c)] = 1;
    bool ok = true;
    for (Elem s : g.generators())
      if (f[s] != g.conj(s, Elem(h))) {
        ok = false;
        break;
      }
    if (ok) return Elem(h);
  }
  return std::nullopt;
}

std::size_t map_order(const GroupTable& g, const std::vector<Elem>& f) {
  std::vector<Elem> cur = f;
  std::size_t k = 1;
  auto is_id = [](const std::vector<Elem>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != i) return false;
    return true;
  };
  while (!is_id(cur)) {
    for (auto& e : cur) e = f[e];
    ++k;
    if (k > 1000000) throw Error("map is not a permutation");
  }
  (void)g;
  return k;
}

GroupPtr direct_product(const GroupTable& a, const GroupTable& b) {
  if (a.p() != b.p()) throw Error("direct product of groups for different primes");
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = Elem(a.mul(Elem(x / nb), Elem(y / nb)) * nb + b.mul(Elem(x % nb), Elem(y % nb)));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) names[x] = "(" + a.name(Elem(x / nb)) + "," + b.name(Elem(x % nb)) + ")";
  return GroupTable::from_table(a.p(), n, std::move(t), std::move(names), GroupTable::Verify::None, kMaxOrderCap);
}

// ---------------------------------------------------------------- isomorphism

std::vector<std::size_t> group_invariants(const GroupTable& g) {
  std::vector<std::size_t> inv{g.p(), g.order()};
  Subgroup z = center(g);
  Subgroup all = whole_group(g);
  inv.push_back(z.size());
  inv.push_back(derived_subgroup(g).size());
  inv.push_back(frattini(g).size());
  inv.push_back(g.generators().size());
  inv.push_back(omega1(g, all).size());
  inv.push_back(agemo1(g, all).size());
  std::map<std::size_t, std::size_t> by_order, central_by_order;
  for (std::size_t x = 0; x < g.order(); ++x) {
    ++by_order[g.elem_order(Elem(x))];
    if (z.contains(Elem(x))) ++central_by_order[g.elem_order(Elem(x))];
  }
  for (auto [o, c] : by_order) {
    inv.push_back(o);
    inv.push_back(c);
  }
  inv.push_back(0);
  for (auto [o, c] : central_by_order) {
    inv.push_back(o);
    inv.push_back(c);
  }
  inv.push_back(0);
  // commuting pairs count = order * number of conjugacy classes
  std::size_t commuting = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (g.mul(Elem(x), Elem(y)) == g.mul(Elem(y), Elem(x))) ++commuting;
  inv.push_back(commuting);
  // squares / p-th power map fibre sizes
  std::map<std::size_t, std::size_t> fibres;
  std::vector<std::size_t> cnt(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) ++cnt[g.power(Elem(x), g.p())];
  for (auto c : cnt) ++fibres[c];
  for (auto [a, b] : fibres) {
    inv.push_back(a);
    inv.push_back(b);
  }
  return inv;
}

std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order() || a.p() != b.p()) return std::nullopt;
  if (group_invariants(a) != group_invariants(b)) return std::nullopt;
  const auto& gens = a.generators();
  const std::size_t d = gens.size();
  if (b.generators().size() != d) return std::nullopt;
  QuotientMap qb = quotient(std::shared_ptr<const GroupTable>(&b, [](const GroupTable*) {}), frattini(b));
  std::vector<Elem> img(d);
  std::optional<std::vector<Elem>> result;
  std::function<void(std::size_t, std::vector<Elem>)> rec = [&](std::size_t i, std::vector<Elem> span_mod_phi) {
    if (result) return;
    if (i == d) {
      auto m = extend_from_generators(a, b, img);
      if (m) {
        std::vector<char> seen(b.order(), 0);
        for (Elem e : *m) {
          if (seen[e]) return;
          seen[e] = 1;
        }
        result = m;
      }
      return;
    }
    for (std::size_t y = 0; y < b.order(); ++y) {
      if (b.elem_order(Elem(y)) != a.elem_order(gens[i])) continue;
      Elem cy = qb.image_of[y];
      if (std::find(span_mod_phi.begin(), span_mod_phi.end(), cy) != span_mod_phi.end()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (b.elem_order(b.mul(img[j], Elem(y))) != a.elem_order(a.mul(gens[j], gens[i]))) ok = false;
        else if (b.elem_order(b.commutator(img[j], Elem(y))) != a.elem_order(a.commutator(gens[j], gens[i])))
          ok = false;
      }
      if (!ok) continue;
      img[i] = Elem(y);
      // extend the span of images in b / Phi(b)
      std::vector<Elem> next = span_mod_phi;
      for (Elem s : span_mod_phi) {
        Elem t = s;
        for (std::uint32_t k = 1; k < a.p(); ++k) {
          t = qb.target->mul(t, cy);
          next.push_back(t);
        }
      }
      rec(i + 1, next);
      if (result) return;
    }
  };
  rec(0, std::vector<Elem>{0});
  return result;
}

PcPresentationOf pc_presentation_of(const GroupTable& g, const std::string& name) {
  const std::uint32_t p = g.p();
  const Subgroup all = whole_group(g);
  std::vector<Subgroup> series{all};
  while (series.back().size() > 1) {
    const Subgroup& cur = series.back();
    series.push_back(join(g, commutator_subgroup(g, cur, all), agemo1(g, cur)));
  }
  std::vector<Elem> gens;
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    Subgroup acc = series[k + 1];
    for (Elem x : series[k].members()) {
      if (acc.contains(x)) continue;
      gens.push_back(x);
      std::vector<Elem> seeds = acc.members();
      seeds.push_back(x);
      acc = subgroup_closure(g, seeds);
    }
  }
  const std::size_t n = gens.size();
  // normal forms g_1^e_1 ... g_n^e_n, exponent vectors big-endian
  std::vector<Elem> to_source(g.order());
  std::vector<std::int64_t> index_of(g.order(), -1);
  for (std::size_t idx = 0; idx < g.order(); ++idx) {
    Elem x = 0;
    std::size_t rest = idx, scale = g.order();
    for (std::size_t k = 0; k < n; ++k) {
      scale /= p;
      x = g.mul(x, g.power(gens[k], rest / scale));
      rest %= scale;
    }
    if (index_of[x] >= 0) throw Error("not a pc generating sequence");
    index_of[x] = std::int64_t(idx);
    to_source[idx] = x;
  }
  auto word = [&](Elem x) {
    PcWord w;
    std::size_t idx = std::size_t(index_of[x]), scale = g.order();
    for (std::size_t k = 0; k < n; ++k) {
      scale /= p;
      if (auto e = std::uint32_t(idx / scale % p)) w.emplace_back(k, e);
    }
    return w;
  };
  PcPresentationOf out;
  out.presentation.name = name;
  out.presentation.p = p;
  out.presentation.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    PcWord w = word(g.power(gens[i], p));
    if (!w.empty()) out.presentation.relations.push_back({i, std::nullopt, std::move(w)});
    for (std::size_t j = 0; j < i; ++j) {
      PcWord c = word(g.commutator(gens[i], gens[j]));
      if (!c.empty()) out.presentation.relations.push_back({i, j, std::move(c)});
    }
  }
  out.to_source = std::move(to_source);
  GroupPtr back = from_pc_presentation(out.presentation, g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (out.to_source[back->mul(a, b)] != g.mul(out.to_source[a], out.to_source[b]))
        throw Error("pc presentation does not reproduce the table");
  return out;
}

}  // namespace pgv
