// Brute-force reference computations shared by the unit and acceptance tests.
#pragma once

#include <functional>
#include <set>
#include <vector>

#include "pgv/catalog.hpp"
#include "pgv/cohomology.hpp"
#include "pgv/extensions.hpp"
#include "pgv/gmodule.hpp"

namespace oracle {

using namespace pgv;

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Calls f on every vector of F_p^len, in lexicographic order; f returns false to stop.
inline void for_each_vector(std::uint32_t p, std::size_t len, const std::function<bool(const Vec&)>& f) {
  Vec v(len, 0);
  while (true) {
    if (!f(v)) return;
    std::size_t i = 0;
    while (i < len && ++v[i] == p) v[i++] = 0;
    if (i == len) return;
  }
}

/// Every function G -> M satisfying tau(gh) = tau(g) h + tau(h), checked on all pairs.
inline std::vector<Cochain> enumerate_derivations(const GModule& m) {
  const GroupTable& g = *m.acting();
  const std::size_t d = m.dim(), o = g.order();
  const std::uint32_t p = m.p();
  std::vector<Cochain> out;
  for_each_vector(p, o * d, [&](const Vec& f) {
    auto at = [&](Elem x) { return std::span<const Residue>(f.data() + x * d, d); };
    for (Elem a = 0; a < o; ++a)
      for (Elem b = 0; b < o; ++b) {
        Vec lhs = m.apply(at(a), b);
        axpy(lhs, 1, at(b), p);
        auto ab = at(g.mul(a, b));
        if (!std::equal(lhs.begin(), lhs.end(), ab.begin())) return true;
      }
    out.push_back(f);
    return true;
  });
  return out;
}

/// Every cochain G x G -> M (normalized or not) satisfying the 2-cocycle identity.
inline std::size_t count_two_cocycles(const GModule& m, bool normalized_only) {
  const GroupTable& g = *m.acting();
  const std::size_t d = m.dim(), o = g.order();
  const std::uint32_t p = m.p();
  std::size_t count = 0;
  for_each_vector(p, o * o * d, [&](const Vec& f) {
    auto at = [&](Elem a, Elem b) { return std::span<const Residue>(f.data() + (a * o + b) * d, d); };
    if (normalized_only)
      for (Elem a = 0; a < o; ++a)
        if (!is_zero(at(0, a)) || !is_zero(at(a, 0))) return true;
    for (Elem a = 0; a < o; ++a)
      for (Elem b = 0; b < o; ++b)
        for (Elem k = 0; k < o; ++k) {
          Vec lhs = m.apply(at(a, b), k);
          axpy(lhs, 1, at(g.mul(a, b), k), p);
          Vec rhs(at(b, k).begin(), at(b, k).end());
          axpy(rhs, 1, at(a, g.mul(b, k)), p);
          if (lhs != rhs) return true;
        }
    ++count;
    return true;
  });
  return count;
}

/// Distinct coboundaries of all 1-cochains (normalized ones when sigma(1) = 0 is imposed).
inline std::size_t count_two_coboundaries(const GModule& m, bool normalized_only) {
  const std::size_t d = m.dim(), o = m.acting()->order();
  std::set<Cochain> seen;
  for_each_vector(m.p(), o * d, [&](const Vec& s) {
    if (normalized_only && !is_zero(std::span<const Residue>(s.data(), d))) return true;
    seen.insert(coboundary2(m, s));
    return true;
  });
  return seen.size();
}

/// Center by definition.
inline std::vector<Elem> brute_center(const GroupTable& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

/// Whether f is conjugation by some element, by trying them all.
inline bool brute_inner(const GroupTable& g, const std::vector<Elem>& f) {
  for (Elem h = 0; h < g.order(); ++h) {
    bool all = true;
    for (Elem x = 0; x < g.order() && all; ++x) all = f[x] == g.conj(x, h);
    if (all) return true;
  }
  return false;
}

inline bool brute_automorphism(const GroupTable& g, const std::vector<Elem>& f) {
  std::vector<bool> hit(g.order(), false);
  for (Elem x = 0; x < g.order(); ++x) {
    if (f[x] >= g.order() || hit[f[x]]) return false;
    hit[f[x]] = true;
    for (Elem y = 0; y < g.order(); ++y)
      if (f[g.mul(x, y)] != g.mul(f[x], f[y])) return false;
  }
  return true;
}

/// Smallest k >= 1 with f^k = id.
inline std::size_t brute_map_order(const std::vector<Elem>& f) {
  std::vector<Elem> cur = f;
  for (std::size_t k = 1;; ++k) {
    bool id = true;
    for (std::size_t x = 0; x < cur.size() && id; ++x) id = cur[x] == x;
    if (id) return k;
    for (auto& v : cur) v = f[v];
  }
}

/// Modules used by the solver-versus-enumeration sweep: trivial of dims 1 and 2, the
/// regular module, its radical powers and their quotients.
inline std::vector<ModulePtr> small_modules(const GroupPtr& g) {
  std::vector<ModulePtr> out{GModule::trivial(g, 1), GModule::trivial(g, 2)};
  FreeBimodule fb(g, 1);
  const ModulePtr& reg = fb.right_module();
  out.push_back(reg);
  Submodule whole = whole_module(reg);
  for (std::size_t k = 1; k <= 3; ++k) {
    Submodule jk = make_submodule(reg, radical_power(*reg, k));
    if (jk.dim() == 0) break;
    out.push_back(restrict_module(jk));
    out.push_back(quotient_module(whole, jk));
  }
  return out;
}

}  // namespace oracle
