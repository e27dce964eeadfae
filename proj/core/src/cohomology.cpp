#include "pgv/cohomology.hpp"

#include <random>

namespace pgv {

Vec Derivation::at(Elem g) const {
  const std::size_t d = module->dim();
  return Vec(values.begin() + std::ptrdiff_t(g * d), values.begin() + std::ptrdiff_t((g + 1) * d));
}

bool Derivation::satisfies_identity() const {
  const GroupTable& g = *module->acting();
  const std::uint32_t p = module->p();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      Vec lhs = at(g.mul(Elem(x), Elem(y)));
      Vec rhs = module->apply(at(Elem(x)), Elem(y));
      axpy(rhs, 1, at(Elem(y)), p);
      if (lhs != rhs) return false;
    }
  return true;
}

Vec TwoCocycle::at(Elem g, Elem h) const {
  const std::size_t d = module->dim(), o = module->acting()->order();
  const std::size_t base = (std::size_t(g) * o + h) * d;
  return Vec(values.begin() + std::ptrdiff_t(base), values.begin() + std::ptrdiff_t(base + d));
}

bool TwoCocycle::is_normalized() const {
  const std::size_t o = module->acting()->order();
  for (std::size_t x = 0; x < o; ++x)
    if (!is_zero(at(Elem(x), 0)) || !is_zero(at(0, Elem(x)))) return false;
  return true;
}

bool TwoCocycle::satisfies_identity() const {
  const GroupTable& g = *module->acting();
  const std::uint32_t p = module->p();
  const std::size_t o = g.order();
  for (std::size_t a = 0; a < o; ++a)
    for (std::size_t b = 0; b < o; ++b) {
      Vec fab = at(Elem(a), Elem(b));
      Elem ab = g.mul(Elem(a), Elem(b));
      for (std::size_t c = 0; c < o; ++c) {
        Vec lhs = module->apply(fab, Elem(c));
        axpy(lhs, 1, at(ab, Elem(c)), p);
        Vec rhs = at(Elem(b), Elem(c));
        axpy(rhs, 1, at(Elem(a), g.mul(Elem(b), Elem(c))), p);
        if (lhs != rhs) return false;
      }
    }
  return true;
}

FpSubspace CohomologySpace::z_space() const {
  const std::size_t o = module->acting()->order();
  std::size_t len = module->dim() * (degree == 1 ? o : o * o);
  return FpSubspace::span(module->p(), len, z_basis);
}

FpSubspace CohomologySpace::b_space() const {
  const std::size_t o = module->acting()->order();
  std::size_t len = module->dim() * (degree == 1 ? o : o * o);
  return FpSubspace::span(module->p(), len, b_basis);
}

Cochain coboundary_of_vector(const GModule& m, std::span<const Residue> v) {
  const std::size_t o = m.acting()->order(), d = m.dim();
  Cochain c(o * d, 0);
  for (std::size_t g = 0; g < o; ++g) {
    Vec img = m.apply(v, Elem(g));
    for (std::size_t i = 0; i < d; ++i) c[g * d + i] = fp_sub(img[i], v[i], m.p());
  }
  return c;
}

namespace {

CohomologySpace degree1(const ModulePtr& mp) {
  const GModule& m = *mp;
  const GroupTable& g = *m.acting();
  const std::uint32_t p = m.p();
  const std::size_t d = m.dim(), o = g.order();
  const auto& gens = g.generators();
  const std::size_t ng = gens.size(), U = ng * d;
  const auto& trav = g.traversal();

  // tau(x) = u * C[x], C[x] of shape U x d
  std::vector<FpMatrix> C(o, FpMatrix(p, U, d));
  auto selector = [&](std::size_t s) {
    FpMatrix e(p, U, d);
    for (std::size_t i = 0; i < d; ++i) e(s * d + i, i) = 1;
    return e;
  };
  std::vector<FpMatrix> sel;
  for (std::size_t s = 0; s < ng; ++s) sel.push_back(selector(s));
  for (std::size_t i = 1; i < trav.order.size(); ++i) {
    Elem x = trav.order[i];
    std::size_t s = trav.gen_used[x];
    C[x] = C[trav.parent[x]] * m.act(gens[s]) + sel[s];
  }
  EchelonBuilder eq(p, U);
  for (std::size_t x = 0; x < o && eq.rank() < U; ++x)
    for (std::size_t s = 0; s < ng; ++s) {
      Elem xs = g.mul(Elem(x), gens[s]);
      if (xs != 0 && trav.parent[xs] == x && trav.gen_used[xs] == s) continue;
      FpMatrix diff = C[xs] - (C[x] * m.act(gens[s]) + sel[s]);
      FpMatrix dt = diff.transpose();
      for (std::size_t c = 0; c < d; ++c) eq.insert(dt.row(c));
    }
  FpSubspace z_u = eq.rank() == 0 ? FpSubspace::full(p, U) : kernel(eq.to_rref());

  std::vector<Vec> b_vecs;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    Vec u(U, 0);
    for (std::size_t s = 0; s < ng; ++s) {
      Vec img = m.apply(e, gens[s]);
      for (std::size_t c = 0; c < d; ++c) u[s * d + c] = fp_sub(img[c], e[c], p);
    }
    b_vecs.push_back(std::move(u));
  }
  FpSubspace b_u = FpSubspace::span(p, U, b_vecs);
  if (!z_u.contains(b_u)) throw Error("coboundaries outside cocycles");
  std::vector<Vec> h_u = complement_in_order(b_u, z_u.basis());

  auto lift = [&](const Vec& u) {
    Cochain c(o * d, 0);
    for (std::size_t x = 0; x < o; ++x) {
      Vec v = C[x].left_apply(u);
      std::copy(v.begin(), v.end(), c.begin() + std::ptrdiff_t(x * d));
    }
    return c;
  };
  CohomologySpace h;
  h.degree = 1;
  h.module = mp;
  for (const auto& u : z_u.basis()) h.z_basis.push_back(lift(u));
  for (const auto& u : b_u.basis()) h.b_basis.push_back(lift(u));
  for (const auto& u : h_u) h.h_reps.push_back(lift(u));
  h.z_dim = z_u.dim();
  h.b_dim = b_u.dim();
  h.h_dim = h.z_dim - h.b_dim;
  return h;
}

CohomologySpace degree2(const ModulePtr& mp, std::size_t cap) {
  const GModule& m = *mp;
  const GroupTable& g = *m.acting();
  if (g.order() > cap) throw Error("order cap");
  const std::uint32_t p = m.p();
  const std::size_t d = m.dim(), o = g.order(), q = o - 1, U = q * q * d;
  const auto& gens = g.generators();
  auto var = [&](Elem a, Elem b, std::size_t c) -> std::int64_t {
    if (a == 0 || b == 0) return -1;
    return std::int64_t(((a - 1) * q + (b - 1)) * d + c);
  };
  EchelonBuilder eq(p, U);
  Vec row(U);
  for (std::size_t a = 1; a < o && eq.rank() < U; ++a)
    for (std::size_t b = 1; b < o; ++b)
      for (Elem s : gens) {
        Elem ab = g.mul(Elem(a), Elem(b)), bs = g.mul(Elem(b), s);
        const FpMatrix& act = m.act(s);
        for (std::size_t c = 0; c < d; ++c) {
          std::fill(row.begin(), row.end(), 0);
          // component c of f(a,b) act(s) + f(ab,s) - f(b,s) - f(a,bs)
          for (std::size_t k = 0; k < d; ++k) {
            auto v = var(Elem(a), Elem(b), k);
            if (act(k, c)) row[v] = fp_add(row[v], act(k, c), p);
          }
          if (auto v = var(ab, s, c); v >= 0) row[v] = fp_add(row[v], 1, p);
          if (auto v = var(Elem(b), s, c); v >= 0) row[v] = fp_sub(row[v], 1, p);
          if (auto v = var(Elem(a), bs, c); v >= 0) row[v] = fp_sub(row[v], 1, p);
          eq.insert(row);
        }
      }
  FpSubspace z_u = eq.rank() == 0 ? FpSubspace::full(p, U) : kernel(eq.to_rref());

  std::vector<Vec> b_vecs;
  for (std::size_t x = 1; x < o; ++x)
    for (std::size_t i = 0; i < d; ++i) {
      Vec e(d, 0);
      e[i] = 1;
      Vec u(U, 0);
      for (std::size_t h = 1; h < o; ++h) {
        Vec img = m.apply(e, Elem(h));
        for (std::size_t c = 0; c < d; ++c)
          if (img[c]) u[var(Elem(x), Elem(h), c)] = fp_add(u[var(Elem(x), Elem(h), c)], img[c], p);
      }
      for (std::size_t a = 1; a < o; ++a) {
        u[var(Elem(a), Elem(x), i)] = fp_add(u[var(Elem(a), Elem(x), i)], 1, p);
        // gh = x with g = a, h = a^-1 x
        Elem h = g.mul(g.inv(Elem(a)), Elem(x));
        if (h != 0) u[var(Elem(a), h, i)] = fp_sub(u[var(Elem(a), h, i)], 1, p);
      }
      b_vecs.push_back(std::move(u));
    }
  FpSubspace b_u = FpSubspace::span(p, U, b_vecs);
  if (!z_u.contains(b_u)) throw Error("coboundaries outside cocycles");
  std::vector<Vec> h_u = complement_in_order(b_u, z_u.basis());
  auto lift = [&](const Vec& u) {
    Cochain c(o * o * d, 0);
    for (std::size_t a = 1; a < o; ++a)
      for (std::size_t b = 1; b < o; ++b)
        for (std::size_t k = 0; k < d; ++k) c[(a * o + b) * d + k] = u[var(Elem(a), Elem(b), k)];
    return c;
  };
  CohomologySpace h;
  h.degree = 2;
  h.module = mp;
  for (const auto& u : z_u.basis()) h.z_basis.push_back(lift(u));
  for (const auto& u : b_u.basis()) h.b_basis.push_back(lift(u));
  for (const auto& u : h_u) h.h_reps.push_back(lift(u));
  h.z_dim = z_u.dim();
  h.b_dim = b_u.dim();
  h.h_dim = h.z_dim - h.b_dim;
  return h;
}

}  // namespace

CohomologySpace cohomology(const ModulePtr& m, int degree, std::size_t degree2_cap) {
  if (m->side() != Side::Right) throw Error("cohomology expects a right module");
  if (degree == 1) return degree1(m);
  if (degree == 2) return degree2(m, degree2_cap);
  throw Error("unsupported degree");
}

std::size_t h1_dim(const ModulePtr& m) { return cohomology(m, 1).h_dim; }

CohomologyDims cohomology_all_pairs(const ModulePtr& mp, int degree) {
  const GModule& m = *mp;
  const GroupTable& g = *m.acting();
  const std::uint32_t p = m.p();
  const std::size_t d = m.dim(), o = g.order();
  CohomologyDims out;
  if (degree == 1) {
    const std::size_t U = o * d;
    EchelonBuilder eq(p, U);
    Vec row(U);
    for (std::size_t a = 0; a < o; ++a)
      for (std::size_t b = 0; b < o; ++b) {
        const FpMatrix& act = m.act(Elem(b));
        Elem ab = g.mul(Elem(a), Elem(b));
        for (std::size_t c = 0; c < d; ++c) {
          std::fill(row.begin(), row.end(), 0);
          // tau(ab) - tau(a) act(b) - tau(b)
          row[ab * d + c] = fp_add(row[ab * d + c], 1, p);
          for (std::size_t k = 0; k < d; ++k) row[a * d + k] = fp_sub(row[a * d + k], act(k, c), p);
          row[b * d + c] = fp_sub(row[b * d + c], 1, p);
          eq.insert(row);
        }
      }
    out.z_dim = U - eq.rank();
    std::vector<Vec> bs;
    for (std::size_t i = 0; i < d; ++i) {
      Vec e(d, 0);
      e[i] = 1;
      bs.push_back(coboundary_of_vector(m, e));
    }
    out.b_dim = FpSubspace::span(p, U, bs).dim();
  } else if (degree == 2) {
    const std::size_t q = o - 1, U = q * q * d;
    auto var = [&](Elem a, Elem b, std::size_t c) -> std::int64_t {
      if (a == 0 || b == 0) return -1;
      return std::int64_t(((a - 1) * q + (b - 1)) * d + c);
    };
    EchelonBuilder eq(p, U);
    Vec row(U);
    for (std::size_t a = 1; a < o; ++a)
      for (std::size_t b = 1; b < o; ++b)
        for (std::size_t k3 = 1; k3 < o; ++k3) {
          Elem ab = g.mul(Elem(a), Elem(b)), bk = g.mul(Elem(b), Elem(k3));
          const FpMatrix& act = m.act(Elem(k3));
          for (std::size_t c = 0; c < d; ++c) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t k = 0; k < d; ++k) row[var(Elem(a), Elem(b), k)] = fp_add(row[var(Elem(a), Elem(b), k)], act(k, c), p);
            if (auto v = var(ab, Elem(k3), c); v >= 0) row[v] = fp_add(row[v], 1, p);
            if (auto v = var(Elem(b), Elem(k3), c); v >= 0) row[v] = fp_sub(row[v], 1, p);
            if (auto v = var(Elem(a), bk, c); v >= 0) row[v] = fp_sub(row[v], 1, p);
            eq.insert(row);
          }
        }
    out.z_dim = U - eq.rank();
    // B^2 is the image of normalized 1-cochains: its dimension is (o-1)d - dim Z^1_normalized
    CohomologyDims one = cohomology_all_pairs(mp, 1);
    out.b_dim = q * d - one.z_dim;
  } else {
    throw Error("unsupported degree");
  }
  out.h_dim = out.z_dim - out.b_dim;
  return out;
}

std::vector<Elem> derivation_to_automorphism(const GroupTable& g, const ConjugationModule& cm, const Cochain& tau) {
  const std::size_t d = cm.basis.size();
  std::vector<Elem> psi(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    Elem c = cm.quotient.image_of[x];
    Vec v(tau.begin() + std::ptrdiff_t(c * d), tau.begin() + std::ptrdiff_t((c + 1) * d));
    psi[x] = g.mul(Elem(x), cm.to_element(v));
  }
  return psi;
}

Cochain conjugation_derivation(const GroupTable& g, const ConjugationModule& cm, Elem x) {
  const std::size_t d = cm.basis.size(), m = cm.quotient.section.size();
  Cochain tau(m * d, 0);
  std::vector<char> set(m, 0);
  for (std::size_t y = 0; y < g.order(); ++y) {
    Elem val = g.mul(g.inv(Elem(y)), g.conj(Elem(y), x));
    if (cm.index_of[val] < 0) throw Error("not W-valued");
    Vec v = cm.to_vector(val);
    Elem c = cm.quotient.image_of[y];
    if (!set[c]) {
      std::copy(v.begin(), v.end(), tau.begin() + std::ptrdiff_t(c * d));
      set[c] = 1;
    } else if (!std::equal(v.begin(), v.end(), tau.begin() + std::ptrdiff_t(c * d))) {
      throw Error("not W-valued");
    }
  }
  return tau;
}

Cochain inflate(const Cochain& tau, std::size_t dim, const QuotientMap& coarse, const QuotientMap& fine) {
  const std::size_t m = fine.section.size();
  Cochain out(m * dim, 0);
  for (std::size_t c = 0; c < m; ++c) {
    Elem img = coarse.image_of[fine.section[c]];
    std::copy(tau.begin() + std::ptrdiff_t(img * dim), tau.begin() + std::ptrdiff_t((img + 1) * dim),
              out.begin() + std::ptrdiff_t(c * dim));
  }
  // the fine cosets must refine the coarse ones
  for (std::size_t x = 0; x < fine.image_of.size(); ++x)
    if (coarse.image_of[fine.section[fine.image_of[x]]] != coarse.image_of[x]) throw Error("quotients do not refine");
  return out;
}

std::optional<NoninnerWitness> derivation_span_noninner_probe(const GroupTable& g, const ConjugationModule& cm,
                                                              const CohomologySpace& h1) {
  for (std::size_t i = 0; i < h1.h_reps.size(); ++i) {
    auto psi = derivation_to_automorphism(g, cm, h1.h_reps[i]);
    if (!is_automorphism(g, psi)) continue;
    if (!is_inner(g, psi)) return NoninnerWitness{i, h1.h_reps[i], std::move(psi)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- sampling

std::optional<SampledModule> sample_module_where(const GroupPtr& g, std::size_t n, std::uint64_t seed,
                                                 const std::function<bool(std::size_t)>& accept,
                                                 std::size_t attempts) {
  auto amb = std::make_shared<const FreeBimodule>(g, n);
  const std::uint32_t p = g->p();
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
  // radical series of the ambient module, deepest last
  std::vector<FpSubspace> series;
  series.push_back(FpSubspace::full(p, amb->dim()));
  while (series.back().dim() > 0) {
    Submodule cur{amb->right_module(), series.back()};
    series.push_back(radical(cur));
  }
  for (std::size_t t = 0; t < attempts; ++t) {
    std::vector<Vec> gens;
    for (std::size_t l = 0; l < n; ++l) gens.push_back(amb->socle_vector(l));
    std::size_t extra = rng() % (n + 2);
    for (std::size_t k = 0; k < extra; ++k) {
      // any non-zero layer, the whole module included, so free summands can occur
      const FpSubspace& layer = series[rng() % (series.size() - 1)];
      Vec v(amb->dim(), 0);
      for (const auto& b : layer.basis()) axpy(v, Residue(rng() % p), b, p);
      gens.push_back(std::move(v));
    }
    Submodule q = generated_submodule(amb->right_module(), gens);
    std::size_t h = h1_dim(restrict_module(q));
    if (accept(h)) return SampledModule{amb, q, h, seed, t + 1};
  }
  return std::nullopt;
}

SampledModule sample_nG_module(const GroupPtr& g, std::size_t n, std::uint64_t seed) {
  auto r = sample_module_where(g, n, seed, [n](std::size_t h) { return h <= n; }, 64);
  if (!r) throw Error("no n-G module found within 64 attempts");
  return *r;
}

}  // namespace pgv
