#include "pgv/extensions.hpp"

namespace pgv {

Subgroup Extension::kernel() const { return Subgroup(*group, kernel_embed); }

Subgroup Extension::kernel_part(const FpSubspace& sub) const {
  const std::uint32_t p = group->p();
  const std::size_t t = kernel_module->dim();
  std::vector<Elem> members;
  for (std::size_t idx = 0; idx < kernel_size; ++idx)
    if (sub.contains(index_to_vec(idx, t, p))) members.push_back(kernel_embed[idx]);
  return Subgroup(*group, std::move(members));
}

Extension build_extension(const TwoCocycle& f, std::size_t order_cap) {
  const GModule& m = *f.module;
  if (m.side() != Side::Right) throw Error("not a cocycle");
  if (!f.is_normalized() || !f.satisfies_identity()) throw Error("not a cocycle");
  const GroupTable& g = *m.acting();
  const std::uint32_t p = m.p();
  const std::size_t t = m.dim(), o = g.order();
  std::size_t ks = 1;
  for (std::size_t i = 0; i < t; ++i) ks *= p;
  const std::size_t total = ks * o;
  if (total > order_cap) throw Error("order cap");
  std::vector<Vec> vecs(ks);
  for (std::size_t a = 0; a < ks; ++a) vecs[a] = index_to_vec(a, t, p);
  // a act(h) as index table
  std::vector<std::size_t> acted(ks * o);
  for (std::size_t h = 0; h < o; ++h)
    for (std::size_t a = 0; a < ks; ++a) acted[h * ks + a] = vec_to_index(m.apply(vecs[a], Elem(h)), p);
  std::vector<std::size_t> fidx(o * o);
  for (std::size_t a = 0; a < o; ++a)
    for (std::size_t b = 0; b < o; ++b) fidx[a * o + b] = vec_to_index(f.at(Elem(a), Elem(b)), p);
  auto add = [&](std::size_t x, std::size_t y) {
    Vec s = vecs[x];
    axpy(s, 1, vecs[y], p);
    return vec_to_index(s, p);
  };
  std::vector<std::size_t> addt(ks * ks);
  for (std::size_t x = 0; x < ks; ++x)
    for (std::size_t y = 0; y < ks; ++y) addt[x * ks + y] = add(x, y);
  std::vector<Elem> table(total * total);
  for (std::size_t e1 = 0; e1 < total; ++e1) {
    std::size_t a = e1 % ks, gi = e1 / ks;
    for (std::size_t e2 = 0; e2 < total; ++e2) {
      std::size_t b = e2 % ks, h = e2 / ks;
      std::size_t v = addt[addt[acted[h * ks + a] * ks + b] * ks + fidx[gi * o + h]];
      table[e1 * total + e2] = Elem(v + ks * g.mul(Elem(gi), Elem(h)));
    }
  }
  std::vector<std::string> names(total);
  for (std::size_t e = 0; e < total; ++e) {
    std::string a;
    for (Residue c : vecs[e % ks]) a += std::to_string(c);
    names[e] = e == 0 ? "1" : "(" + a + "," + g.name(Elem(e / ks)) + ")";
  }
  Extension ext;
  ext.group = GroupTable::from_table(p, total, std::move(table), std::move(names),
                                     total <= 512 ? GroupTable::Verify::Full : GroupTable::Verify::Sampled,
                                     order_cap);
  ext.base = m.acting();
  ext.kernel_module = f.module;
  ext.kernel_size = ks;
  ext.eta.resize(total);
  for (std::size_t e = 0; e < total; ++e) ext.eta[e] = Elem(e / ks);
  ext.kernel_embed.resize(ks);
  for (std::size_t a = 0; a < ks; ++a) ext.kernel_embed[a] = Elem(a);
  ext.section.resize(o);
  for (std::size_t h = 0; h < o; ++h) ext.section[h] = Elem(ks * h);
  return ext;
}

Cochain coboundary2(const GModule& m, const Cochain& sigma) {
  const GroupTable& g = *m.acting();
  const std::size_t o = g.order(), d = m.dim();
  const std::uint32_t p = m.p();
  Cochain out(o * o * d, 0);
  for (std::size_t a = 0; a < o; ++a)
    for (std::size_t b = 0; b < o; ++b) {
      Vec sa(sigma.begin() + std::ptrdiff_t(a * d), sigma.begin() + std::ptrdiff_t((a + 1) * d));
      Vec v = m.apply(sa, Elem(b));
      Elem ab = g.mul(Elem(a), Elem(b));
      for (std::size_t c = 0; c < d; ++c) {
        Residue r = fp_add(v[c], sigma[b * d + c], p);
        out[(a * o + b) * d + c] = fp_sub(r, sigma[ab * d + c], p);
      }
    }
  return out;
}

std::vector<Elem> equivalence_map(const Extension& e1, const Extension& e2, const Cochain& sigma) {
  const GModule& m = *e1.kernel_module;
  const std::uint32_t p = m.p();
  if (e1.kernel_size != e2.kernel_size || e1.base->order() != e2.base->order()) throw Error("not equivalent");
  const std::size_t ks = e1.kernel_size, t = m.dim(), o = e1.base->order();
  std::vector<Elem> phi(e1.group->order());
  for (std::size_t e = 0; e < phi.size(); ++e) {
    Vec a = index_to_vec(e % ks, t, p);
    std::size_t g = e / ks;
    for (std::size_t c = 0; c < t; ++c) a[c] = fp_add(a[c], sigma[g * t + c], p);
    phi[e] = Elem(vec_to_index(a, p) + ks * g);
  }
  (void)o;
  for (std::size_t x = 0; x < phi.size(); ++x)
    for (Elem s : e1.group->generators())
      if (phi[e1.group->mul(Elem(x), s)] != e2.group->mul(phi[x], phi[s])) throw Error("not equivalent");
  return phi;
}

ExtensionQuotient quotient_by_kernel_part(const Extension& e, const Subgroup& part) {
  ExtensionQuotient q;
  q.quotient = quotient(e.group, part);
  q.to_base.resize(q.quotient.section.size());
  for (std::size_t c = 0; c < q.to_base.size(); ++c) q.to_base[c] = e.eta[q.quotient.section[c]];
  return q;
}

// ---------------------------------------------------------------- transfer maps

Vec TransferPair::e_vector(std::size_t tuple, std::size_t l) const {
  Vec v(top->dim(), 0);
  const std::size_t o = top->group()->order();
  std::copy(kernel_factors[tuple].begin(), kernel_factors[tuple].end(), v.begin() + std::ptrdiff_t(l * o));
  return v;
}

FpSubspace TransferPair::down_kernel() const { return left_kernel(down); }

FpSubspace TransferPair::up_image() const { return row_space(up); }

TransferPair transfer_maps(const Extension& ext, std::size_t n) {
  TransferPair tp;
  tp.ext = &ext;
  tp.n = n;
  tp.top = std::make_shared<const FreeBimodule>(ext.group, n);
  tp.bottom = std::make_shared<const FreeBimodule>(ext.base, n);
  const GroupTable& e = *ext.group;
  const std::uint32_t p = e.p();
  const std::size_t oe = e.order(), og = ext.base->order(), t = ext.kernel_module->dim();
  tp.down = FpMatrix(p, n * oe, n * og);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t x = 0; x < oe; ++x) tp.down(l * oe + x, l * og + ext.eta[x]) = 1;

  // a_k - 1 for the kernel basis vectors
  std::vector<Vec> am1(t, Vec(oe, 0));
  for (std::size_t k = 0; k < t; ++k) {
    Vec ek(t, 0);
    ek[k] = 1;
    Elem a = ext.kernel_embed[vec_to_index(ek, p)];
    am1[k][a] = 1;
    am1[k][0] = fp_sub(am1[k][0], 1, p);
  }
  auto alg_pow = [&](const Vec& x, std::size_t k) {
    Vec r(oe, 0);
    r[0] = 1;
    for (std::size_t i = 0; i < k; ++i) r = group_algebra_mul(e, r, x);
    return r;
  };
  std::vector<std::vector<Vec>> powers(t);
  for (std::size_t k = 0; k < t; ++k)
    for (std::size_t i = 0; i < p; ++i) powers[k].push_back(alg_pow(am1[k], i));
  std::size_t count = 1;
  for (std::size_t k = 0; k < t; ++k) count *= p;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Vec digits = index_to_vec(idx, t, p);
    std::vector<std::uint32_t> tuple(digits.begin(), digits.end());
    Vec f(oe, 0);
    f[0] = 1;
    for (std::size_t k = 0; k < t; ++k) f = group_algebra_mul(e, f, powers[k][tuple[k]]);
    tp.tuples.push_back(tuple);
    tp.kernel_factors.push_back(std::move(f));
  }
  tp.norm_element = tp.kernel_factors.back();  // tuple (p-1, ..., p-1)
  tp.up = FpMatrix(p, n * og, n * oe);
  for (std::size_t g = 0; g < og; ++g) {
    Vec s(oe, 0);
    s[ext.section[g]] = 1;
    Vec img = group_algebra_mul(e, s, tp.norm_element);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t x = 0; x < oe; ++x) tp.up(l * og + g, l * oe + x) = img[x];
  }
  return tp;
}

namespace {

FpSubspace two_sided_closure(const FreeBimodule& b, const std::vector<Vec>& gens) {
  EchelonBuilder eb(b.p(), b.dim());
  for (const auto& v : gens) eb.insert(v);
  const auto& g = b.group()->generators();
  for (std::size_t i = 0; i < eb.rows().size(); ++i) {
    Vec row = eb.rows()[i];
    for (Elem s : g) {
      eb.insert(b.right_mul(row, s));
      eb.insert(b.left_mul(s, row));
    }
  }
  return FpSubspace::from_builder(eb);
}

}  // namespace

FiltrationLayer filtration(const TransferPair& tp, std::size_t m) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < tp.tuples.size(); ++i) {
    std::size_t w = 0;
    for (auto x : tp.tuples[i]) w += x;
    if (w < m) continue;
    for (std::size_t l = 0; l < tp.n; ++l) gens.push_back(tp.e_vector(i, l));
  }
  FiltrationLayer layer;
  layer.m = m;
  layer.two_sided = two_sided_closure(*tp.top, gens);
  layer.left_generated = generated_submodule(tp.top->left_module(), gens).carrier;
  layer.right_generated = generated_submodule(tp.top->right_module(), gens).carrier;
  return layer;
}

LambdaExpansion lambda_expansion(const TransferPair& tp, std::span<const Residue> y, bool right_variant) {
  const Extension& ext = *tp.ext;
  const GroupTable& e = *ext.group;
  const std::uint32_t p = e.p();
  const std::size_t oe = e.order(), og = ext.base->order(), nt = tp.tuples.size();
  FpMatrix cols(p, oe, nt * og);
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t g = 0; g < og; ++g) {
      Vec x(oe, 0);
      x[ext.section[g]] = 1;
      Vec prod = right_variant ? group_algebra_mul(e, tp.kernel_factors[i], x)
                               : group_algebra_mul(e, x, tp.kernel_factors[i]);
      for (std::size_t r = 0; r < oe; ++r) cols(r, i * og + g) = prod[r];
    }
  LambdaExpansion out;
  out.basis = rank(cols) == oe && nt * og == oe;
  out.exists = true;
  out.zero_tuple_vanishes = true;
  for (std::size_t l = 0; l < tp.n; ++l) {
    auto sol = solve(cols, y.subspan(l * oe, oe));
    if (!sol) {
      out.exists = false;
      out.lambda.clear();
      return out;
    }
    for (std::size_t g = 0; g < og; ++g)
      if ((*sol)[g] != 0) out.zero_tuple_vanishes = false;  // tuple 0 is listed first
    out.lambda.push_back(std::move(*sol));
  }
  return out;
}

}  // namespace pgv
