#include "pgv/gmodule.hpp"

#include <algorithm>

namespace pgv {

namespace {

FpMatrix minus_identity(const FpMatrix& a) {
  FpMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) = fp_sub(r(i, i), 1, a.p());
  return r;
}

}  // namespace

GModule::GModule(GroupPtr base, Side side, std::size_t dim, std::vector<FpMatrix> act, bool verify)
    : base_(std::move(base)), side_(side), dim_(dim), act_(std::move(act)) {
  if (dim_ > kModuleDimCap) throw Error("module dimension cap");
  acting_ = side_ == Side::Right ? base_ : base_->opposite();
  const auto& g = *acting_;
  if (act_.size() != g.order()) throw Error("one action matrix per group element required");
  for (const auto& m : act_)
    if (m.rows() != dim_ || m.cols() != dim_ || m.p() != g.p()) throw Error("action matrix has wrong shape");
  if (verify) {
    if (!(act_[0] == FpMatrix::identity(g.p(), dim_))) throw Error("identity does not act trivially");
    for (std::size_t x = 0; x < g.order(); ++x)
      for (Elem s : g.generators())
        if (!(act_[g.mul(Elem(x), s)] == act_[x] * act_[s])) throw Error("action is not a homomorphism");
  }
}

ModulePtr GModule::trivial(GroupPtr g, std::size_t dim) {
  std::vector<FpMatrix> act(g->order(), FpMatrix::identity(g->p(), dim));
  return std::make_shared<const GModule>(g, Side::Right, dim, std::move(act), false);
}

bool ModuleHom::is_equivariant() const {
  for (Elem s : source->generators())
    if (!(source->act(s) * matrix == matrix * target->act(s))) return false;
  return true;
}

bool ModuleHom::is_injective() const { return rank(matrix) == source->dim(); }

bool is_submodule(const GModule& m, const FpSubspace& s) {
  for (const auto& b : s.basis())
    for (Elem g : m.generators())
      if (!s.contains(m.apply(b, g))) return false;
  return true;
}

Submodule whole_module(const ModulePtr& m) { return {m, FpSubspace::full(m->p(), m->dim())}; }

Submodule generated_submodule(const ModulePtr& m, const std::vector<Vec>& vectors) {
  EchelonBuilder b(m->p(), m->dim());
  for (const auto& v : vectors) b.insert(v);
  for (std::size_t i = 0; i < b.rows().size(); ++i) {
    Vec row = b.rows()[i];
    for (Elem g : m->generators()) b.insert(m->apply(row, g));
  }
  return {m, FpSubspace::from_builder(b)};
}

Submodule make_submodule(const ModulePtr& m, FpSubspace s) {
  if (!is_submodule(*m, s)) throw Error("not a submodule");
  return {m, std::move(s)};
}

FpSubspace fixed_points_under(const GModule& m, const std::vector<Elem>& elems) {
  const std::size_t d = m.dim();
  FpMatrix stacked(m.p(), d, d * elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    FpMatrix a = minus_identity(m.act(elems[k]));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked(i, k * d + j) = a(i, j);
  }
  if (elems.empty()) return FpSubspace::full(m.p(), d);
  return left_kernel(stacked);
}

FpSubspace fixed_points(const GModule& m) { return fixed_points_under(m, m.generators()); }

FpSubspace fixed_points(const Submodule& s) {
  const GModule& m = *s.ambient;
  const auto& basis = s.carrier.basis();
  const std::size_t k = basis.size(), d = m.dim();
  const auto& gens = m.generators();
  if (k == 0) return FpSubspace(m.p(), d);
  FpMatrix stacked(m.p(), k, d * gens.size());
  for (std::size_t t = 0; t < gens.size(); ++t) {
    FpMatrix a = minus_identity(m.act(gens[t]));
    for (std::size_t i = 0; i < k; ++i) {
      Vec img = a.left_apply(basis[i]);
      for (std::size_t j = 0; j < d; ++j) stacked(i, t * d + j) = img[j];
    }
  }
  FpSubspace coeffs = left_kernel(stacked);
  std::vector<Vec> out;
  for (const auto& c : coeffs.basis()) {
    Vec v(d, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (c[i]) axpy(v, c[i], basis[i], m.p());
    out.push_back(std::move(v));
  }
  return FpSubspace::span(m.p(), d, out);
}

FpSubspace radical(const GModule& m) {
  EchelonBuilder b(m.p(), m.dim());
  for (Elem g : m.generators()) {
    FpMatrix a = minus_identity(m.act(g));
    for (std::size_t i = 0; i < a.rows(); ++i) b.insert(a.row(i));
  }
  return FpSubspace::from_builder(b);
}

FpSubspace radical(const Submodule& s) {
  const GModule& m = *s.ambient;
  EchelonBuilder b(m.p(), m.dim());
  for (Elem g : m.generators()) {
    FpMatrix a = minus_identity(m.act(g));
    for (const auto& v : s.carrier.basis()) b.insert(a.left_apply(v));
  }
  return FpSubspace::from_builder(b);
}

FpSubspace radical_power(const GModule& m, std::size_t k) {
  FpSubspace cur = FpSubspace::full(m.p(), m.dim());
  for (std::size_t i = 0; i < k && cur.dim() > 0; ++i) {
    EchelonBuilder b(m.p(), m.dim());
    for (Elem g : m.generators()) {
      FpMatrix a = minus_identity(m.act(g));
      for (const auto& v : cur.basis()) b.insert(a.left_apply(v));
    }
    cur = FpSubspace::from_builder(b);
  }
  return cur;
}

std::size_t d_G(const GModule& m) { return m.dim() - radical(m).dim(); }
std::size_t d_G(const Submodule& s) { return s.dim() - radical(s).dim(); }

std::size_t d_G_quotient(const Submodule& s, const Submodule& t) {
  if (!s.carrier.contains(t.carrier)) throw Error("not a subspace");
  return s.dim() - radical(s).sum(t.carrier).dim();
}

std::vector<Vec> minimal_generators(const Submodule& s) {
  FpSubspace j = radical(s);
  EchelonBuilder b(s.carrier.p(), s.carrier.ambient_dim());
  for (const auto& v : j.basis()) b.insert(v);
  std::vector<Vec> gens;
  for (const auto& v : s.carrier.basis())
    if (b.insert(v)) gens.push_back(v);
  return gens;
}

std::vector<Vec> minimal_generators(const ModulePtr& m) { return minimal_generators(whole_module(m)); }

ModulePtr restrict_module(const Submodule& s) {
  const GModule& m = *s.ambient;
  const auto& basis = s.carrier.basis();
  const std::size_t k = basis.size();
  std::vector<FpMatrix> acts;
  acts.reserve(m.acting()->order());
  for (std::size_t g = 0; g < m.acting()->order(); ++g) {
    FpMatrix a(m.p(), k, k);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = s.carrier.coordinates(m.apply(basis[i], Elem(g)));
      if (!c) throw Error("not a submodule");
      std::copy(c->begin(), c->end(), a.row(i).begin());
    }
    acts.push_back(std::move(a));
  }
  return std::make_shared<const GModule>(m.base(), m.side(), k, std::move(acts), false);
}

ModulePtr quotient_module(const Submodule& s, const Submodule& t) {
  const GModule& m = *s.ambient;
  if (!s.carrier.contains(t.carrier)) throw Error("not a subspace");
  std::vector<Vec> comp = complement_in_order(t.carrier, s.carrier.basis());
  const std::size_t k = comp.size();
  std::vector<Vec> rows = comp;
  rows.insert(rows.end(), t.carrier.basis().begin(), t.carrier.basis().end());
  FpMatrix mt = FpMatrix::from_rows(m.p(), m.dim(), rows).transpose();
  std::vector<FpMatrix> acts;
  for (std::size_t g = 0; g < m.acting()->order(); ++g) {
    FpMatrix a(m.p(), k, k);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = solve(mt, m.apply(comp[i], Elem(g)));
      if (!c) throw Error("not a submodule");
      for (std::size_t j = 0; j < k; ++j) a(i, j) = (*c)[j];
    }
    acts.push_back(std::move(a));
  }
  return std::make_shared<const GModule>(m.base(), m.side(), k, std::move(acts), false);
}

ModulePtr dual_module(const GModule& m) {
  std::vector<FpMatrix> acts;
  acts.reserve(m.actions().size());
  for (const auto& a : m.actions()) acts.push_back(a.transpose());
  Side side = m.side() == Side::Right ? Side::Left : Side::Right;
  return std::make_shared<const GModule>(m.base(), side, m.dim(), std::move(acts), m.dim() <= 16);
}

ModulePtr inflate_module(const ModulePtr& m, const GroupPtr& e, const std::vector<Elem>& to_base) {
  if (m->side() != Side::Right) throw Error("inflation expects a right module");
  if (to_base.size() != e->order()) throw Error("map size mismatch");
  std::vector<FpMatrix> acts;
  acts.reserve(e->order());
  for (std::size_t x = 0; x < e->order(); ++x) acts.push_back(m->act(to_base[x]));
  return std::make_shared<const GModule>(e, Side::Right, m->dim(), std::move(acts), m->dim() <= 8);
}

// ---------------------------------------------------------------- free bimodule

FreeBimodule::FreeBimodule(GroupPtr g, std::size_t n) : g_(std::move(g)), n_(n) {
  const std::size_t o = g_->order(), d = n_ * o;
  if (d > kModuleDimCap) throw Error("module dimension cap");
  std::vector<FpMatrix> r, l;
  r.reserve(o);
  l.reserve(o);
  for (std::size_t x = 0; x < o; ++x) {
    FpMatrix a(g_->p(), d, d), b(g_->p(), d, d);
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t h = 0; h < o; ++h) {
        a(c * o + h, c * o + g_->mul(Elem(h), Elem(x))) = 1;
        b(c * o + h, c * o + g_->mul(Elem(x), Elem(h))) = 1;
      }
    r.push_back(std::move(a));
    l.push_back(std::move(b));
  }
  right_ = std::make_shared<const GModule>(g_, Side::Right, d, std::move(r), false);
  left_ = std::make_shared<const GModule>(g_, Side::Left, d, std::move(l), false);
}

Vec FreeBimodule::right_mul(std::span<const Residue> x, Elem g) const {
  const std::size_t o = g_->order();
  Vec out(dim(), 0);
  for (std::size_t c = 0; c < n_; ++c)
    for (std::size_t h = 0; h < o; ++h) out[c * o + g_->mul(Elem(h), g)] = x[c * o + h];
  return out;
}

Vec FreeBimodule::left_mul(Elem g, std::span<const Residue> x) const {
  const std::size_t o = g_->order();
  Vec out(dim(), 0);
  for (std::size_t c = 0; c < n_; ++c)
    for (std::size_t h = 0; h < o; ++h) out[c * o + g_->mul(g, Elem(h))] = x[c * o + h];
  return out;
}

Vec group_algebra_mul(const GroupTable& g, std::span<const Residue> a, std::span<const Residue> b) {
  const std::size_t o = g.order();
  const std::uint32_t p = g.p();
  std::vector<std::uint64_t> acc(o, 0);
  for (std::size_t x = 0; x < o; ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < o; ++y)
      if (b[y]) acc[g.mul(Elem(x), Elem(y))] += std::uint64_t(a[x]) * b[y];
  }
  Vec out(o);
  for (std::size_t i = 0; i < o; ++i) out[i] = Residue(acc[i] % p);
  return out;
}

Vec FreeBimodule::right_mul_alg(std::span<const Residue> x, std::span<const Residue> y) const {
  const std::size_t o = g_->order();
  Vec out(dim(), 0);
  for (std::size_t c = 0; c < n_; ++c) {
    Vec part = group_algebra_mul(*g_, x.subspan(c * o, o), y);
    std::copy(part.begin(), part.end(), out.begin() + std::ptrdiff_t(c * o));
  }
  return out;
}

Vec FreeBimodule::left_mul_alg(std::span<const Residue> y, std::span<const Residue> x) const {
  const std::size_t o = g_->order();
  Vec out(dim(), 0);
  for (std::size_t c = 0; c < n_; ++c) {
    Vec part = group_algebra_mul(*g_, y, x.subspan(c * o, o));
    std::copy(part.begin(), part.end(), out.begin() + std::ptrdiff_t(c * o));
  }
  return out;
}

Vec FreeBimodule::pair_product(std::span<const Residue> x, std::span<const Residue> y) const {
  const std::size_t o = g_->order();
  Vec out(o, 0);
  for (std::size_t c = 0; c < n_; ++c) {
    Vec part = group_algebra_mul(*g_, x.subspan(c * o, o), y.subspan(c * o, o));
    axpy(out, 1, part, p());
  }
  return out;
}

Residue FreeBimodule::delta(std::span<const Residue> x, std::span<const Residue> y) const {
  const std::size_t o = g_->order();
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < n_; ++c)
    for (std::size_t h = 0; h < o; ++h) s += std::uint64_t(x[c * o + h]) * y[c * o + g_->inv(Elem(h))];
  return Residue(s % p());
}

FpMatrix FreeBimodule::gram_matrix() const {
  const std::size_t o = g_->order();
  FpMatrix m(p(), dim(), dim());
  for (std::size_t c = 0; c < n_; ++c)
    for (std::size_t h = 0; h < o; ++h) m(c * o + h, c * o + g_->inv(Elem(h))) = 1;
  return m;
}

Vec FreeBimodule::socle_vector(std::size_t l) const {
  Vec v(dim(), 0);
  for (std::size_t h = 0; h < g_->order(); ++h) v[coord(l, Elem(h))] = 1;
  return v;
}

FpSubspace FreeBimodule::socle() const {
  std::vector<Vec> vs;
  for (std::size_t l = 0; l < n_; ++l) vs.push_back(socle_vector(l));
  return FpSubspace::span(p(), dim(), vs);
}

namespace {

Vec pairing_twist(const FreeBimodule& b, std::span<const Residue> q) {
  const std::size_t o = b.group()->order();
  Vec out(b.dim(), 0);
  for (std::size_t c = 0; c < b.copies(); ++c)
    for (std::size_t h = 0; h < o; ++h) out[c * o + h] = q[c * o + b.group()->inv(Elem(h))];
  return out;
}

}  // namespace

Submodule annihilator(const FreeBimodule& b, const Submodule& q, AnnSide side) {
  const ModulePtr& stable_side = side == AnnSide::LeftOfRight ? b.right_module() : b.left_module();
  if (q.carrier.ambient_dim() != b.dim() || !is_submodule(*stable_side, q.carrier))
    throw Error("not a submodule");
  std::vector<Vec> rows;
  for (const auto& v : q.carrier.basis()) rows.push_back(pairing_twist(b, v));
  FpSubspace ann = rows.empty() ? FpSubspace::full(b.p(), b.dim())
                                : kernel(FpMatrix::from_rows(b.p(), b.dim(), rows));
  const ModulePtr& result_side = side == AnnSide::LeftOfRight ? b.left_module() : b.right_module();
  return make_submodule(result_side, std::move(ann));
}

FpSubspace annihilator_by_products(const FreeBimodule& b, const FpSubspace& q, AnnSide side) {
  const GroupTable& g = *b.group();
  const std::size_t o = g.order(), d = b.dim();
  FpMatrix m(b.p(), q.dim() * o, d);
  for (std::size_t i = 0; i < q.dim(); ++i) {
    const Vec& qi = q.basis()[i];
    for (std::size_t h = 0; h < o; ++h)
      for (std::size_t c = 0; c < b.copies(); ++c)
        for (std::size_t x = 0; x < o; ++x) {
          Elem xi = g.inv(Elem(x));
          // left: (x * q)_h needs q at x^-1 h ; right: (q * x)_h needs q at h x^-1
          Elem at = side == AnnSide::LeftOfRight ? g.mul(xi, Elem(h)) : g.mul(Elem(h), xi);
          m(i * o + h, c * o + x) = qi[c * o + at];
        }
  }
  if (q.dim() == 0) return FpSubspace::full(b.p(), d);
  return kernel(m);
}

TupleAnnihilator ann_tuple(const FreeBimodule& b, const std::vector<Vec>& xs, AnnSide side) {
  const std::size_t s = xs.size(), o = b.group()->order();
  auto space = std::make_shared<const FreeBimodule>(b.group(), s);
  FpMatrix m(b.p(), b.dim(), s * o);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t g = 0; g < o; ++g) {
      Vec col = side == AnnSide::LeftOfRight ? b.left_mul(Elem(g), xs[i]) : b.right_mul(xs[i], Elem(g));
      for (std::size_t r = 0; r < b.dim(); ++r) m(r, i * o + g) = col[r];
    }
  FpSubspace k = kernel(m);
  const ModulePtr& mod = side == AnnSide::LeftOfRight ? space->left_module() : space->right_module();
  return {space, make_submodule(mod, std::move(k))};
}

// ---------------------------------------------------------------- conjugation modules

std::size_t vec_to_index(std::span<const Residue> v, std::uint32_t p) {
  std::size_t idx = 0;
  for (Residue c : v) idx = idx * p + c;
  return idx;
}

Vec index_to_vec(std::size_t idx, std::size_t dim, std::uint32_t p) {
  Vec v(dim, 0);
  for (std::size_t i = dim; i-- > 0;) {
    v[i] = Residue(idx % p);
    idx /= p;
  }
  return v;
}

Elem ConjugationModule::to_element(std::span<const Residue> v) const { return elem_of[vec_to_index(v, quotient.source->p())]; }

Vec ConjugationModule::to_vector(Elem x) const {
  std::int64_t i = index_of[x];
  if (i < 0) throw Error("element outside the module");
  return index_to_vec(std::size_t(i), basis.size(), quotient.source->p());
}

ConjugationModule module_from_conjugation(const GroupPtr& gp, const Subgroup& n, const Subgroup& w) {
  const GroupTable& g = *gp;
  if (!w.normal() || !n.normal() || !is_elementary_abelian(g, w)) throw Error("not a module");
  for (Elem x : n.members())
    for (Elem y : w.members())
      if (g.mul(x, y) != g.mul(y, x)) throw Error("not a module");
  ConjugationModule cm;
  cm.quotient = quotient(gp, n);
  const std::uint32_t p = g.p();
  std::vector<char> in_span(g.order(), 0);
  std::vector<Elem> span{0};
  in_span[0] = 1;
  for (Elem x : w.members()) {
    if (in_span[x]) continue;
    cm.basis.push_back(x);
    std::vector<Elem> next = span;
    Elem xp = x;
    for (std::uint32_t k = 1; k < p; ++k) {
      for (Elem s : span) next.push_back(g.mul(s, xp));
      xp = g.mul(xp, x);
    }
    span = std::move(next);
    for (Elem s : span) in_span[s] = 1;
  }
  const std::size_t d = cm.basis.size();
  std::size_t size = 1;
  for (std::size_t i = 0; i < d; ++i) size *= p;
  cm.elem_of.assign(size, 0);
  cm.index_of.assign(g.order(), -1);
  for (std::size_t idx = 0; idx < size; ++idx) {
    Vec v = index_to_vec(idx, d, p);
    Elem e = 0;
    for (std::size_t i = 0; i < d; ++i) e = g.mul(e, g.power(cm.basis[i], v[i]));
    cm.elem_of[idx] = e;
    cm.index_of[e] = std::int64_t(idx);
  }
  const auto& q = cm.quotient;
  std::vector<FpMatrix> acts;
  for (std::size_t c = 0; c < q.section.size(); ++c) {
    FpMatrix a(p, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec img = cm.to_vector(g.conj(cm.basis[i], q.section[c]));
      std::copy(img.begin(), img.end(), a.row(i).begin());
    }
    acts.push_back(std::move(a));
  }
  cm.module = std::make_shared<const GModule>(q.target, Side::Right, d, std::move(acts), true);
  return cm;
}

ModuleHom embed_into_free(const ModulePtr& m) {
  if (m->side() != Side::Right) throw Error("no embedding found");
  const GroupTable& g = *m->base();
  FpSubspace fixed = fixed_points(*m);
  const std::size_t n = fixed.dim(), d = m->dim(), o = g.order();
  auto target = std::make_shared<const FreeBimodule>(m->base(), n);
  FpMatrix psi(m->p(), d, n * o);
  if (n > 0) {
    // Equivariant maps into F_p(G) are v -> sum_g lambda(v g^-1) g for a functional lambda;
    // the socle condition becomes lambda_j(f_i) = delta_ij.
    FpMatrix a = fixed.basis_matrix();
    for (std::size_t j = 0; j < n; ++j) {
      Vec e(n, 0);
      e[j] = 1;
      auto lambda = solve(a, e);
      if (!lambda) throw Error("no embedding found");
      for (std::size_t x = 0; x < o; ++x) {
        Vec col = m->act(g.inv(Elem(x))).right_apply(*lambda);
        for (std::size_t r = 0; r < d; ++r) psi(r, j * o + x) = col[r];
      }
    }
  }
  ModuleHom h{m, target->right_module(), std::move(psi)};
  if (!h.is_equivariant() || !h.is_injective()) throw Error("no embedding found");
  for (std::size_t i = 0; i < n; ++i)
    if (h.apply(fixed.basis()[i]) != target->socle_vector(i)) throw Error("no embedding found");
  return h;
}

}  // namespace pgv
