#include "pgv/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pgv/extensions.hpp"
#include "pgv/noninner.hpp"

namespace pgv {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Counterexample: return "COUNTEREXAMPLE";
    case Status::SkippedHypothesis: return "SKIPPED_HYPOTHESIS";
    case Status::Unsupported: return "UNSUPPORTED";
  }
  return "UNSUPPORTED";
}

std::string CheckInstance::descriptor() const {
  std::ostringstream os;
  os << "group=" << (entry.empty() ? (group ? group->fingerprint_hex() : std::string("?")) : entry) << " seed=" << seed;
  if (normal) {
    os << " N=[";
    for (std::size_t i = 0; i < normal->size(); ++i) os << (i ? "," : "") << (*normal)[i];
    os << "]";
  }
  if (module.copies || module.t || module.kind != "sampled")
    os << " module=" << module.kind << ",n=" << module.copies << ",t=" << module.t;
  return os.str();
}

namespace {

// caps
constexpr std::size_t kModuleGroupCap = 16;   // |G| for module-level checks
constexpr std::size_t kBimoduleCap = 256;     // n |E| for checks on the free bimodule over E
constexpr std::size_t kExtensionCap = 4096;   // |E| for H^1-only extension checks
constexpr std::size_t kH2Cap = 4096;          // |E|^2 dim Q for second cohomology
constexpr std::size_t kCocycleCap = 2048;     // |G|^2 dim P when sampling tau in Z^2(G, P)
constexpr std::size_t kDenseLimit = 256;      // |G| dim M for the all-pairs solver in reverify
constexpr std::size_t kConfigCap = 400;       // configurations per group-level check

struct BudgetExceeded {};
struct Unsupported {
  std::string reason;
};
struct Skip {
  std::string reason;
};

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Ctx {
 public:
  Ctx(const std::string& id, const CheckInstance& inst, bool dense)
      : id(id), inst(inst), g(inst.group), dense(dense), rng(inst.seed ^ fnv(id)) {
    if (inst.budget_ms) deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(inst.budget_ms);
  }

  const std::string& id;
  const CheckInstance& inst;
  GroupPtr g;
  bool dense;
  bool used_fast_solver = false;
  std::mt19937_64 rng;
  Details d;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void tick() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw BudgetExceeded{};
  }
  std::uint32_t p() const { return g->p(); }
  std::uint64_t next_seed() { return rng(); }
  std::size_t below(std::size_t k) { return k ? std::size_t(rng() % k) : 0; }

  std::size_t h1(const ModulePtr& m) {
    tick();
    if (dense) {
      if (m->acting()->order() * std::max<std::size_t>(m->dim(), 1) <= kDenseLimit)
        return cohomology_all_pairs(m, 1).h_dim;
      used_fast_solver = true;
    }
    return h1_dim(m);
  }

  void set(const std::string& k, std::size_t v) { d[k] = std::int64_t(v); }
  void set(const std::string& k, std::int64_t v) { d[k] = v; }
  void set(const std::string& k, int v) { d[k] = std::int64_t(v); }
  void set(const std::string& k, bool v) { d[k] = v; }
  void set(const std::string& k, const char* v) { d[k] = std::string(v); }
  void set(const std::string& k, const std::string& v) { d[k] = v; }
  void set(const std::string& k, const std::vector<Elem>& v) {
    d[k] = std::vector<std::int64_t>(v.begin(), v.end());
  }

  Vec random_in(const FpSubspace& s) {
    Vec v(s.ambient_dim(), 0);
    for (const auto& b : s.basis()) axpy(v, Residue(rng() % p()), b, p());
    return v;
  }
};

Status verdict(bool ok) { return ok ? Status::Pass : Status::Counterexample; }

void require_order(const Ctx& c, std::size_t cap, const char* what) {
  if (c.g->order() > cap) throw Unsupported{std::string(what) + " cap: |G| > " + std::to_string(cap)};
}

std::size_t log_p(std::size_t x, std::uint32_t p) {
  std::size_t k = 0;
  while (x > 1) {
    x /= p;
    ++k;
  }
  return k;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// ---------------------------------------------------------------- group helpers

std::vector<Elem> as_vec(const Subgroup& s) { return s.members(); }

bool proper_subset(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Subgroup as a group table of its own, members in sorted order.
GroupPtr subgroup_table(const GroupTable& g, const Subgroup& s) {
  const auto& mem = s.members();
  std::vector<std::int64_t> idx(g.order(), -1);
  for (std::size_t i = 0; i < mem.size(); ++i) idx[mem[i]] = std::int64_t(i);
  std::vector<Elem> table(mem.size() * mem.size());
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j) table[i * mem.size() + j] = Elem(idx[g.mul(mem[i], mem[j])]);
  return GroupTable::from_table(g.p(), mem.size(), std::move(table), {}, GroupTable::Verify::Full);
}

ModulePtr restrict_to_subgroup(const ModulePtr& m, const GroupPtr& sub, const Subgroup& s) {
  std::vector<FpMatrix> acts;
  for (Elem x : s.members()) acts.push_back(m->act(x));
  return std::make_shared<const GModule>(sub, Side::Right, m->dim(), std::move(acts));
}

/// A module on which q.kernel acts trivially, as a module for the quotient group.
ModulePtr descend_module(const ModulePtr& m, const QuotientMap& q) {
  std::vector<FpMatrix> acts;
  for (Elem s : q.section) acts.push_back(m->act(s));
  return std::make_shared<const GModule>(q.target, Side::Right, m->dim(), std::move(acts));
}

/// Order-p subgroups inside Omega_1(Z(G)): the minimal normal subgroups.
std::vector<Subgroup> minimal_normals(const GroupTable& g) {
  std::vector<Subgroup> out;
  Subgroup z1 = omega1(g, center(g));
  for (Elem x : z1.members()) {
    if (x == 0) continue;
    Subgroup s = subgroup_closure(g, {x});
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- existence conclusions

std::optional<Certificate> cached_engine(const GroupPtr& g) {
  static std::mutex mu;
  static std::map<std::string, std::optional<Certificate>> cache;
  const std::string key = g->fingerprint_hex();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto cert = engine_sweep(g);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, cert).first->second;
}

bool good_noninner(const GroupTable& g, const std::vector<Elem>& f) {
  return is_automorphism(g, f) && map_order(g, f) == g.p() && !is_inner(g, f);
}

/// "G has a non-inner automorphism of order p": the construction's map first, then the engine.
Status existence(Ctx& c, Details& d, const std::optional<std::vector<Elem>>& construction) {
  c.tick();
  bool built = construction && good_noninner(*c.g, *construction);
  d["construction_noninner"] = built;
  if (built) {
    d["route"] = std::string("construction");
    return Status::Pass;
  }
  auto cert = cached_engine(c.g);
  if (cert && verify_certificate(c.g, *cert).ok()) {
    d["route"] = "engine:" + cert->provenance.route;
    return Status::Pass;
  }
  d["route"] = std::string("none");
  return Status::Counterexample;
}

// ---------------------------------------------------------------- group-level sweep

struct ConfigResult {
  Status status;
  Details d;
};

class Sweep {
 public:
  explicit Sweep(Ctx& c) : c_(c) {}
  /// Returns false when the sweep should stop.
  bool add(std::optional<ConfigResult> r) {
    ++examined_;
    if (r) {
      ++satisfied_;
      if (r->status == Status::Counterexample) {
        fail_ = std::move(r);
        return false;
      }
      if (!pass_) pass_ = std::move(r);
    }
    if (examined_ >= kConfigCap) {
      truncated_ = true;
      return false;
    }
    return true;
  }
  Status finish() {
    c_.set("configs_examined", examined_);
    c_.set("configs_satisfying", satisfied_);
    c_.set("configs_truncated", truncated_);
    const auto& w = fail_ ? fail_ : pass_;
    if (w)
      for (auto& [k, v] : w->d) c_.d[k] = v;
    if (fail_) return Status::Counterexample;
    if (pass_) return Status::Pass;
    return Status::SkippedHypothesis;
  }

 private:
  Ctx& c_;
  std::size_t examined_ = 0, satisfied_ = 0;
  bool truncated_ = false;
  std::optional<ConfigResult> pass_, fail_;
};

std::vector<Subgroup> candidate_normals(Ctx& c) {
  const GroupTable& g = *c.g;
  if (c.inst.normal) {
    Subgroup s = subgroup_closure(g, *c.inst.normal);
    if (s.members() != [&] {
          auto v = *c.inst.normal;
          std::sort(v.begin(), v.end());
          v.erase(std::unique(v.begin(), v.end()), v.end());
          return v;
        }())
      throw Skip{"given N is not a subgroup"};
    if (!s.normal()) throw Skip{"given N is not normal"};
    return {s};
  }
  return normal_subgroups(g, kMaxOrderCap);
}

/// Shared data for the special-subgroup family.
struct NData {
  Subgroup n;
  SpecialInfo info;
  Subgroup w;  // Omega_1(Z(N))
  Subgroup zw;  // Z(G) Omega_1(Z(N))
  std::size_t h1 = 0;
  std::size_t fixed = 0;
  bool all_inner = true;
  std::optional<std::vector<Elem>> noninner;
  bool exactly = false;
};

class GroupFacts {
 public:
  explicit GroupFacts(Ctx& c) : c_(c), g_(*c.g) {
    z = center(g_);
    phi = frattini(g_);
    n_rank = generator_rank(g_, z);
    normals = normal_subgroups(g_, kMaxOrderCap);
  }

  Subgroup z, phi;
  std::size_t n_rank = 0;
  std::vector<Subgroup> normals;

  struct H1Data {
    std::size_t h1 = 0;
    std::size_t fixed = 0;
    bool all_inner = true;
    std::optional<std::vector<Elem>> noninner;
  };

  /// H^1(G/X, W) for an elementary abelian normal W centralized by X, with the derivation probe.
  const H1Data& h1(const Subgroup& x, const Subgroup& w, bool probe = false) {
    auto key = std::make_pair(x.members(), w.members());
    auto it = h1_.find(key);
    if (it != h1_.end() && (!probe || it->second.second)) return it->second.first;
    c_.tick();
    H1Data r;
    if (w.size() > 1) {
      ConjugationModule cm = module_from_conjugation(c_.g, x, w);
      r.h1 = c_.h1(cm.module);
      r.fixed = fixed_points(*cm.module).dim();
      if (probe && r.h1 > 0) {
        CohomologySpace cs = cohomology(cm.module, 1);
        if (auto wit = derivation_span_noninner_probe(g_, cm, cs)) {
          r.all_inner = false;
          r.noninner = wit->map;
        }
      }
    }
    auto& slot = h1_[key];
    slot = {r, probe || slot.second};
    return slot.first;
  }

  const NData& data(const Subgroup& n) {
    auto it = nd_.find(n.members());
    if (it != nd_.end()) return it->second;
    NData d;
    d.n = n;
    d.info = special_info(g_, n);
    d.w = omega1(g_, d.info.center_of_n);
    d.zw = join(g_, z, d.w);
    if (d.info.special) {
      const auto& h = h1(n, d.w, true);
      d.h1 = h.h1;
      d.fixed = h.fixed;
      d.all_inner = h.all_inner;
      d.noninner = h.noninner;
      d.exactly = d.h1 == n_rank && d.fixed == n_rank;
    }
    return nd_.emplace(n.members(), std::move(d)).first->second;
  }

  const std::vector<Subgroup>& specials() {
    if (!specials_) {
      std::vector<Subgroup> s;
      for (const auto& n : normals)
        if (n.subset_of(phi) && special_info(g_, n).special) s.push_back(n);
      specials_ = std::move(s);
    }
    return *specials_;
  }

  std::size_t i_size(const Subgroup& n) { return iset(g_, centralizer(g_, n)).members.size(); }

  /// The disjuncts "special M with |M| < |N|" and "|M| = |N| and I(C_G(N)) < I(C_G(M))".
  void alternatives(const Subgroup& n, Details& d, bool* smaller, bool* larger_i, bool by_size_only = false) {
    *smaller = false;
    *larger_i = false;
    ISet in = iset(g_, centralizer(g_, n));
    for (const auto& m : specials()) {
      if (m.size() < n.size()) *smaller = true;
      if (m.size() == n.size() && !(m == n)) {
        ISet im = iset(g_, centralizer(g_, m));
        bool more = by_size_only ? im.members.size() > in.members.size() : proper_subset(in.members, im.members);
        if (more) *larger_i = true;
      }
    }
    d["smaller_special"] = *smaller;
    d["special_with_larger_I"] = *larger_i;
  }

 private:
  Ctx& c_;
  const GroupTable& g_;
  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::pair<H1Data, bool>> h1_;
  std::map<std::vector<Elem>, NData> nd_;
  std::optional<std::vector<Subgroup>> specials_;
};

void describe(Details& d, const char* key, const Subgroup& s) {
  d[key] = std::vector<std::int64_t>(s.members().begin(), s.members().end());
}

bool nonabelian_or_skip(const Ctx& c) {
  if (c.g->is_abelian()) throw Skip{"G is abelian"};
  return true;
}

// ---------------------------------------------------------------- group-level checks

Status chk_lp_order(Ctx& c) {
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  Sweep sw(c);
  for (const auto& n : candidate_normals(c)) {
    if (!n.subset_of(f.phi) || n.size() == 1) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    Subgroup w = omega1(g, meet(g, n, centralizer(g, n)));
    bool stop = false;
    for (const auto& n1 : f.normals) {
      if (!(w.subset_of(n1) && n1.subset_of(n) && n1.size() < n.size())) continue;
      c.tick();
      ConjugationModule cm = module_from_conjugation(c.g, n1, w);
      CohomologySpace cs = cohomology(cm.module, 1);
      std::vector<Cochain> taus = cs.z_basis;
      if (!cs.z_basis.empty()) {
        Cochain mix(cs.z_basis.front().size(), 0);
        for (const auto& z : cs.z_basis) axpy(mix, Residue(c.rng() % g.p()), z, g.p());
        taus.push_back(mix);
      }
      ConfigResult r{Status::Pass, {}};
      describe(r.d, "N", n);
      describe(r.d, "N1", n1);
      r.d["z1_dim"] = std::int64_t(cs.z_dim);
      std::int64_t tested = 0;
      for (const auto& tau : taus) {
        if (is_zero(tau)) continue;
        auto psi = derivation_to_automorphism(g, cm, tau);
        ++tested;
        bool aut = is_automorphism(g, psi);
        std::size_t ord = aut ? map_order(g, psi) : 0;
        if (!aut || ord != g.p()) {
          r.status = Status::Counterexample;
          r.d["automorphism"] = aut;
          r.d["map_order"] = std::int64_t(ord);
          break;
        }
      }
      r.d["derivations_tested"] = tested;
      if (!sw.add(r)) {
        stop = true;
        break;
      }
    }
    if (stop) break;
  }
  return sw.finish();
}

Status chk_ij_bound(Ctx& c) {
  const GroupTable& g = *c.g;
  nonabelian_or_skip(c);
  GroupFacts f(c);
  c.set("parity", g.p() == 2 ? "p=2" : "p odd");
  Sweep sw(c);
  for (const auto& n : candidate_normals(c)) {
    c.tick();
    Subgroup nn = commutator_subgroup(g, n, n);
    Subgroup om = omega1(g, n);
    if (!(nn.subset_of(f.z) && f.z.subset_of(n) && is_abelian(g, om))) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    ISet i = iset(g, n);
    Subgroup zo = join(g, f.z, om);
    const Subgroup& ig = i.generated;
    ConfigResult r{Status::Pass, {}};
    describe(r.d, "N", n);
    r.d["i_closed"] = i.closed;
    r.d["i_size"] = std::int64_t(i.members.size());
    r.d["i_generated_size"] = std::int64_t(ig.size());
    r.d["zo_size"] = std::int64_t(zo.size());
    bool contains = zo.subset_of(ig);
    // x^p and commutators of <I(N)> must fall in Z(G) Omega_1(N)
    bool elementary = contains;
    for (Elem x : ig.members()) {
      if (!zo.contains(g.power(x, g.p()))) elementary = false;
      for (Elem y : ig.members())
        if (!zo.contains(g.commutator(x, y))) elementary = false;
      if (!elementary) break;
    }
    std::size_t qlog = contains ? log_p(ig.size() / zo.size(), g.p()) : 0;
    r.d["quotient_log"] = std::int64_t(qlog);
    r.d["bound_log"] = std::int64_t(f.n_rank);
    r.d["quotient_elementary"] = elementary;
    r.status = verdict(contains && elementary && qlog <= f.n_rank);
    if (!sw.add(r)) break;
  }
  return sw.finish();
}

Status chk_ddd_iso(Ctx& c) {
  const GroupTable& g = *c.g;
  nonabelian_or_skip(c);
  GroupFacts f(c);
  Sweep sw(c);
  for (const auto& n : candidate_normals(c)) {
    SpecialInfo info = special_info(g, n);
    if (!info.special) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    c.tick();
    Subgroup w = omega1(g, meet(g, info.product, centralizer(g, info.product)));
    ConfigResult r{Status::Pass, {}};
    describe(r.d, "N", n);
    r.d["w_inside_n"] = w.subset_of(n);
    ConjugationModule cm = module_from_conjugation(c.g, info.product, w);
    CohomologySpace cs = cohomology(cm.module, 1);
    std::size_t h = c.h1(cm.module);
    if (derivation_span_noninner_probe(g, cm, cs)) {
      r.d["all_inner"] = false;
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    // Z and B as sets of conjugating elements
    std::size_t zc = 0, bc = 0;
    FpSubspace bsp = cs.b_space();
    for (Elem x = 0; x < g.order(); ++x) {
      Cochain delta;
      try {
        delta = conjugation_derivation(g, cm, x);
      } catch (const Error&) {
        continue;
      }
      ++zc;
      if (bsp.contains(delta)) ++bc;
    }
    Subgroup ig = iset(g, n).generated;
    Subgroup zo = join(g, f.z, omega1(g, n));
    std::size_t ilog = zo.subset_of(ig) ? log_p(ig.size() / zo.size(), g.p()) : std::size_t(-1);
    r.d["all_inner"] = true;
    r.d["h1_dim"] = std::int64_t(h);
    r.d["z_count"] = std::int64_t(zc);
    r.d["b_count"] = std::int64_t(bc);
    std::size_t zb = bc ? log_p(zc / bc, g.p()) : 0;
    r.d["z_over_b_log"] = std::int64_t(zb);
    r.d["i_quotient_log"] = ilog == std::size_t(-1) ? std::int64_t(-1) : std::int64_t(ilog);
    r.status = verdict(w.subset_of(n) && h == zb && h == ilog);
    if (!sw.add(r)) break;
  }
  return sw.finish();
}

Status chk_thm5_5(Ctx& c) {
  nonabelian_or_skip(c);
  Sweep sw(c);
  for (const auto& n : candidate_normals(c)) {
    c.tick();
    ProbeResult pr = special_h1_probe(c.g, n);
    if (!pr.hypotheses || (!pr.certificate && !pr.diagnostic)) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    ConfigResult r{Status::Pass, {}};
    describe(r.d, "N", n);
    r.d["h1_dim"] = std::int64_t(pr.h1_dim);
    r.d["center_rank"] = std::int64_t(pr.center_rank);
    r.d["w_inside_n"] = pr.w_inside_n;
    std::optional<std::vector<Elem>> map;
    if (pr.certificate) map = pr.certificate->map;
    r.status = existence(c, r.d, map);
    if (!pr.w_inside_n) r.status = Status::Counterexample;
    if (!sw.add(r)) break;
  }
  return sw.finish();
}

// ---------------------------------------------------------------- modules

struct QChoice {
  BimodulePtr amb;
  Submodule q;
  ModulePtr mod;
  std::size_t h1 = 0;
};

/// n-G module Q inside n copies of F_p(G) containing the socle.
std::optional<QChoice> choose_q(Ctx& c, const GroupPtr& g, std::size_t n,
                                const std::function<bool(std::size_t h1, std::size_t dim)>& accept) {
  const std::string& kind = c.inst.module.kind;
  if (kind != "sampled") {
    auto amb = std::make_shared<const FreeBimodule>(g, n);
    Submodule whole = whole_module(amb->right_module());
    FpSubspace s = whole.carrier;
    if (kind == "free") {
    } else if (kind == "augmentation") {
      s = radical(whole);
    } else if (kind.rfind("radical:", 0) == 0) {
      s = radical_power(*amb->right_module(), std::stoul(kind.substr(8)));
    } else {
      throw Unsupported{"unknown module kind " + kind};
    }
    Submodule q = make_submodule(amb->right_module(), s);
    ModulePtr m = restrict_module(q);
    std::size_t h = c.h1(m);
    if (!accept(h, m->dim())) return std::nullopt;
    return QChoice{amb, q, m, h};
  }
  for (int round = 0; round < 8; ++round) {
    c.tick();
    auto s = sample_module_where(g, n, c.next_seed(), [&](std::size_t h) { return accept(h, 0); }, 8);
    if (!s) continue;
    ModulePtr m = restrict_module(s->q);
    std::size_t h = c.h1(m);
    if (accept(h, m->dim())) return QChoice{s->ambient, s->q, m, h};
  }
  return std::nullopt;
}

/// A general module: a sampled n-G module, a quotient of a free module, or a trivial module.
ModulePtr general_module(Ctx& c, std::string* how) {
  const GroupPtr& g = c.g;
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1 + c.below(2);
  if (c.inst.module.kind != "sampled") {
    auto q = choose_q(c, g, n, [](std::size_t, std::size_t) { return true; });
    *how = c.inst.module.kind;
    return q->mod;
  }
  switch (c.below(4)) {
    case 0: {
      *how = "trivial";
      return GModule::trivial(g, 1 + c.below(2));
    }
    case 1: {
      auto amb = std::make_shared<const FreeBimodule>(g, n);
      Submodule whole = whole_module(amb->right_module());
      std::vector<Vec> gens;
      std::size_t k = c.below(3);
      FpSubspace rad = radical(whole);
      for (std::size_t i = 0; i < k; ++i) gens.push_back(c.random_in(rad));
      Submodule sub = generated_submodule(amb->right_module(), gens);
      *how = "quotient";
      return quotient_module(whole, sub);
    }
    default: {
      auto s = sample_module_where(g, n, c.next_seed(), [](std::size_t) { return true; }, 1);
      *how = "sampled";
      return restrict_module(s->q);
    }
  }
}

Status chk_gen_count(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::string how;
  ModulePtr a = general_module(c, &how);
  c.set("module_kind", how);
  c.set("dim", a->dim());
  std::size_t d = d_G(*a);
  c.set("d_G", d);
  const std::uint32_t p = c.p();
  FpSubspace all = FpSubspace::full(p, a->dim());
  std::vector<std::int64_t> sizes;
  bool ok = true;
  for (int trial = 0; trial < 6; ++trial) {
    c.tick();
    std::vector<Vec> gens = minimal_generators(a);
    std::size_t extra = 1 + c.below(3);
    for (std::size_t i = 0; i < extra; ++i) gens.push_back(c.random_in(all));
    std::shuffle(gens.begin(), gens.end(), c.rng);
    for (std::size_t i = 0; i < gens.size();) {
      std::vector<Vec> rest = gens;
      rest.erase(rest.begin() + std::ptrdiff_t(i));
      if (generated_submodule(a, rest).dim() == a->dim())
        gens = std::move(rest);
      else
        ++i;
    }
    sizes.push_back(std::int64_t(gens.size()));
    if (gens.size() != d) ok = false;
  }
  c.d["minimal_set_sizes"] = sizes;
  return verdict(ok);
}

Status chk_cc_bound(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::string how;
  ModulePtr a = general_module(c, &how);
  c.set("module_kind", how);
  if (a->dim() == 0) throw Skip{"zero module has no proper submodule"};
  Submodule whole = whole_module(a);
  std::vector<FpSubspace> cands{radical(whole)};
  for (int i = 0; i < 4; ++i) {
    std::vector<Vec> gens{c.random_in(whole.carrier)};
    FpSubspace s = generated_submodule(a, gens).carrier;
    if (s.dim() < a->dim()) cands.push_back(s);
  }
  std::size_t m = d_G(*a);
  bool first = true;
  for (const auto& s : cands) {
    Submodule a1 = make_submodule(a, s);
    std::size_t d1 = d_G(a1), sq = d_G_quotient(whole, a1);
    bool r1 = d1 <= sq + m, r2 = m <= sq + d1;
    if (first || !r1) {
      c.set("d_A", m);
      c.set("d_A1", d1);
      c.set("d_quotient", sq);
      c.set("dim_A", a->dim());
      c.set("dim_A1", s.dim());
      c.set("reading_d_A1_bound", r1);
      c.set("reading_d_A_bound", r2);
      first = false;
    }
    if (!r1) return Status::Counterexample;
  }
  return Status::Pass;
}

Status chk_ut_embed(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::string how;
  ModulePtr a = general_module(c, &how);
  c.set("module_kind", how);
  FpSubspace fixed_space = fixed_points(*a);
  std::size_t fixed = fixed_space.dim();
  c.set("fixed_dim", fixed);
  if (fixed == 0) throw Skip{"zero module"};
  ModuleHom h = embed_into_free(a);
  bool inj = h.is_injective(), eq = h.is_equivariant();
  std::size_t copies = h.target->dim() / c.g->order();
  FpSubspace img_fixed = FpSubspace::span(c.p(), h.target->dim(), [&] {
    std::vector<Vec> v;
    for (const auto& b : fixed_space.basis()) v.push_back(h.apply(b));
    return v;
  }());
  FpSubspace target_fixed = fixed_points(*h.target);
  c.set("copies", copies);
  c.set("injective", inj);
  c.set("equivariant", eq);
  bool socle = img_fixed == target_fixed;
  c.set("socle_preserved", socle);
  return verdict(inj && eq && socle && copies == fixed);
}

Status chk_free_iff_h1zero(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::string how;
  ModulePtr a;
  if (c.inst.module.kind == "sampled" && c.below(2) == 0) {
    // free modules and their submodules generated by units are the directed source of H^1 = 0
    std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1 + c.below(2);
    auto amb = std::make_shared<const FreeBimodule>(c.g, n);
    std::vector<Vec> gens;
    for (std::size_t l = 0; l < n; ++l) {
      Vec v = c.random_in(FpSubspace::full(c.p(), amb->dim()));
      v[amb->coord(l, 0)] = 1;
      gens.push_back(v);
    }
    a = restrict_module(generated_submodule(amb->right_module(), gens));
    how = "unit-generated";
  } else {
    a = general_module(c, &how);
  }
  c.set("module_kind", how);
  std::size_t h = c.h1(a);
  c.set("h1_dim", h);
  c.set("dim", a->dim());
  if (h != 0 || a->dim() == 0) throw Skip{"H^1(G, A) is not zero"};
  ModuleHom e = embed_into_free(a);
  std::size_t o = c.g->order();
  std::size_t copies = e.target->dim() / o;
  c.set("copies", copies);
  bool iso = e.is_injective() && e.target->dim() == a->dim();
  bool table = true;
  for (Elem x = 0; x < o && table; ++x)
    if (!(a->act(x) * e.matrix == e.matrix * e.target->act(x))) table = false;
  c.set("isomorphism", iso);
  c.set("action_tables_equal", table);
  return verdict(iso && table);
}

Status chk_dual_fixed(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::string how;
  ModulePtr a = general_module(c, &how);
  c.set("module_kind", how);
  ModulePtr du = dual_module(*a);
  std::size_t lhs = fixed_points(*du).dim(), rhs = d_G(*a);
  c.set("dual_fixed_dim", lhs);
  c.set("d_G", rhs);
  return verdict(lhs == rhs);
}

Status chk_dual_gens(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::string how;
  ModulePtr a = general_module(c, &how);
  c.set("module_kind", how);
  ModulePtr du = dual_module(*a);
  std::size_t lhs = d_G(*du), rhs = fixed_points(*a).dim();
  c.set("dual_d_G", lhs);
  c.set("fixed_dim", rhs);
  return verdict(lhs == rhs);
}

Status chk_l00_duality(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1 + c.below(2);
  FreeBimodule b(c.g, n);
  Submodule whole = whole_module(b.right_module());
  Submodule q;
  const std::string& kind = c.inst.module.kind;
  if (kind == "augmentation") {
    q = make_submodule(b.right_module(), radical(whole));
  } else if (kind == "free") {
    q = whole;
  } else if (kind.rfind("radical:", 0) == 0) {
    q = make_submodule(b.right_module(), radical_power(*b.right_module(), std::stoul(kind.substr(8))));
  } else {
    std::vector<Vec> gens;
    std::size_t k = c.below(4);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(c.random_in(whole.carrier));
    q = generated_submodule(b.right_module(), gens);
  }
  Submodule l = annihilator(b, q, AnnSide::LeftOfRight);
  Submodule r = annihilator(b, l, AnnSide::RightOfLeft);
  FpSubspace by_products = annihilator_by_products(b, q.carrier, AnnSide::LeftOfRight);
  const std::size_t total = n * c.g->order();
  c.set("copies", n);
  c.set("q_dim", q.dim());
  c.set("l_dim", l.dim());
  bool inverse = r.carrier == q.carrier;
  bool product = l.dim() + q.dim() == total;
  bool cross = by_products == l.carrier;
  c.set("r_of_l_equals_q", inverse);
  c.set("size_product_law", product);
  c.set("products_agree", cross);
  if (l.dim() * log_p(c.p(), 2) < 62 && l.dim() < 62) {
    std::size_t pl = ipow(c.p(), l.dim());
    c.set("l_size", pl);
    if (total < 62 && ipow(c.p(), total) < (std::size_t(1) << 62)) c.set("product", pl * ipow(c.p(), q.dim()));
  }
  return verdict(inverse && product && cross);
}

Status chk_ww_bridge(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1 + c.below(2);
  auto q = choose_q(c, c.g, n, [n](std::size_t h, std::size_t) { return h <= n; });
  if (!q) throw Skip{"no n-G module found"};
  Submodule l = annihilator(*q->amb, q->q, AnnSide::LeftOfRight);
  std::size_t dl = d_G(l);
  c.set("copies", n);
  c.set("h1_dim", q->h1);
  c.set("d_annihilator", dl);
  return verdict(q->h1 == dl);
}

// ---------------------------------------------------------------- extensions

/// Kernel module P of rank t: trivial, or for t = 2 possibly the unitriangular action
/// through a non-zero character G -> F_p. The first basis vector spans a submodule.
ModulePtr kernel_module(Ctx& c, std::size_t t, bool allow_action) {
  const GroupTable& g = *c.g;
  if (t != 2 || !allow_action || c.below(2) == 0) return GModule::trivial(c.g, t);
  const auto& gens = g.generators();
  std::vector<Residue> coef(gens.size());
  bool nonzero = false;
  for (auto& x : coef) {
    x = Residue(c.rng() % g.p());
    if (x) nonzero = true;
  }
  if (!nonzero && !coef.empty()) coef[0] = 1;
  const auto& tr = g.traversal();
  std::vector<Residue> chi(g.order(), 0);
  for (std::size_t k = 1; k < tr.order.size(); ++k) {
    Elem x = tr.order[k];
    chi[x] = fp_add(chi[tr.parent[x]], coef[tr.gen_used[x]], g.p());
  }
  std::vector<FpMatrix> acts;
  for (Elem x = 0; x < g.order(); ++x) {
    FpMatrix m = FpMatrix::identity(g.p(), 2);
    m.row(1)[0] = chi[x];
    acts.push_back(std::move(m));
  }
  return std::make_shared<const GModule>(c.g, Side::Right, 2, std::move(acts));
}

/// tau in Z^2(G, P); outside B^2 when nonsplit is set (nullopt when H^2 = 0).
std::optional<TwoCocycle> random_cocycle(Ctx& c, const ModulePtr& p, bool nonsplit) {
  const GroupTable& g = *p->acting();
  if (g.order() * g.order() * p->dim() > kCocycleCap) throw Unsupported{"second cohomology cap"};
  c.tick();
  CohomologySpace cs = cohomology(p, 2);
  const std::uint32_t q = g.p();
  Cochain v(g.order() * g.order() * p->dim(), 0);
  if (nonsplit) {
    if (cs.h_dim == 0) return std::nullopt;
    for (const auto& b : cs.b_basis) axpy(v, Residue(c.rng() % q), b, q);
    std::vector<Residue> coef(cs.h_reps.size());
    bool nz = false;
    for (auto& x : coef) {
      x = Residue(c.rng() % q);
      if (x) nz = true;
    }
    if (!nz) coef[c.below(coef.size())] = 1;
    for (std::size_t i = 0; i < coef.size(); ++i) axpy(v, coef[i], cs.h_reps[i], q);
  } else {
    for (const auto& z : cs.z_basis) axpy(v, Residue(c.rng() % q), z, q);
  }
  return TwoCocycle{p, v};
}

struct ExtData {
  Extension ext;
  ModulePtr kernel;
  std::size_t t = 0;
  bool nonsplit = false;
};

ExtData make_extension(Ctx& c, std::size_t t, bool require_nonsplit, bool allow_action, std::size_t cap) {
  if (c.g->order() * ipow(c.p(), t) > cap) throw Unsupported{"extension order cap"};
  ExtData e;
  e.t = t;
  e.kernel = kernel_module(c, t, allow_action);
  bool want_nonsplit = require_nonsplit || c.below(4) != 0;
  auto tau = random_cocycle(c, e.kernel, want_nonsplit);
  if (!tau) {
    if (require_nonsplit) throw Skip{"H^2(G, P) = 0"};
    tau = random_cocycle(c, e.kernel, false);
  }
  CohomologySpace cs = cohomology(e.kernel, 2);
  e.nonsplit = !cs.b_space().contains(tau->values);
  e.ext = build_extension(*tau, kMaxOrderCap);
  c.set("t", t);
  c.set("extension_order", e.ext.group->order());
  c.set("tau_nonsplit", e.nonsplit);
  c.set("kernel_action_trivial", [&] {
    for (Elem x = 0; x < c.g->order(); ++x)
      if (!(e.kernel->act(x) == FpMatrix::identity(c.p(), t))) return false;
    return true;
  }());
  return e;
}

ModulePtr inflate_to(const ModulePtr& m, const Extension& e) { return inflate_module(m, e.group, e.eta); }

/// E / P1 with P1 the span of the first kernel basis vector.
ExtensionQuotient mod_p1(const Extension& e) {
  FpSubspace p1 = FpSubspace::span(e.group->p(), e.kernel_module->dim(), [&] {
    Vec v(e.kernel_module->dim(), 0);
    v[0] = 1;
    return std::vector<Vec>{v};
  }());
  return quotient_by_kernel_part(e, e.kernel_part(p1));
}

std::size_t choose_copies(Ctx& c, std::size_t group_order, std::size_t cap_total) {
  if (c.inst.module.copies) return c.inst.module.copies;
  std::size_t n = 1 + c.below(2);
  while (n > 1 && n * group_order > cap_total) --n;
  return n;
}

/// Rank t for bimodule checks: 2 when it fits, else 1.
std::size_t bimodule_t(Ctx& c, std::size_t n) {
  if (c.inst.module.t) return c.inst.module.t;
  return n * c.g->order() * c.p() * c.p() <= kBimoduleCap ? 2 : 1;
}

void require_bimodule(const Ctx& c, std::size_t n, std::size_t t) {
  if (n * c.g->order() * ipow(c.p(), t) > kBimoduleCap) throw Unsupported{"bimodule cap: n |E| > 256"};
}

Vec apply_rows(const FpMatrix& m, const Vec& v) { return m.left_apply(v); }

FpSubspace image_of(const FpSubspace& s, const FpMatrix& m) {
  std::vector<Vec> rows;
  for (const auto& b : s.basis()) rows.push_back(m.left_apply(b));
  return FpSubspace::span(m.p(), m.cols(), rows);
}

Status chk_xo_unique(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1;
  std::size_t t = bimodule_t(c, n);
  require_bimodule(c, n, t);
  ExtData e = make_extension(c, t, false, false, kBimoduleCap);
  TransferPair tp = transfer_maps(e.ext, n);
  FpSubspace ker = tp.down_kernel();
  bool ok = true;
  std::int64_t tested = 0;
  for (int s = 0; s < 4; ++s) {
    Vec y = c.random_in(ker);
    for (bool right : {false, true}) {
      LambdaExpansion le = lambda_expansion(tp, y, right);
      ++tested;
      if (!(le.basis && le.exists && le.zero_tuple_vanishes)) {
        ok = false;
        c.set(right ? "right_basis" : "left_basis", le.basis);
        c.set(right ? "right_exists" : "left_exists", le.exists);
        c.set(right ? "right_zero_tuple_vanishes" : "left_zero_tuple_vanishes", le.zero_tuple_vanishes);
      }
    }
  }
  c.set("copies", n);
  c.set("kernel_dim", ker.dim());
  c.set("expansions_tested", tested);
  return verdict(ok);
}

Status chk_to_iso(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1;
  std::size_t t = bimodule_t(c, n);
  require_bimodule(c, n, t);
  ExtData e = make_extension(c, t, false, false, kBimoduleCap);
  TransferPair tp = transfer_maps(e.ext, n);
  const GroupTable& eg = *e.ext.group;
  const std::size_t bd = tp.bottom->dim();
  bool injective = rank(tp.up) == bd;
  bool down_up_zero = true, up_down_norm = true, right_eq = true, left_eq = true, trivial_p = true;
  FpMatrix du = tp.up * tp.down;
  for (std::size_t i = 0; i < du.rows(); ++i)
    if (!is_zero(du.row(i))) down_up_zero = false;
  for (std::size_t i = 0; i < tp.top->dim(); ++i) {
    Vec x(tp.top->dim(), 0);
    x[i] = 1;
    Vec lhs = tp.up.left_apply(tp.down.left_apply(x));
    if (lhs != tp.top->right_mul_alg(x, tp.norm_element)) {
      up_down_norm = false;
      break;
    }
  }
  for (std::size_t i = 0; i < bd; ++i) {
    Vec x(bd, 0);
    x[i] = 1;
    Vec ux = tp.up.left_apply(x);
    for (Elem h : eg.generators()) {
      if (tp.up.left_apply(tp.bottom->right_mul(x, e.ext.eta[h])) != tp.top->right_mul(ux, h)) right_eq = false;
      if (tp.up.left_apply(tp.bottom->left_mul(e.ext.eta[h], x)) != tp.top->left_mul(h, ux)) left_eq = false;
    }
    for (Elem a : e.ext.kernel_embed)
      if (tp.top->right_mul(ux, a) != ux || tp.top->left_mul(a, ux) != ux) trivial_p = false;
  }
  c.set("copies", n);
  c.set("up_injective", injective);
  c.set("down_up_zero", down_up_zero);
  c.set("up_down_is_norm", up_down_norm);
  c.set("right_equivariant", right_eq);
  c.set("left_equivariant", left_eq);
  c.set("kernel_acts_trivially", trivial_p);
  return verdict(injective && down_up_zero && up_down_norm && right_eq && left_eq && trivial_p);
}

Status chk_thm2e_image(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1;
  std::size_t t = bimodule_t(c, n);
  require_bimodule(c, n, t);
  ExtData e = make_extension(c, t, false, true, kBimoduleCap);
  TransferPair tp = transfer_maps(e.ext, n);
  Submodule whole = whole_module(tp.bottom->right_module());
  std::vector<Vec> gens;
  std::size_t k = c.below(4);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(c.random_in(whole.carrier));
  Submodule q0 = generated_submodule(tp.bottom->right_module(), gens);
  Submodule h = make_submodule(tp.top->right_module(), image_of(q0.carrier, tp.up));
  Submodule le = annihilator(*tp.top, h, AnnSide::LeftOfRight);
  Submodule lg = annihilator(*tp.bottom, q0, AnnSide::LeftOfRight);
  FpSubspace img = image_of(le.carrier, tp.down);
  c.set("copies", n);
  c.set("q_dim", q0.dim());
  c.set("l_extension_dim", le.dim());
  c.set("image_dim", img.dim());
  c.set("l_base_dim", lg.dim());
  return verdict(img == lg.carrier);
}

std::vector<FiltrationLayer> layers(const TransferPair& tp, std::size_t upto) {
  std::vector<FiltrationLayer> out;
  for (std::size_t m = 0; m <= upto; ++m) out.push_back(filtration(tp, m));
  return out;
}

Status chk_tp_products(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1;
  std::size_t t = bimodule_t(c, n);
  require_bimodule(c, n, t);
  ExtData e = make_extension(c, t, false, false, kBimoduleCap);
  TransferPair tp = transfer_maps(e.ext, n);
  const std::size_t top_w = t * (c.p() - 1);
  auto ls = layers(tp, top_w + 1);
  bool sides = true, products = true;
  const GroupTable& eg = *e.ext.group;
  const std::size_t oe = eg.order();
  std::vector<std::int64_t> dims;
  for (const auto& l : ls) {
    dims.push_back(std::int64_t(l.two_sided.dim()));
    if (!(l.left_generated == l.two_sided && l.right_generated == l.two_sided)) sides = false;
  }
  std::int64_t pairs = 0;
  for (std::size_t m1 = 1; m1 <= top_w; ++m1)
    for (std::size_t m2 = 1; m1 + m2 <= top_w + 1 && m2 <= m1; ++m2) {
      c.tick();
      std::vector<Vec> prods;
      for (std::size_t i = 0; i < tp.tuples.size(); ++i) {
        std::size_t w = 0;
        for (auto x : tp.tuples[i]) w += x;
        if (w < m1) continue;
        for (std::size_t l = 0; l < n; ++l)
          for (const auto& y : ls[m2].two_sided.basis()) {
            Vec out(tp.top->dim(), 0);
            std::span<const Residue> yl(y.data() + l * oe, oe);
            Vec prod = group_algebra_mul(eg, tp.kernel_factors[i], yl);
            std::copy(prod.begin(), prod.end(), out.begin() + std::ptrdiff_t(l * oe));
            prods.push_back(std::move(out));
          }
      }
      FpSubspace got = generated_submodule(tp.top->left_module(), prods).carrier;
      ++pairs;
      if (!(got == ls[std::min(m1 + m2, top_w + 1)].two_sided)) {
        products = false;
        c.set("failing_m1", m1);
        c.set("failing_m2", m2);
      }
    }
  c.set("copies", n);
  c.d["layer_dims"] = dims;
  c.set("one_sided_equal_two_sided", sides);
  c.set("product_pairs", pairs);
  c.set("product_law", products);
  return verdict(sides && products);
}

Status chk_dd_layers(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1;
  std::size_t t = bimodule_t(c, n);
  require_bimodule(c, n, t);
  ExtData e = make_extension(c, t, false, false, kBimoduleCap);
  TransferPair tp = transfer_maps(e.ext, n);
  const std::size_t top_w = t * (c.p() - 1);
  auto ls = layers(tp, top_w + 1);
  bool trivial = true;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i)
    for (const auto& v : ls[i].two_sided.basis())
      for (Elem a : e.ext.kernel_embed) {
        Vec r = tp.top->right_mul(v, a), l = tp.top->left_mul(a, v);
        axpy(r, c.p() - 1, v, c.p());
        axpy(l, c.p() - 1, v, c.p());
        if (!ls[i + 1].two_sided.contains(r) || !ls[i + 1].two_sided.contains(l)) trivial = false;
      }
  FpSubspace ker = tp.down_kernel();
  bool ker_is_i1 = ker == ls[1].two_sided;
  const std::size_t og = c.g->order();
  std::size_t layer1 = ls[1].two_sided.dim() - ls[2].two_sided.dim();
  Submodule i1 = make_submodule(tp.top->left_module(), ls[1].two_sided);
  Submodule i2 = make_submodule(tp.top->left_module(), ls[2].two_sided);
  std::size_t d_layer = d_G_quotient(i1, i2);
  Submodule kd = make_submodule(tp.top->left_module(), ker);
  std::size_t d_ker = d_G(kd);
  Submodule i1r = make_submodule(tp.top->right_module(), ls[1].two_sided);
  Submodule i2r = make_submodule(tp.top->right_module(), ls[2].two_sided);
  std::size_t d_layer_right = d_G_quotient(i1r, i2r);
  c.set("copies", n);
  c.set("kernel_acts_trivially_on_layers", trivial);
  c.set("ker_down_equals_I1", ker_is_i1);
  c.set("layer1_dim", layer1);
  c.set("layer1_d_left", d_layer);
  c.set("layer1_d_right", d_layer_right);
  c.set("d_ker_down", d_ker);
  bool free = layer1 == n * t * og && d_layer == n * t && d_layer_right == n * t;
  return verdict(trivial && ker_is_i1 && free && d_ker == n * t);
}

Status chk_xp_layers(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1;
  std::size_t t = c.inst.module.t ? c.inst.module.t : 2;
  if (t != 2) throw Skip{"the layer formula is stated for t = 2"};
  require_bimodule(c, n, t);
  ExtData e = make_extension(c, t, false, false, kBimoduleCap);
  TransferPair tp = transfer_maps(e.ext, n);
  const std::uint32_t p = c.p();
  auto ls = layers(tp, 2 * p - 1);
  const std::size_t og = c.g->order();
  std::vector<std::int64_t> got, want;
  bool ok = true;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    std::size_t dim = ls[i].two_sided.dim() - ls[i + 1].two_sided.dim();
    std::size_t copies = i <= p - 1 ? i + 1 : 2 * p - 1 - i;
    got.push_back(std::int64_t(dim));
    want.push_back(std::int64_t(n * copies * og));
    if (dim != n * copies * og) ok = false;
  }
  c.set("copies", n);
  c.d["layer_dims"] = got;
  c.d["expected_dims"] = want;
  return verdict(ok);
}

// ---------------------------------------------------------------- growth laws

struct GrowthSetup {
  QChoice q;
  ExtData e;
  std::size_t n = 0, m = 0, h1e = 0;
};

void record_q(Ctx& c, const QChoice& q, std::size_t n) {
  c.set("copies", n);
  c.set("q_dim", q.mod->dim());
  c.set("h1_G", q.h1);
}

/// Rank of P for the growth laws: the requested one, else 1 or 2 at random when 2 fits.
std::size_t extension_t(Ctx& c) {
  if (c.inst.module.t) return c.inst.module.t;
  std::size_t t = 1 + c.below(2);
  if (c.g->order() * c.p() * c.p() > kExtensionCap) t = 1;
  return t;
}

Status chk_yy_upper(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = choose_copies(c, c.g->order(), 32);
  auto q = choose_q(c, c.g, n, [n](std::size_t h, std::size_t) { return h <= n; });
  if (!q) throw Skip{"no n-G module found"};
  std::size_t t = extension_t(c);
  ExtData e = make_extension(c, t, false, true, kExtensionCap);
  record_q(c, *q, n);
  std::size_t h = c.h1(inflate_to(q->mod, e.ext));
  c.set("h1_E", h);
  c.set("bound", q->h1 + n * t);
  return verdict(h <= q->h1 + n * t);
}

Status chk_gg_growth(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = choose_copies(c, c.g->order(), 32);
  auto q = choose_q(c, c.g, n, [n](std::size_t h, std::size_t) { return h < n; });
  if (!q) throw Skip{"no n-G module with m < n found"};
  ExtData e = make_extension(c, 1, true, false, kExtensionCap);
  record_q(c, *q, n);
  std::size_t h = c.h1(inflate_to(q->mod, e.ext));
  c.set("h1_E", h);
  c.set("bound", n);
  return verdict(h >= n);
}

Status chk_cor8_0(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = choose_copies(c, c.g->order(), 32);
  auto q = choose_q(c, c.g, n, [n](std::size_t h, std::size_t) { return h <= n; });
  if (!q) throw Skip{"no n-G module found"};
  ExtData e = make_extension(c, 1, false, false, kExtensionCap);
  record_q(c, *q, n);
  std::size_t h = c.h1(inflate_to(q->mod, e.ext));
  c.set("h1_E", h);
  if (h != q->h1) throw Skip{"H^1 changes under the extension"};
  return verdict(q->h1 == n);
}

Status chk_jj_lower(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1 + c.below(2);
  while (n > 1 && n * c.g->order() * c.p() > kBimoduleCap) --n;
  require_bimodule(c, n, 1);
  auto q = choose_q(c, c.g, n, [n](std::size_t h, std::size_t) { return h < n; });
  if (!q) throw Skip{"no n-G module with m < n found"};
  ExtData e = make_extension(c, 1, true, false, kBimoduleCap);
  TransferPair tp = transfer_maps(e.ext, n);
  Submodule h = make_submodule(tp.top->right_module(), image_of(q->q.carrier, tp.up));
  Submodule l = annihilator(*tp.top, h, AnnSide::LeftOfRight);
  std::size_t s = d_G(l);
  record_q(c, *q, n);
  c.set("d_annihilator_E", s);
  return verdict(s >= n);
}

Status chk_aa_cases(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = choose_copies(c, c.g->order(), 32);
  auto q = choose_q(c, c.g, n, [n](std::size_t h, std::size_t) { return h < n; });
  if (!q) throw Skip{"no n-G module with m < n found"};
  std::size_t t = extension_t(c);
  ExtData e = make_extension(c, t, false, true, kExtensionCap);
  record_q(c, *q, n);
  std::size_t m = q->h1;
  std::size_t h = c.h1(inflate_to(q->mod, e.ext));
  c.set("h1_E", h);
  if (m == 0) {
    c.set("case", "m=0");
    c.set("expected", t * n);
    return verdict(h == t * n);
  }
  std::size_t bound = m + t * n - t * m + 1;
  c.set("case", "m>=1");
  c.set("bound", bound);
  return verdict(h >= bound);
}

Status chk_qq_cases(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = choose_copies(c, c.g->order(), 32);
  bool part2 = c.below(2) == 1;
  auto q = choose_q(c, c.g, n, [n, part2](std::size_t h, std::size_t) {
    return part2 ? h == n : (h < n && h != 1);
  });
  if (!q) {
    part2 = !part2;
    q = choose_q(c, c.g, n, [n, part2](std::size_t h, std::size_t) { return part2 ? h == n : (h < n && h != 1); });
  }
  if (!q) throw Skip{"no suitable n-G module found"};
  ExtData e = make_extension(c, 2, false, true, kExtensionCap);
  record_q(c, *q, n);
  std::size_t m = q->h1;
  std::size_t h = c.h1(inflate_to(q->mod, e.ext));
  c.set("h1_E", h);
  if (m == n) {
    ExtensionQuotient eq = mod_p1(e.ext);
    std::size_t hq = c.h1(inflate_module(q->mod, eq.quotient.target, eq.to_base));
    c.set("h1_E_mod_P1", hq);
    c.set("case", "(2)");
    if (hq != m) throw Skip{"H^1(E/P1, Q) differs from H^1(G, Q)"};
    c.set("expected", 2 * n);
    return verdict(h == 2 * n);
  }
  if (m == 0) {
    c.set("case", "(1) m=0");
    c.set("expected", 2 * n);
    return verdict(h == 2 * n);
  }
  std::size_t bound = m + 2 * n - 2 * m + 1;
  c.set("case", "(1) m>=2");
  c.set("bound", bound);
  return verdict(h >= bound);
}

Status chk_ggg_exact(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = choose_copies(c, c.g->order(), 32);
  auto q = choose_q(c, c.g, n, [n](std::size_t h, std::size_t) { return h == n; });
  if (!q) throw Skip{"no exactly n-G module found"};
  ExtData e = make_extension(c, 2, false, true, kExtensionCap);
  record_q(c, *q, n);
  ExtensionQuotient eq = mod_p1(e.ext);
  std::size_t hq = c.h1(inflate_module(q->mod, eq.quotient.target, eq.to_base));
  c.set("h1_E_mod_P1", hq);
  if (hq != q->h1) throw Skip{"H^1(E/P1, Q) differs from H^1(G, Q)"};
  std::size_t h = c.h1(inflate_to(q->mod, e.ext));
  c.set("h1_E", h);
  c.set("expected", hq + n);
  return verdict(h == hq + n);
}

Status chk_tu_coker(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  std::size_t n = c.inst.module.copies ? c.inst.module.copies : 1 + c.below(2);
  std::size_t t = c.inst.module.t ? c.inst.module.t : 1 + c.below(2);
  while (n > 1 && n * c.g->order() * ipow(c.p(), t) > kBimoduleCap) --n;
  if (!c.inst.module.t)
    while (t > 1 && n * c.g->order() * ipow(c.p(), t) > kBimoduleCap) --t;
  require_bimodule(c, n, t);
  auto q0 = choose_q(c, c.g, n, [n](std::size_t h, std::size_t) { return h <= n; });
  if (!q0) throw Skip{"no n-G module found"};
  ExtData e = make_extension(c, t, false, true, kBimoduleCap);
  TransferPair tp = transfer_maps(e.ext, n);
  const GroupTable& eg = *e.ext.group;
  const std::uint32_t p = c.p();
  // Q = L_E(up Q0), a left module
  Submodule h = make_submodule(tp.top->right_module(), image_of(q0->q.carrier, tp.up));
  Submodule q = annihilator(*tp.top, h, AnnSide::LeftOfRight);
  std::vector<Vec> xs = minimal_generators(q);
  const std::size_t m = xs.size();
  FpSubspace dq = image_of(q.carrier, tp.down);
  Submodule dqs = make_submodule(tp.bottom->left_module(), dq);
  std::size_t d_down = d_G(dqs);
  record_q(c, *q0, n);
  c.set("m", m);
  c.set("d_down_Q", d_down);
  c.set("down_Q_dim", dq.dim());
  if (!(d_down == m && m <= n)) throw Skip{"d_G(down Q) = d_E(Q) <= n fails"};
  // b = (b_1..b_m) in m copies of F_p(E): basis vector (i, h) maps to h x_i
  const std::size_t oe = eg.order();
  FpMatrix bx(p, m * oe, tp.top->dim());
  for (std::size_t i = 0; i < m; ++i)
    for (Elem x = 0; x < oe; ++x) {
      Vec v = tp.top->left_mul(x, xs[i]);
      std::copy(v.begin(), v.end(), bx.row(i * oe + x).begin());
    }
  FpSubspace dspace = left_kernel(bx * tp.down);
  FpSubspace xi_img = image_of(dspace, bx);
  FpSubspace ker = tp.down_kernel();
  FpSubspace i2 = filtration(tp, 2).two_sided;
  std::size_t target = ker.dim() - i2.dim();
  std::size_t img = xi_img.sum(i2).dim() - i2.dim();
  std::size_t coker = target - img;
  const std::int64_t bound = std::int64_t(c.g->order()) * (std::int64_t(n * t) - std::int64_t(m)) -
                             (std::int64_t(t) - 1) * std::int64_t(dq.dim());
  c.set("D_dim", dspace.dim());
  c.set("xi_image_dim", img);
  c.set("ker_mod_I2_dim", target);
  c.set("coker_dim", coker);
  c.set("bound_dim", bound);
  return verdict(std::int64_t(coker) >= bound);
}

Status chk_kj_h2(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  auto q = choose_q(c, c.g, 1, [&](std::size_t h, std::size_t dim) {
    std::size_t eo = 2 * c.g->order() * (c.p() / 2 + 1);
    (void)eo;
    return h <= 1 && (dim == 0 || ipow(c.g->order() * c.p(), 2) * dim <= kH2Cap);
  });
  if (!q) throw Unsupported{"no 1-G module within the second cohomology cap"};
  ExtData e = make_extension(c, 1, false, false, kExtensionCap);
  const std::size_t eo = e.ext.group->order();
  if (eo > kDegree2OrderCap || eo * eo * q->mod->dim() > kH2Cap) throw Unsupported{"second cohomology cap"};
  record_q(c, *q, 1);
  ModulePtr qe = inflate_to(q->mod, e.ext);
  std::size_t h = c.h1(qe);
  c.set("h1_E", h);
  if (h != q->h1) throw Skip{"H^1 changes under the extension"};
  c.tick();
  std::size_t h2 = cohomology(qe, 2).h_dim;
  std::size_t d = d_G(*q->mod);
  c.set("h2_E", h2);
  c.set("d_G", d);
  return verdict(h2 == 1 && d == 1);
}

/// The kernel elements of an extension, as elements of the extension group.
std::vector<Elem> kernel_elems(const Extension& e) { return e.kernel_embed; }

Status chk_dp_dim(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  if (c.g->order() * c.p() * c.p() > kDegree2OrderCap) throw Unsupported{"|E| > 64"};
  ExtData e = make_extension(c, 2, false, true, kDegree2OrderCap);
  c.tick();
  auto s = sample_module_where(e.ext.group, 1, c.next_seed(), [](std::size_t h) { return h <= 1; }, 16);
  if (!s) throw Skip{"no 1-E module found"};
  ModulePtr q = restrict_module(s->q);
  std::size_t fixed = fixed_points_under(*q, kernel_elems(e.ext)).dim();
  c.set("q_dim", q->dim());
  c.set("h1_E", c.h1(q));
  c.set("fixed_N_dim", fixed);
  return verdict(q->dim() >= c.p() * fixed);
}

Status chk_rty_eq(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  if (c.g->order() * c.p() * c.p() > kExtensionCap) throw Unsupported{"extension order cap"};
  ExtData e = make_extension(c, 2, false, true, kExtensionCap);
  ExtensionQuotient eq = mod_p1(e.ext);
  const GroupPtr& hq = eq.quotient.target;
  if (hq->order() > kDegree2OrderCap) throw Unsupported{"|E/N1| > 64"};
  for (int round = 0; round < 6; ++round) {
    c.tick();
    auto s = sample_module_where(hq, 1, c.next_seed(), [](std::size_t h) { return h <= 1; }, 8);
    if (!s) continue;
    ModulePtr q = restrict_module(s->q);
    std::size_t hh = c.h1(q);
    std::vector<Elem> on_e(e.ext.group->order());
    for (Elem x = 0; x < on_e.size(); ++x) on_e[x] = eq.quotient.image_of[x];
    ModulePtr qe = inflate_module(q, e.ext.group, on_e);
    std::size_t he = c.h1(qe);
    if (he != hh) continue;
    std::vector<Elem> n_img;
    for (Elem a : e.ext.kernel_embed) n_img.push_back(eq.quotient.image_of[a]);
    FpSubspace qn = fixed_points_under(*q, n_img);
    std::size_t d = d_G(make_submodule(q, qn));
    c.set("q_dim", q->dim());
    c.set("h1", hh);
    c.set("fixed_N_dim", qn.dim());
    c.set("d_fixed_N", d);
    return verdict(q->dim() == c.p() * qn.dim() && d == 1);
  }
  throw Skip{"no 1-module with equal H^1 over E/N1 and E found"};
}

Status chk_xu_free(Ctx& c) {
  require_order(c, kModuleGroupCap, "module");
  const GroupTable& g = *c.g;
  auto mins = minimal_normals(g);
  Subgroup nsub = mins[c.below(mins.size())];
  std::string how;
  ModulePtr q = general_module(c, &how);
  c.set("module_kind", how);
  std::size_t fixed = fixed_points_under(*q, nsub.members()).dim();
  c.set("q_dim", q->dim());
  c.set("fixed_N_dim", fixed);
  if (q->dim() != c.p() * fixed) throw Skip{"dim Q != p dim Q^N"};
  GroupPtr nt = subgroup_table(g, nsub);
  ModulePtr qn = restrict_to_subgroup(q, nt, nsub);
  std::size_t dn = d_G(*qn), hn = c.h1(qn);
  c.set("d_N", dn);
  c.set("h1_N", hn);
  return verdict(dn == fixed && hn == 0);
}

/// Extension of G by a G-module Q through a random tau in Z^2(G, Q).
ExtData module_extension(Ctx& c, const ModulePtr& q) {
  if (c.g->order() * ipow(c.p(), q->dim()) > kExtensionCap) throw Unsupported{"extension order cap"};
  ExtData e;
  e.t = q->dim();
  e.kernel = q;
  auto tau = random_cocycle(c, q, false);
  e.ext = build_extension(*tau, kMaxOrderCap);
  c.set("extension_order", e.ext.group->order());
  return e;
}

/// A 1-module for G/X inflated to G with equal H^1, small enough for module_extension.
struct QuotModule {
  QuotientMap quot;
  ModulePtr over_quotient;
  ModulePtr over_g;
  std::size_t h1 = 0;
};

/// Throws Skip when no candidate satisfies the hypothesis and Unsupported when only the cap excluded them.
QuotModule one_module_of_quotient(Ctx& c, const Subgroup& x, std::size_t max_dim) {
  QuotientMap qm = quotient(c.g, x);
  bool capped = false;
  for (int round = 0; round < 12; ++round) {
    c.tick();
    auto s = sample_module_where(qm.target, 1, c.next_seed(), [](std::size_t h) { return h <= 1; }, 8);
    if (!s) continue;
    ModulePtr q = restrict_module(s->q);
    if (q->dim() > max_dim) {
      capped = true;
      continue;
    }
    ModulePtr qg = inflate_module(q, c.g, qm.image_of);
    std::size_t hq = c.h1(q), hg = c.h1(qg);
    if (hq != hg) continue;
    return QuotModule{qm, q, qg, hq};
  }
  if (capped) throw Unsupported{"extension order cap"};
  throw Skip{"no 1-G/N module with equal H^1 found"};
}

std::size_t max_kernel_dim(const Ctx& c) {
  std::size_t d = 0;
  while (c.g->order() * ipow(c.p(), d + 1) <= kExtensionCap &&
         c.g->order() * c.g->order() * (d + 1) <= kCocycleCap)
    ++d;
  return d;
}

Status chk_io_rank(Ctx& c) {
  const GroupTable& g = *c.g;
  require_order(c, kModuleGroupCap, "module");
  if (is_cyclic(g, whole_group(g))) throw Skip{"G is cyclic"};
  auto mins = minimal_normals(g);
  Subgroup n = mins[c.below(mins.size())];
  auto qm = std::make_optional(one_module_of_quotient(c, n, max_kernel_dim(c)));
  ExtData e = module_extension(c, qm->over_g);
  std::size_t ea = 0;
  std::vector<Subgroup> ea_list;
  for (const auto& s : normal_subgroups(g, kMaxOrderCap))
    if (s.size() > 1 && is_elementary_abelian(g, s)) {
      ++ea;
      ea_list.push_back(s);
    }
  std::size_t dg = generator_rank(g, whole_group(g));
  c.set("q_dim", qm->over_g->dim());
  c.set("h1", qm->h1);
  c.set("normal_elementary_abelian", ea);
  c.set("tag_dihedral_or_quaternion", false);
  if (ea == 1) {
    std::size_t de = generator_rank(*e.ext.group, whole_group(*e.ext.group));
    c.set("case", "(1)");
    c.set("d_G", dg);
    c.set("d_E", de);
    return verdict(de == dg + 1);
  }
  // (2): T = C_p x C_p normal containing N, T1 normal in H = E/J(Q) with T1 x ker = preimage of T
  c.set("case", "(2)");
  Submodule whole = whole_module(qm->over_g);
  ExtensionQuotient hq = quotient_by_kernel_part(e.ext, e.ext.kernel_part(radical(whole)));
  const GroupTable& h = *hq.quotient.target;
  std::vector<Elem> kerpi;
  for (Elem y = 0; y < h.order(); ++y)
    if (hq.to_base[y] == 0) kerpi.push_back(y);
  Subgroup kp(h, kerpi);
  bool any_t = false;
  for (const auto& t : ea_list) {
    if (t.size() != c.p() * c.p() || !n.subset_of(t)) continue;
    any_t = true;
    std::vector<Elem> pre;
    for (Elem y = 0; y < h.order(); ++y)
      if (t.contains(hq.to_base[y])) pre.push_back(y);
    Subgroup s = subgroup_closure(h, pre);
    for (const auto& t1 : normal_subgroups(h, s, kMaxOrderCap)) {
      if (t1.size() * kp.size() != s.size()) continue;
      if (meet(h, t1, kp).size() != 1) continue;
      bool commute = true;
      for (Elem a : t1.members())
        for (Elem b : kerpi)
          if (h.mul(a, b) != h.mul(b, a)) commute = false;
      if (commute) {
        c.set("t1_found", true);
        return Status::Pass;
      }
    }
  }
  if (!any_t) throw Skip{"neither a unique normal elementary abelian subgroup nor C_p^2 containing N"};
  c.set("t1_found", false);
  return Status::Counterexample;
}

Status chk_jx_rank(Ctx& c) {
  const GroupTable& g = *c.g;
  require_order(c, kModuleGroupCap, "module");
  if (!g.is_abelian()) throw Skip{"G is not abelian"};
  Elem x = Elem(c.below(g.order()));
  Subgroup n = subgroup_closure(g, {x});
  std::size_t maxd = max_kernel_dim(c);
  for (int round = 0; round < 12; ++round) {
    c.tick();
    auto s = sample_module_where(c.g, 1, c.next_seed(), [](std::size_t h) { return h <= 1; }, 8);
    if (!s) continue;
    ModulePtr q = restrict_module(s->q);
    if (q->dim() > maxd) continue;
    FpSubspace qn = fixed_points_under(*q, n.members());
    ModulePtr qnm = restrict_module(make_submodule(q, qn));
    QuotientMap qm = quotient(c.g, n);
    std::size_t a = c.h1(descend_module(qnm, qm)), b = c.h1(qnm);
    if (a != b) continue;
    ExtData e = module_extension(c, q);
    std::size_t dg = generator_rank(g, whole_group(g));
    std::size_t de = generator_rank(*e.ext.group, whole_group(*e.ext.group));
    c.set("N_order", n.size());
    c.set("q_dim", q->dim());
    c.set("d_G", dg);
    c.set("d_E", de);
    return verdict(de == dg + 1);
  }
  throw Skip{"no 1-G module with equal H^1 on Q^N within the extension cap"};
}

Status chk_px_iff(Ctx& c) {
  const GroupTable& g = *c.g;
  require_order(c, kModuleGroupCap, "module");
  auto mins = minimal_normals(g);
  if (mins.size() < 2) throw Skip{"fewer than two minimal normal subgroups"};
  std::size_t i = c.below(mins.size()), j = c.below(mins.size() - 1);
  if (j >= i) ++j;
  const Subgroup &n1 = mins[i], &n2 = mins[j];
  Subgroup both = join(g, n1, n2);
  QuotientMap qm = quotient(c.g, n1);
  for (int round = 0; round < 12; ++round) {
    c.tick();
    auto s = sample_module_where(qm.target, 1, c.next_seed(), [](std::size_t h) { return h <= 1; }, 8);
    if (!s) continue;
    ModulePtr q = restrict_module(s->q);
    ModulePtr qg = inflate_module(q, c.g, qm.image_of);
    FpSubspace cq = fixed_points_under(*qg, both.members());
    if (qg->dim() != c.p() * cq.dim()) continue;
    ModulePtr cg = restrict_module(make_submodule(qg, cq));
    ModulePtr cquot = descend_module(cg, qm);
    std::size_t hcg = c.h1(cg), hcq = c.h1(cquot), hqg = c.h1(qg), hqq = c.h1(q);
    c.set("q_dim", qg->dim());
    c.set("c_dim", cq.dim());
    c.set("h1_G_C", hcg);
    c.set("h1_quotient_C", hcq);
    c.set("h1_G_Q", hqg);
    c.set("h1_quotient_Q", hqq);
    return verdict((hcg == hcq) == (hqg == hqq));
  }
  throw Skip{"no 1-module with dim Q = p dim C_Q(N1 N2) found"};
}

Status chk_du_growth(Ctx& c) {
  const GroupTable& g = *c.g;
  require_order(c, kModuleGroupCap, "module");
  std::vector<Subgroup> cyc;
  for (const auto& s : normal_subgroups(g, kMaxOrderCap))
    if (s.size() > 1 && is_cyclic(g, s)) cyc.push_back(s);
  if (cyc.empty()) throw Skip{"no non-trivial cyclic normal subgroup"};
  Subgroup n = cyc[c.below(cyc.size())];
  auto qm = std::make_optional(one_module_of_quotient(c, n, max_kernel_dim(c)));
  ExtData e = module_extension(c, qm->over_g);
  Submodule whole = whole_module(qm->over_g);
  FpSubspace jq = radical(whole);
  ExtensionQuotient hq = quotient_by_kernel_part(e.ext, e.ext.kernel_part(jq));
  ModulePtr jm = restrict_module(make_submodule(qm->over_g, jq));
  std::size_t hh = c.h1(inflate_module(jm, hq.quotient.target, hq.to_base));
  std::size_t hgj = c.h1(jm);
  c.set("N_order", n.size());
  c.set("q_dim", qm->over_g->dim());
  c.set("j_dim", jq.dim());
  c.set("h1_H_J", hh);
  c.set("h1_G_J", hgj);
  return verdict(hh == hgj + 1);
}

// ---------------------------------------------------------------- special-subgroup checks

/// Iterates special N satisfying `gate`, then calls body.
template <class Gate, class Body>
Status special_sweep(Ctx& c, GroupFacts& f, Gate gate, Body body) {
  Sweep sw(c);
  for (const auto& n : candidate_normals(c)) {
    c.tick();
    if (!n.subset_of(f.phi)) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    const NData& d = f.data(n);
    if (!d.info.special || !gate(d)) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    bool go = true;
    body(d, [&](std::optional<ConfigResult> r) {
      if (go) go = sw.add(std::move(r));
      return go;
    });
    if (!go) break;
  }
  return sw.finish();
}

ConfigResult base_result(const NData& d) {
  ConfigResult r{Status::Pass, {}};
  describe(r.d, "N", d.n);
  r.d["h1_N_W"] = std::int64_t(d.h1);
  r.d["all_inner"] = d.all_inner;
  return r;
}

Status trichotomy(Ctx& c, GroupFacts& f, const NData& d, Details& out, bool by_size_only = false) {
  bool smaller = false, larger = false;
  f.alternatives(d.n, out, &smaller, &larger, by_size_only);
  if (smaller || larger) {
    out["route"] = std::string(smaller ? "smaller-special" : "special-with-larger-I");
    return Status::Pass;
  }
  return existence(c, out, d.noninner);
}

Status chk_ty(Ctx& c) {
  nonabelian_or_skip(c);
  GroupFacts f(c);
  const GroupTable& g = *c.g;
  return special_sweep(c, f, [](const NData& d) { return d.n.size() < d.info.product.size(); },
                       [&](const NData& d, auto emit) {
                         std::size_t h_big = f.h1(d.info.product, d.w).h1;
                         if (d.h1 < h_big + 1) return emit(std::nullopt);
                         ConfigResult r = base_result(d);
                         r.d["h1_NC_W"] = std::int64_t(h_big);
                         r.status = existence(c, r.d, d.noninner);
                         (void)g;
                         return emit(r);
                       });
}

Status chk_j(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  Sweep sw(c);
  for (const auto& a : candidate_normals(c)) {
    c.tick();
    ISet ia = iset(g, centralizer(g, a));
    bool ok_a = a.subset_of(f.phi) &&
                std::all_of(ia.members.begin(), ia.members.end(), [&](Elem x) { return a.contains(x); });
    if (!ok_a) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    bool stop = false;
    for (const auto& a1 : f.normals) {
      if (a1.size() != a.size() * g.p() || !a.subset_of(a1) || !f.z.subset_of(a1)) continue;
      Subgroup w1 = omega1(g, meet(g, a1, centralizer(g, a1)));
      std::size_t h_a1 = f.h1(a1, w1).h1, h_a = f.h1(a, w1).h1;
      if (h_a1 != h_a) {
        if (!sw.add(std::nullopt)) {
          stop = true;
          break;
        }
        continue;
      }
      ConfigResult r{Status::Pass, {}};
      describe(r.d, "A", a);
      describe(r.d, "A1", a1);
      r.d["h1"] = std::int64_t(h_a);
      bool in = a1.subset_of(f.phi);
      r.d["a1_inside_frattini"] = in;
      r.status = verdict(in);
      if (!sw.add(r)) {
        stop = true;
        break;
      }
    }
    if (stop) break;
  }
  return sw.finish();
}

Status chk_l3_2(Ctx& c) {
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  Sweep sw(c);
  for (const auto& n : candidate_normals(c)) {
    c.tick();
    if (n.size() == 1 || !n.subset_of(f.phi)) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    Subgroup w = omega1(g, meet(g, n, centralizer(g, n)));
    std::size_t h = f.h1(n, w).h1;
    if (h != 0) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    ConfigResult r{Status::Pass, {}};
    describe(r.d, "N", n);
    r.d["w_order"] = std::int64_t(w.size());
    r.status = verdict(w.size() < n.size());
    if (!sw.add(r)) break;
  }
  return sw.finish();
}

Status chk_xi(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(c, f, [](const NData& d) { return d.all_inner; }, [&](const NData& d, auto emit) {
    for (const auto& a : f.normals) {
      if (!d.n.subset_of(a)) continue;
      Subgroup cw = meet(g, d.w, centralizer(g, a));
      const auto& h = f.h1(a, cw);
      ConfigResult r = base_result(d);
      describe(r.d, "A", a);
      r.d["c_w_a_order"] = std::int64_t(cw.size());
      r.d["fixed_dim"] = std::int64_t(cw.size() > 1 ? h.fixed : 0);
      r.d["h1_A"] = std::int64_t(h.h1);
      r.d["n"] = std::int64_t(f.n_rank);
      r.status = verdict(cw.size() > 1 && h.fixed == f.n_rank && h.h1 <= f.n_rank);
      if (!emit(r)) return false;
    }
    return true;
  });
}

Status chk_yu(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(c, f, [](const NData& d) { return d.all_inner; }, [&](const NData& d, auto emit) {
    for (const auto& a2 : f.normals) {
      if (!d.n.subset_of(a2)) continue;
      Subgroup cw2 = meet(g, d.w, centralizer(g, a2));
      for (const auto& a1 : f.normals) {
        if (!(a2.subset_of(a1) && a2.size() < a1.size())) continue;
        Subgroup cw1 = meet(g, d.w, centralizer(g, a1));
        std::size_t h = f.h1(a2, cw1).h1;
        if (h < d.h1 + 1) {
          if (!emit(std::nullopt)) return false;
          continue;
        }
        ConfigResult r = base_result(d);
        describe(r.d, "A1", a1);
        describe(r.d, "A2", a2);
        r.d["h1_A2_CWA1"] = std::int64_t(h);
        bool strict = proper_subset(cw1.members(), cw2.members());
        r.d["strict"] = strict;
        r.status = verdict(strict);
        if (!emit(r)) return false;
      }
    }
    return true;
  });
}

Status chk_hh(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  Sweep sw(c);
  for (const auto& n : candidate_normals(c)) {
    c.tick();
    Subgroup cn = centralizer(g, n);
    if (!cn.subset_of(n) || !n.subset_of(f.phi)) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    Subgroup w = omega1(g, meet(g, n, cn));
    const auto& h = f.h1(n, w, true);
    if (h.h1 >= f.n_rank) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    ConfigResult r{Status::Pass, {}};
    describe(r.d, "N", n);
    r.d["h1_N_W"] = std::int64_t(h.h1);
    bool smaller = false;
    for (const auto& n1 : f.normals)
      if (n1.size() < n.size() && n1.subset_of(n) && centralizer(g, n1).subset_of(n1)) smaller = true;
    r.d["smaller_self_centralizing"] = smaller;
    if (smaller)
      r.d["route"] = std::string("smaller-self-centralizing");
    else
      r.status = existence(c, r.d, h.noninner);
    if (!sw.add(r)) break;
  }
  return sw.finish();
}

Status chk_ll(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(c, f, [](const NData& d) { return d.exactly && d.all_inner; },
                       [&](const NData& d, auto emit) {
                         for (const auto& n1 : f.normals) {
                           if (!d.zw.subset_of(n1)) continue;
                           Subgroup cn = join(g, centralizer(g, n1), d.n);
                           ConfigResult r = base_result(d);
                           describe(r.d, "N1", n1);
                           bool cyc = quotient_is_cyclic(g, cn, d.n);
                           r.d["quotient_cyclic"] = cyc;
                           r.status = verdict(cyc);
                           if (!emit(r)) return false;
                         }
                         return true;
                       });
}

Status chk_qp(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  Sweep sw(c);
  for (const auto& n : candidate_normals(c)) {
    c.tick();
    Subgroup cn = centralizer(g, n);
    ISet ic = iset(g, cn);
    bool hyp = n.subset_of(f.phi) &&
               std::all_of(ic.members.begin(), ic.members.end(), [&](Elem x) { return n.contains(x); }) &&
               !join(g, n, cn).subset_of(f.phi);
    if (!hyp) {
      if (!sw.add(std::nullopt)) break;
      continue;
    }
    ConfigResult r{Status::Pass, {}};
    describe(r.d, "N", n);
    Subgroup w = omega1(g, meet(g, n, cn));
    const auto& h = f.h1(n, w, true);
    r.status = existence(c, r.d, h.noninner);
    if (!sw.add(r)) break;
  }
  return sw.finish();
}

/// N1 with Z(G) Omega_1(Z(N)) <= N1 < N and |N / N1| = p.
std::vector<Subgroup> maximal_normal_above(const GroupTable& g, const std::vector<Subgroup>& normals,
                                           const Subgroup& zw, const Subgroup& n, bool strict_lower) {
  std::vector<Subgroup> out;
  for (const auto& n1 : normals) {
    if (n1.size() * g.p() != n.size() || !n1.subset_of(n) || !zw.subset_of(n1)) continue;
    if (strict_lower && zw.size() == n1.size()) continue;
    out.push_back(n1);
  }
  return out;
}

Status chk_kl(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(c, f, [](const NData& d) { return d.exactly && d.all_inner; },
                       [&](const NData& d, auto emit) {
                         auto cands = maximal_normal_above(g, f.normals, d.zw, d.n, false);
                         ConfigResult r = base_result(d);
                         r.d["n1_candidates"] = std::int64_t(cands.size());
                         bool noncyc_nzw = !quotient_is_cyclic(g, d.n, d.zw);
                         r.d["n_over_zw_noncyclic"] = noncyc_nzw;
                         bool further = !noncyc_nzw;
                         Subgroup cn = join(g, d.info.centralizer, d.n);
                         for (const auto& n1 : cands)
                           if (!quotient_is_cyclic(g, cn, n1)) further = true;
                         r.d["noncyclic_witness"] = further;
                         r.status = verdict(!cands.empty() && further);
                         return emit(r);
                       });
}

Status chk_qk(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(
      c, f,
      [](const NData& d) {
        return d.exactly && d.all_inner && d.info.centralizer.size() > d.info.center_of_n.size();
      },
      [&](const NData& d, auto emit) {
        Subgroup cn = join(g, d.info.centralizer, d.n);
        for (const auto& n1 : maximal_normal_above(g, f.normals, d.zw, d.n, false)) {
          Subgroup c1 = join(g, centralizer(g, n1), n1);
          if (quotient_is_cyclic(g, cn, n1) || quotient_is_cyclic(g, c1, n1)) {
            if (!emit(std::nullopt)) return false;
            continue;
          }
          ConfigResult r = base_result(d);
          describe(r.d, "N1", n1);
          const auto& h = f.h1(n1, d.w, true);
          r.status = existence(c, r.d, h.noninner);
          if (!emit(r)) return false;
        }
        return true;
      });
}

Status chk_xx(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(
      c, f,
      [&](const NData& d) {
        return d.exactly && d.all_inner && !quotient_is_cyclic(g, d.n, d.zw) &&
               d.info.centralizer.size() > d.info.center_of_n.size();
      },
      [&](const NData& d, auto emit) {
        ConfigResult r = base_result(d);
        r.status = trichotomy(c, f, d, r.d);
        return emit(r);
      });
}

Status chk_xy(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(
      c, f, [&](const NData& d) { return d.exactly && d.all_inner && !quotient_is_cyclic(g, d.n, d.zw); },
      [&](const NData& d, auto emit) {
        for (const auto& n1 : f.normals) {
          if (!(d.zw.subset_of(n1) && n1.subset_of(d.n) && n1.size() < d.n.size())) continue;
          if (!(join(g, d.info.center_of_n, n1) == d.n)) continue;
          Subgroup cn1 = join(g, centralizer(g, n1), d.n);
          if (cn1.size() <= d.n.size()) continue;
          const auto& h = f.h1(n1, d.w, true);
          if (h.h1 < d.h1 + 2) {
            if (!emit(std::nullopt)) return false;
            continue;
          }
          ConfigResult r = base_result(d);
          describe(r.d, "N1", n1);
          r.d["h1_N1_W"] = std::int64_t(h.h1);
          r.status = existence(c, r.d, h.noninner);
          if (!emit(r)) return false;
        }
        return true;
      });
}

Status chk_t9_2(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(
      c, f,
      [&](const NData& d) {
        return d.exactly && d.all_inner && !quotient_is_cyclic(g, d.n, d.zw) && d.info.centralizer.subset_of(d.n);
      },
      [&](const NData& d, auto emit) {
        for (const auto& n1 : maximal_normal_above(g, f.normals, d.zw, d.n, true)) {
          Subgroup c1 = join(g, centralizer(g, n1), n1);
          if (quotient_is_cyclic(g, c1, n1)) {
            if (!emit(std::nullopt)) return false;
            continue;
          }
          ConfigResult r = base_result(d);
          describe(r.d, "N1", n1);
          bool smaller = false, larger = false;
          f.alternatives(d.n, r.d, &smaller, &larger, true);
          if (larger) {
            r.d["route"] = std::string("special-with-larger-I");
          } else {
            const auto& h = f.h1(n1, d.w, true);
            r.status = existence(c, r.d, h.noninner);
          }
          if (!emit(r)) return false;
        }
        return true;
      });
}

Status chk_tt(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(
      c, f,
      [&](const NData& d) {
        return d.exactly && d.all_inner && !quotient_is_cyclic(g, d.n, d.zw) && d.info.centralizer.subset_of(d.n);
      },
      [&](const NData& d, auto emit) {
        for (const auto& n1 : maximal_normal_above(g, f.normals, d.zw, d.n, false)) {
          Subgroup c1 = join(g, centralizer(g, n1), n1);
          if (c1.size() == n1.size() || !quotient_is_cyclic(g, c1, n1)) {
            if (!emit(std::nullopt)) return false;
            continue;
          }
          ConfigResult r = base_result(d);
          describe(r.d, "N1", n1);
          r.status = trichotomy(c, f, d, r.d, true);
          if (!emit(r)) return false;
        }
        return true;
      });
}

Status chk_xpl(Ctx& c) {
  nonabelian_or_skip(c);
  const GroupTable& g = *c.g;
  GroupFacts f(c);
  return special_sweep(
      c, f, [&](const NData& d) { return d.exactly && d.all_inner && quotient_is_cyclic(g, d.n, d.zw); },
      [&](const NData& d, auto emit) {
        ConfigResult r = base_result(d);
        r.status = trichotomy(c, f, d, r.d, true);
        return emit(r);
      });
}

Status chk_ui(Ctx& c) {
  nonabelian_or_skip(c);
  GroupFacts f(c);
  return special_sweep(c, f, [](const NData&) { return true; }, [&](const NData& d, auto emit) {
    ConfigResult r = base_result(d);
    r.status = trichotomy(c, f, d, r.d, true);
    return emit(r);
  });
}

Status chk_cor18(Ctx& c) {
  nonabelian_or_skip(c);
  c.tick();
  DescentOutcome out = descent(c.g);
  c.set("paper_route_succeeded", out.paper_route_succeeded);
  if (out.diagnostic) c.set("diagnostic", out.diagnostic->reason);
  bool ok = out.certificate && verify_certificate(c.g, *out.certificate).ok();
  if (ok) c.set("route", out.certificate->provenance.route);
  if (c.g->order() <= 16) {
    BruteForceResult bf = brute_force_order_p_noninner(*c.g);
    c.set("brute_force_exists", bf.exists);
    c.set("automorphisms", bf.automorphisms);
    if (bf.exists != ok) return Status::Counterexample;
  }
  if (!ok) {
    auto cert = cached_engine(c.g);
    ok = cert && verify_certificate(c.g, *cert).ok();
    if (ok) c.set("route", "engine:" + cert->provenance.route);
  }
  return verdict(ok);
}

// ---------------------------------------------------------------- registry

using CheckFn = Status (*)(Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"lp_order", chk_lp_order},
      {"ij_bound", chk_ij_bound},
      {"ddd_iso", chk_ddd_iso},
      {"thm5_5", chk_thm5_5},
      {"gen_count", chk_gen_count},
      {"cc_bound", chk_cc_bound},
      {"ut_embed", chk_ut_embed},
      {"free_iff_h1zero", chk_free_iff_h1zero},
      {"dual_fixed", chk_dual_fixed},
      {"dual_gens", chk_dual_gens},
      {"l00_duality", chk_l00_duality},
      {"ww_bridge", chk_ww_bridge},
      {"xo_unique", chk_xo_unique},
      {"to_iso", chk_to_iso},
      {"thm2e_image", chk_thm2e_image},
      {"tp_products", chk_tp_products},
      {"dd_layers", chk_dd_layers},
      {"xp_layers", chk_xp_layers},
      {"yy_upper", chk_yy_upper},
      {"tu_coker", chk_tu_coker},
      {"jj_lower", chk_jj_lower},
      {"gg_growth", chk_gg_growth},
      {"cor8_0", chk_cor8_0},
      {"aa_cases", chk_aa_cases},
      {"qq_cases", chk_qq_cases},
      {"ggg_exact", chk_ggg_exact},
      {"kj_h2", chk_kj_h2},
      {"dp_dim", chk_dp_dim},
      {"rty_eq", chk_rty_eq},
      {"xu_free", chk_xu_free},
      {"io_rank", chk_io_rank},
      {"jx_rank", chk_jx_rank},
      {"px_iff", chk_px_iff},
      {"du_growth", chk_du_growth},
      {"ty", chk_ty},
      {"j", chk_j},
      {"l3_2", chk_l3_2},
      {"xi", chk_xi},
      {"yu", chk_yu},
      {"hh", chk_hh},
      {"ll", chk_ll},
      {"qp", chk_qp},
      {"kl", chk_kl},
      {"qk", chk_qk},
      {"xx", chk_xx},
      {"xy", chk_xy},
      {"t9_2", chk_t9_2},
      {"tt", chk_tt},
      {"xpl", chk_xpl},
      {"ui", chk_ui},
      {"cor18", chk_cor18},
  };
  return r;
}

CheckVerdict run_impl(const std::string& id_in, const CheckInstance& inst, bool dense, bool* fast_used) {
  const std::string id = canonical_check_id(id_in);
  CheckFn fn = nullptr;
  for (const auto& [k, f] : registry())
    if (k == id) fn = f;
  CheckVerdict v;
  v.check_id = id;
  v.instance = inst.descriptor();
  v.replay_seed = inst.seed;
  if (!inst.group) throw Error("check instance has no group");
  Ctx c(id, inst, dense);
  try {
    v.status = fn(c);
  } catch (const Skip& s) {
    v.status = Status::SkippedHypothesis;
    c.d["reason"] = s.reason;
  } catch (const Unsupported& u) {
    v.status = Status::Unsupported;
    c.d["reason"] = u.reason;
  } catch (const BudgetExceeded&) {
    v.status = Status::Unsupported;
    c.d["reason"] = std::string("budget exceeded");
  } catch (const Error& e) {
    v.status = Status::Unsupported;
    c.d["reason"] = std::string(e.what());
  }
  v.details = std::move(c.d);
  if (fast_used) *fast_used = c.used_fast_solver;
  return v;
}

nlohmann::json detail_json(const DetailValue& v) {
  return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [k, f] : registry()) out.push_back(k);
    return out;
  }();
  return ids;
}

std::string canonical_check_id(const std::string& id) {
  if (id == "thm_gg") return "gg_growth";
  for (const auto& k : check_ids())
    if (k == id) return k;
  throw Error("unknown check id: " + id);
}

CheckVerdict run_check(const std::string& id, const CheckInstance& inst) {
  return run_impl(id, inst, false, nullptr);
}

ReverifyResult reverify(const CheckVerdict& v, const CheckInstance& inst) {
  CheckInstance again = inst;
  again.seed = v.replay_seed;
  again.budget_ms = 0;
  bool fast = false;
  ReverifyResult r;
  r.recomputed = run_impl(v.check_id, again, true, &fast);
  r.solver = fast ? "mixed" : "dense";
  r.agrees = r.recomputed.status == v.status && r.recomputed.details == v.details;
  return r;
}

std::string verdict_to_json(const CheckVerdict& v) {
  nlohmann::json j;
  j["check_id"] = v.check_id;
  j["instance"] = v.instance;
  j["status"] = status_name(v.status);
  j["replay_seed"] = v.replay_seed;
  nlohmann::json d = nlohmann::json::object();
  for (const auto& [k, x] : v.details) d[k] = detail_json(x);
  j["details"] = d;
  return j.dump();
}

}  // namespace pgv
