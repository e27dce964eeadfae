// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "pgv/catalog.hpp"
#include "pgv/checks.hpp"
#include "pgv/noninner.hpp"
#include "pgv/suite.hpp"
#include "oracles.hpp"

using namespace pgv;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<const CatalogEntry*> entries(const std::string& filter) {
  return select_entries(builtin_catalog(), TagExpr::parse(filter));
}

GroupPtr builtin(const std::string& name) { return entry_group(*find_entry(builtin_catalog(), name)); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. certificates for every non-abelian group of order <= 64 and every group of order 81
Outcome existence_sweep() {
  Outcome o;
  auto start = Clock::now();
  double worst = 0;
  std::string worst_name, failures;
  std::size_t n = 0;
  for (const CatalogEntry* e : entries("nonabelian & order<=64 | order=81")) {
    auto t = Clock::now();
    GroupPtr g = entry_group(*e);
    auto c = engine_sweep(g);
    bool ok = c && verify_certificate(g, certificate_from_json(certificate_to_json(*c))).ok();
    double s = seconds_since(t);
    if (s > worst) worst = s, worst_name = e->name;
    if (!ok || s > 5.0) {
      o.pass = false;
      failures += " " + e->name;
    }
    ++n;
  }
  double total = seconds_since(start);
  if (total > 600) o.pass = false;
  o.summary = fmt("%zu groups certified and verified, slowest %s %.2fs, total %.1fs", n, worst_name.c_str(), worst,
                  total);
  if (!failures.empty()) o.summary += "; failed:" + failures;
  return o;
}

// 2. brute force agrees with the sweep on existence
Outcome oracle_agreement() {
  Outcome o;
  std::size_t n = 0;
  for (const CatalogEntry* e : entries("nonabelian & order<=16")) {
    GroupPtr g = entry_group(*e);
    BruteForceResult b = brute_force_order_p_noninner(*g);
    bool sweep = engine_sweep(g).has_value();
    if (b.exists != sweep || !b.exists) {
      o.pass = false;
      o.summary += " " + e->name;
    }
    ++n;
  }
  o.summary = fmt("%zu groups, brute force and sweep agree (all exist)", n) +
              (o.summary.empty() ? "" : "; disagreements:" + o.summary);
  return o;
}

// 3. G = C_p, M = J(F_p(G)): H^1 = 1, the non-split extension is cyclic of order p^2, H^1 stays 1
Outcome radical_example() {
  Outcome o;
  std::string detail;
  for (const char* name : {"C2", "C3", "C5"}) {
    GroupPtr g = builtin(name);
    FreeBimodule fb(g, 1);
    ModulePtr j = restrict_module(make_submodule(fb.right_module(), radical(*fb.right_module())));
    ModulePtr f = GModule::trivial(g, 1);
    CohomologySpace h2 = cohomology(f, 2);
    Extension e = build_extension(TwoCocycle{f, h2.h_reps.at(0)});
    std::size_t a = h1_dim(j), b = h1_dim(inflate_module(j, e.group, e.eta));
    bool cyclic = is_cyclic(*e.group, whole_group(*e.group));
    bool ok = a == 1 && b == 1 && cyclic && e.group->order() == g->order() * g->order();
    o.pass = o.pass && ok;
    detail += fmt(" p=%u: H1(G,M)=%zu |E|=%zu cyclic=%s H1(E,M)=%zu;", g->p(), a, e.group->order(),
                  cyclic ? "yes" : "no", b);
  }
  o.summary = detail.substr(1, detail.size() - 2);
  return o;
}

// 4. Z^1 by enumeration for every small (G, M); H^2(C2, F2) from all 16 cochains
Outcome cohomology_oracle() {
  Outcome o;
  std::size_t pairs = 0, functions = 0;
  for (const CatalogEntry* e : entries("order<=16")) {
    GroupPtr g = entry_group(*e);
    for (const ModulePtr& m : oracle::small_modules(g)) {
      std::size_t space = oracle::ipow(g->p(), g->order() * m->dim());
      if (g->order() * m->dim() > 20 || space > (std::size_t(1) << 20)) continue;
      auto all = oracle::enumerate_derivations(*m);
      CohomologySpace h = cohomology(m, 1);
      FpSubspace z = h.z_space();
      bool ok = all.size() == oracle::ipow(g->p(), h.z_dim);
      for (const auto& f : all) ok = ok && z.contains(f);
      if (!ok) {
        o.pass = false;
        o.summary += " " + e->name;
      }
      ++pairs;
      functions += space;
    }
  }
  ModulePtr f2 = GModule::trivial(builtin("C2"), 1);
  std::size_t z = oracle::count_two_cocycles(*f2, false), b = oracle::count_two_coboundaries(*f2, false);
  std::size_t h = cohomology(f2, 2).h_dim;
  bool h2_ok = h == 1 && z == 2 * b;
  o.pass = o.pass && h2_ok;
  o.summary = fmt("%zu (G,M) pairs, %zu functions enumerated; H2(C2,F2): %zu cocycles / %zu coboundaries, solver %zu",
                  pairs, functions, z, b, h) +
              (o.summary.empty() ? "" : "; mismatches:" + o.summary);
  return o;
}

// 5. R(L(Q)) = Q and |L(Q)||Q| = |F_p(G)^n| on random submodules
Outcome duality_suite() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t count = 0, failures = 0;
  for (const CatalogEntry* e : entries("order<=16 & p=2 | order<=16 & p=3")) {
    GroupPtr g = entry_group(*e);
    for (std::size_t n : {1u, 2u}) {
      FreeBimodule fb(g, n);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Vec> gens;
        for (std::size_t k = 1 + rng() % 3; k > 0; --k) {
          Vec v(fb.dim());
          for (auto& x : v) x = Residue(rng() % g->p());
          // sparse vectors give proper submodules more often
          if (trial > 0)
            for (auto& x : v) x = rng() % 3 ? 0 : x;
          gens.push_back(std::move(v));
        }
        Submodule q = generated_submodule(fb.right_module(), gens);
        Submodule l = annihilator(fb, q, AnnSide::LeftOfRight);
        Submodule r = annihilator(fb, l, AnnSide::RightOfLeft);
        bool ok = r.carrier == q.carrier && l.dim() + q.dim() == fb.dim() &&
                  annihilator_by_products(fb, q.carrier, AnnSide::LeftOfRight) == l.carrier;
        failures += !ok;
        ++count;
      }
    }
  }
  o.pass = count >= 100 && failures == 0;
  o.summary = fmt("%zu random submodules, %zu failures", count, failures);
  return o;
}

// 6. modules with H^1 = 0 are free, by an explicit isomorphism
Outcome freeness() {
  Outcome o;
  std::size_t free_count = 0, failures = 0, sampled = 0;
  std::mt19937_64 rng(77);
  for (const CatalogEntry* e : entries("order<=16")) {
    GroupPtr g = entry_group(*e);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      std::size_t n = 1 + seed % 2;
      auto s = sample_module_where(g, n, rng(), [](std::size_t h) { return h == 0; }, 16);
      if (!s) continue;
      ++sampled;
      ModulePtr m = restrict_module(s->q);
      ModuleHom h = embed_into_free(m);
      const std::size_t k = fixed_points(*m).dim();
      bool ok = h.target->dim() == m->dim() && k * g->order() == m->dim() && rank(h.matrix) == m->dim();
      // action tables agree: act_M(g) * A = A * act_free(g) for every g
      for (Elem x = 0; x < g->order() && ok; ++x) ok = m->act(x) * h.matrix == h.matrix * h.target->act(x);
      failures += !ok;
      free_count += ok;
    }
  }
  o.pass = failures == 0 && sampled > 0;
  o.summary = fmt("%zu sampled modules with H1 = 0, %zu explicit isomorphisms to free modules, %zu failures", sampled,
                  free_count, failures);
  return o;
}

// 7. transfer maps and the filtration
Outcome transfer_suite() {
  Outcome o;
  std::size_t cases = 0;
  std::mt19937_64 rng(5);
  for (const char* name : {"C2", "C4", "C2xC2", "C3"}) {
    GroupPtr g = builtin(name);
    const std::uint32_t p = g->p();
    for (std::size_t t : {1u, 2u}) {
      ModulePtr pm = GModule::trivial(g, t);
      CohomologySpace h = cohomology(pm, 2);
      Cochain f(g->order() * g->order() * t, 0);
      for (const auto& r : h.h_reps) axpy(f, Residue(rng() % p), r, p);
      Extension e = build_extension(TwoCocycle{pm, f});
      for (std::size_t n : {1u, 2u}) {
        if (n * e.group->order() > 128) continue;
        TransferPair tp = transfer_maps(e, n);
        bool ok = is_zero((tp.up * tp.down).data());
        FpMatrix ud = tp.down * tp.up;
        for (std::size_t r = 0; r < ud.rows() && ok; ++r) {
          Vec x(ud.rows(), 0);
          x[r] = 1;
          ok = ud.left_apply(x) == tp.top->right_mul_alg(x, tp.norm_element);
        }
        ok = ok && tp.down_kernel() == filtration(tp, 1).two_sided;
        if (t == 2) {
          for (std::size_t i = 0; i + 1 < 2 * p && ok; ++i) {
            std::size_t dim = filtration(tp, i).two_sided.dim() - filtration(tp, i + 1).two_sided.dim();
            std::size_t copies = i <= p - 1 ? i + 1 : 2 * p - 1 - i;
            ok = dim == n * copies * g->order();
          }
        }
        if (!ok) {
          o.pass = false;
          o.summary += fmt(" %s/t=%zu/n=%zu", name, t, n);
        }
        ++cases;
      }
    }
  }
  o.summary = fmt("%zu (G, t, n) cases: down*up = 0, up*down = norm multiplication, ker down = I_1, t = 2 layers",
                  cases) +
              (o.summary.empty() ? "" : "; failed:" + o.summary);
  return o;
}

// 8. growth-law audit
Outcome growth_audit() {
  Outcome o;
  SuiteOptions opts;
  opts.filter = "order<=16";
  opts.checks = {"gg_growth", "yy_upper", "aa_cases", "qq_cases", "ggg_exact", "jj_lower"};
  opts.seed = 1;
  SuiteReport r = run_suite(opts);
  std::size_t pass = r.total(Status::Pass), ce = r.total(Status::Counterexample);
  std::size_t unsup = r.total(Status::Unsupported), skip = r.total(Status::SkippedHypothesis);
  std::size_t reverified = 0, agree = 0;
  for (const auto& rec : r.records)
    if (rec.verdict.status == Status::Counterexample) {
      reverified += rec.reverified;
      agree += rec.reverify_agrees;
    }
  o.pass = pass + ce >= 50 && unsup == 0 && agree == ce && reverified == ce;
  o.summary = fmt("%zu PASS, %zu COUNTEREXAMPLE (%zu re-verified), %zu skipped, %zu unsupported", pass, ce, agree, skip,
                  unsup);
  std::string per;
  for (const auto& id : opts.checks)
    per += fmt(" %s %zu/%zu", id.c_str(), r.count(id, Status::Pass), r.count(id, Status::Counterexample));
  o.summary += ";" + per;
  return o;
}

// 9. identical inputs give identical bytes
Outcome determinism() {
  Outcome o;
  SuiteOptions opts;
  opts.filter = "order<=8 | special & order<=32";
  opts.seed = 9;
  opts.checks = {"gg_growth", "l00_duality", "free_iff_h1zero", "cor18", "kl", "ui", "tp_products"};
  bool suite = run_suite(opts).to_json(opts) == run_suite(opts).to_json(opts);
  bool certs = true;
  for (const char* name : {"D8", "Q16", "He27", "Sp32a", "MaxClass81b"}) {
    GroupPtr g = builtin(name);
    certs = certs && certificate_to_json(*engine_sweep(g)) == certificate_to_json(*engine_sweep(g));
    DescentOutcome a = descent(g), b = descent(g);
    if (a.certificate) certs = certs && b.certificate && certificate_to_json(*a.certificate) == certificate_to_json(*b.certificate);
    if (a.diagnostic) certs = certs && b.diagnostic && diagnostic_to_json(*a.diagnostic) == diagnostic_to_json(*b.diagnostic);
  }
  bool samples = true;
  for (std::uint64_t seed : {1u, 2u, 3u})
    samples = samples && sample_nG_module(builtin("C2xC2"), 2, seed).q.carrier ==
                             sample_nG_module(builtin("C2xC2"), 2, seed).q.carrier;
  o.pass = suite && certs && samples;
  o.summary = fmt("suite report %s, certificates %s, sampled modules %s", suite ? "identical" : "DIFFER",
                  certs ? "identical" : "DIFFER", samples ? "identical" : "DIFFER");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"existence sweep", existence_sweep},   {"oracle agreement", oracle_agreement},
      {"radical example", radical_example},   {"cohomology vs enumeration", cohomology_oracle},
      {"duality", duality_suite},             {"freeness", freeness},
      {"transfer and filtration", transfer_suite}, {"growth-law audit", growth_audit},
      {"determinism", determinism},
  };
  int failed = 0, k = 0;
  for (const auto& c : criteria) {
    ++k;
    auto t = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::printf("criterion %d [%s] %s: %s (%.1fs)\n", k, o.pass ? "PASS" : "FAIL", c.name, o.summary.c_str(),
                seconds_since(t));
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
