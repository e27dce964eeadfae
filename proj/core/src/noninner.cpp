#include "pgv/noninner.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace pgv {

namespace {

std::string subgroup_summary(const Subgroup& s) { return "order " + std::to_string(s.size()); }

Subgroup frattini_cached(const GroupTable& g) { return frattini(g); }

}  // namespace

SpecialInfo special_info(const GroupTable& g, const Subgroup& n) {
  SpecialInfo info;
  info.centralizer = centralizer(g, n);
  info.center_of_n = meet(g, n, info.centralizer);
  info.product = join(g, n, info.centralizer);
  info.i_of_centralizer = iset(g, info.centralizer);
  Subgroup phi = frattini_cached(g);
  info.centralizer_quotient_cyclic = quotient_is_cyclic(g, info.centralizer, info.center_of_n);
  info.i_inside_n = std::all_of(info.i_of_centralizer.members.begin(), info.i_of_centralizer.members.end(),
                                [&](Elem x) { return n.contains(x); });
  info.product_inside_frattini = info.product.subset_of(phi);
  info.special = n.normal() && info.centralizer_quotient_cyclic && info.i_inside_n && info.product_inside_frattini;
  return info;
}

std::vector<Subgroup> find_special_subgroups(const GroupTable& g) {
  if (g.is_abelian()) throw Error("abelian: out of scope");
  std::vector<Subgroup> out;
  Subgroup phi = frattini(g);
  for (auto& n : normal_subgroups(g, phi, kMaxOrderCap))
    if (special_info(g, n).special) out.push_back(n);
  return out;
}

namespace {

std::optional<Certificate> try_derivations(const GroupPtr& gp, const Subgroup& n, const Subgroup& n1,
                                           const Subgroup& w, const std::string& mode, const std::string& route,
                                           std::vector<std::string>* log) {
  const GroupTable& g = *gp;
  ConjugationModule cm = module_from_conjugation(gp, n1, w);
  CohomologySpace h1 = cohomology(cm.module, 1);
  if (log)
    log->push_back("N " + subgroup_summary(n) + ", N1 " + subgroup_summary(n1) + ", W rank " +
                   std::to_string(cm.basis.size()) + ": dim H1 = " + std::to_string(h1.h_dim));
  if (h1.h_dim == 0) return std::nullopt;
  auto wit = derivation_span_noninner_probe(g, cm, h1);
  if (!wit) {
    if (log) log->push_back("every representative induces an inner automorphism");
    return std::nullopt;
  }
  if (map_order(g, wit->map) != g.p()) return std::nullopt;
  Certificate c;
  c.fingerprint = g.fingerprint_hex();
  c.p = g.p();
  c.order = g.order();
  c.map = wit->map;
  c.provenance.mode = mode;
  c.provenance.route = route;
  c.provenance.n = n.members();
  c.provenance.n1 = n1.members();
  c.provenance.w = w.members();
  c.provenance.tau = wit->tau;
  if (log) {
    log->push_back("representative " + std::to_string(wit->rep_index) + " gives a non-inner automorphism of order " +
                   std::to_string(g.p()));
    c.transcript = *log;
  }
  return c;
}

/// Derivation candidates for N: N1 normal with W <= N1 <= N.
std::optional<Certificate> sweep_one(const GroupPtr& gp, const Subgroup& n, const std::vector<Subgroup>& normals,
                                     const std::string& mode, const std::string& route,
                                     std::vector<std::string>& log, SweepStats* stats) {
  const GroupTable& g = *gp;
  Subgroup w = omega1(g, meet(g, n, centralizer(g, n)));
  if (w.size() == 1) return std::nullopt;
  for (const auto& n1 : normals) {
    if (!w.subset_of(n1) || !n1.subset_of(n)) continue;
    if (stats) ++stats->pairs_tried;
    std::vector<std::string> local = log;
    if (auto c = try_derivations(gp, n, n1, w, mode, route, &local)) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Elem>> search_noninner_by_generators(const GroupTable& g, std::size_t leaf_budget) {
  const auto& gens = g.generators();
  const std::size_t d = gens.size();
  GroupPtr alias(&g, [](const GroupTable*) {});
  QuotientMap q = quotient(alias, frattini(g));
  std::vector<Elem> img(d);
  std::optional<std::vector<Elem>> found;
  std::size_t leaves = 0;
  std::function<void(std::size_t, const std::vector<Elem>&)> rec = [&](std::size_t i, const std::vector<Elem>& span) {
    if (found || leaves >= leaf_budget) return;
    if (i == d) {
      ++leaves;
      auto m = extend_from_generators(g, g, img);
      if (!m) return;
      if (map_order(g, *m) != g.p()) return;
      if (is_inner(g, *m)) return;
      found = m;
      return;
    }
    for (std::size_t y = 0; y < g.order() && !found; ++y) {
      if (g.elem_order(Elem(y)) != g.elem_order(gens[i])) continue;
      Elem cy = q.image_of[y];
      if (std::find(span.begin(), span.end(), cy) != span.end()) continue;
      img[i] = Elem(y);
      std::vector<Elem> next = span;
      for (Elem s : span) {
        Elem t = s;
        for (std::uint32_t k = 1; k < g.p(); ++k) {
          t = q.target->mul(t, cy);
          next.push_back(t);
        }
      }
      rec(i + 1, next);
    }
  };
  rec(0, {0});
  return found;
}

std::optional<Certificate> frattini_sweep(const GroupPtr& gp) {
  const GroupTable& g = *gp;
  Subgroup phi = frattini(g);
  auto inside = normal_subgroups(g, phi, kMaxOrderCap);
  std::vector<std::string> log;
  for (const auto& n : inside)
    if (auto c = sweep_one(gp, n, inside, "search", "derivation", log, nullptr)) return c;
  return std::nullopt;
}

std::optional<Certificate> engine_sweep(const GroupPtr& gp, SweepStats* stats) {
  const GroupTable& g = *gp;
  Subgroup phi = frattini(g);
  auto inside = normal_subgroups(g, phi, kMaxOrderCap);
  if (stats) stats->phase = 1;
  for (const auto& n : inside) {
    std::vector<std::string> log{"sweep over normal subgroups inside the Frattini subgroup"};
    if (auto c = sweep_one(gp, n, inside, "search", "derivation", log, stats)) return c;
  }
  if (stats) stats->phase = 2;
  auto all = normal_subgroups(g, kMaxOrderCap);
  for (const auto& n : all) {
    if (n.subset_of(phi)) continue;
    std::vector<std::string> log{"sweep over normal subgroups outside the Frattini subgroup"};
    if (auto c = sweep_one(gp, n, all, "search", "derivation", log, stats)) return c;
  }
  if (stats) stats->phase = 3;
  auto m = search_noninner_by_generators(g, 2000000);
  if (!m) return std::nullopt;
  Certificate c;
  c.fingerprint = g.fingerprint_hex();
  c.p = g.p();
  c.order = g.order();
  c.map = *m;
  c.provenance.mode = "search";
  c.provenance.route = "generator-search";
  for (Elem s : g.generators()) c.provenance.generator_images.push_back((*m)[s]);
  c.transcript = {"derivation sweeps produced only inner automorphisms",
                  "backtracking over generator images found a non-inner automorphism of order " + std::to_string(g.p())};
  return c;
}

ProbeResult special_h1_probe(const GroupPtr& gp, const Subgroup& n) {
  const GroupTable& g = *gp;
  ProbeResult r;
  if (g.is_abelian()) {
    r.reason = "abelian: out of scope";
    return r;
  }
  SpecialInfo info = special_info(g, n);
  if (!info.special) {
    r.reason = !n.normal() ? "hypothesis: N not normal"
               : !info.centralizer_quotient_cyclic ? "hypothesis: C_G(N)/Z(N) not cyclic"
               : !info.i_inside_n ? "hypothesis: I(C_G(N)) not inside N"
                                  : "hypothesis: N C_G(N) not inside Phi(G)";
    return r;
  }
  r.hypotheses = true;
  Subgroup z = center(g);
  r.center_rank = generator_rank(g, z);
  Subgroup w = omega1(g, meet(g, info.product, centralizer(g, info.product)));
  r.w_inside_n = w.subset_of(n);
  ConjugationModule cm = module_from_conjugation(gp, info.product, w);
  CohomologySpace h1 = cohomology(cm.module, 1);
  r.h1_dim = h1.h_dim;
  if (h1.h_dim < r.center_rank + 1) {
    r.reason = "bound not met: dim H1 = " + std::to_string(h1.h_dim) + ", d(Z(G)) = " + std::to_string(r.center_rank);
    return r;
  }
  std::vector<std::string> log{"special subgroup " + subgroup_summary(n) + ", N C_G(N) " +
                               subgroup_summary(info.product)};
  auto c = try_derivations(gp, n, info.product, w, "paper", "special-derivation", &log);
  if (c) {
    r.certificate = c;
  } else {
    r.diagnostic = Diagnostic{"bound met but every representative induces an inner automorphism", n.members(), log};
    r.reason = r.diagnostic->reason;
  }
  return r;
}

DescentOutcome descent(const GroupPtr& gp) {
  const GroupTable& g = *gp;
  if (g.is_abelian()) throw Error("abelian: out of scope");
  DescentOutcome out;
  std::vector<std::string> log;
  Subgroup phi = frattini(g);
  Subgroup cphi = centralizer(g, phi);
  auto fall_back = [&](const std::string& reason, const std::vector<Elem>& n) {
    out.diagnostic = Diagnostic{reason, n, log};
    out.certificate = engine_sweep(gp);
    if (out.certificate)
      out.certificate->transcript.insert(out.certificate->transcript.begin(),
                                         "paper route failed: " + reason + "; search-mode certificate attached");
    return out;
  };
  if (!cphi.subset_of(phi)) {
    Elem h = 0;
    for (Elem x : cphi.members())
      if (!phi.contains(x)) {
        h = x;
        break;
      }
    log.push_back("C_G(Phi(G)) is not inside Phi(G); h = " + g.name(h));
    Subgroup zw = omega1(g, center(g));
    for (const auto& m : maximal_subgroups(g)) {
      if (m.contains(h)) continue;
      std::vector<std::string> local = log;
      local.push_back("maximal subgroup " + subgroup_summary(m) + " avoiding h");
      if (auto c = try_derivations(gp, m, m, zw, "paper", "central-maximal", &local)) {
        out.certificate = c;
        out.paper_route_succeeded = true;
        return out;
      }
    }
    log.push_back("central derivations through maximal subgroups avoiding h are all inner");
    return fall_back("maximal-subgroup construction produced only inner automorphisms", {});
  }
  auto specials = find_special_subgroups(g);
  if (specials.empty()) return fall_back("no special subgroup", {});
  auto key = [&](const Subgroup& s) { return iset(g, centralizer(g, s)).members.size(); };
  std::stable_sort(specials.begin(), specials.end(), [&](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::size_t ka = key(a), kb = key(b);
    if (ka != kb) return ka > kb;
    return a.members() < b.members();
  });
  auto normals = normal_subgroups(g, phi, kMaxOrderCap);
  for (const auto& n : specials) {
    log.push_back("special subgroup " + subgroup_summary(n) + ", |I(C_G(N))| = " + std::to_string(key(n)));
    std::vector<std::string> local = log;
    if (auto c = sweep_one(gp, n, normals, "paper", "special-descent", local, nullptr)) {
      out.certificate = c;
      out.paper_route_succeeded = true;
      return out;
    }
  }
  return fall_back("descent exhausted: every special subgroup gives only inner automorphisms",
                   specials.front().members());
}

VerifyReport verify_certificate(const GroupPtr& gp, const Certificate& c) {
  const GroupTable& g = *gp;
  if (c.fingerprint != g.fingerprint_hex() || c.order != g.order() || c.p != g.p())
    throw Error("fingerprint mismatch");
  VerifyReport r;
  const auto& f = c.map;
  if (f.size() != g.order()) return r;
  bool in_range = std::all_of(f.begin(), f.end(), [&](Elem e) { return e < g.order(); });
  if (!in_range) return r;
  r.homomorphism = f[0] == 0;
  for (std::size_t a = 0; a < g.order() && r.homomorphism; ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (f[g.mul(Elem(a), Elem(b))] != g.mul(f[a], f[b])) {
        r.homomorphism = false;
        break;
      }
  std::vector<char> seen(g.order(), 0);
  r.bijective = true;
  for (Elem e : f) {
    if (seen[e]) r.bijective = false;
    seen[e] = 1;
  }
  if (!r.homomorphism || !r.bijective) return r;
  r.order_p = map_order(g, f) == g.p();
  r.noninner = !is_inner(g, f).has_value();
  const auto& pv = c.provenance;
  try {
    if (pv.route == "generator-search") {
      auto m = extend_from_generators(g, g, pv.generator_images);
      r.replay = m && *m == f;
    } else {
      Subgroup n1(g, pv.n1), w(g, pv.w);
      ConjugationModule cm = module_from_conjugation(gp, n1, w);
      Derivation d{cm.module, pv.tau};
      r.replay = pv.tau.size() == cm.quotient.section.size() * cm.basis.size() && d.satisfies_identity() &&
                 derivation_to_automorphism(g, cm, pv.tau) == f;
    }
  } catch (const Error&) {
    r.replay = false;
  }
  return r;
}

BruteForceResult brute_force_order_p_noninner(const GroupTable& g) {
  if (g.order() > 16) throw Error("order cap");
  BruteForceResult r;
  const auto& gens = g.generators();
  const std::size_t d = gens.size();
  std::vector<Elem> img(d);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      auto m = extend_from_generators(g, g, img);
      if (!m || !is_automorphism(g, *m)) return;
      ++r.automorphisms;
      if (is_inner(g, *m)) {
        ++r.inner;
        return;
      }
      if (!r.exists && map_order(g, *m) == g.p()) {
        r.exists = true;
        r.witness = *m;
      }
      return;
    }
    for (std::size_t y = 0; y < g.order(); ++y) {
      img[i] = Elem(y);
      rec(i + 1);
    }
  };
  rec(0);
  return r;
}

// ---------------------------------------------------------------- json

std::string certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["fingerprint"] = c.fingerprint;
  j["p"] = c.p;
  j["order"] = c.order;
  j["map"] = c.map;
  nlohmann::json pv;
  pv["mode"] = c.provenance.mode;
  pv["route"] = c.provenance.route;
  pv["n"] = c.provenance.n;
  pv["n1"] = c.provenance.n1;
  pv["w"] = c.provenance.w;
  pv["tau"] = c.provenance.tau;
  pv["generator_images"] = c.provenance.generator_images;
  j["provenance"] = pv;
  j["transcript"] = c.transcript;
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    Certificate c;
    c.fingerprint = j.at("fingerprint").get<std::string>();
    c.p = j.at("p").get<std::uint32_t>();
    c.order = j.at("order").get<std::size_t>();
    c.map = j.at("map").get<std::vector<Elem>>();
    const auto& pv = j.at("provenance");
    c.provenance.mode = pv.at("mode").get<std::string>();
    c.provenance.route = pv.at("route").get<std::string>();
    c.provenance.n = pv.value("n", std::vector<Elem>{});
    c.provenance.n1 = pv.value("n1", std::vector<Elem>{});
    c.provenance.w = pv.value("w", std::vector<Elem>{});
    c.provenance.tau = pv.value("tau", Cochain{});
    c.provenance.generator_images = pv.value("generator_images", std::vector<Elem>{});
    c.transcript = j.value("transcript", std::vector<std::string>{});
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

std::string diagnostic_to_json(const Diagnostic& d) {
  nlohmann::json j;
  j["reason"] = d.reason;
  j["n"] = d.n;
  j["transcript"] = d.transcript;
  return j.dump(2) + "\n";
}

}  // namespace pgv
