// pgv: command line front end for the pgv core library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pgv/catalog.hpp"
#include "pgv/cohomology.hpp"
#include "pgv/extensions.hpp"
#include "pgv/noninner.hpp"
#include "pgv/suite.hpp"

using namespace pgv;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Usage("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

struct Resolved {
  CatalogEntry entry;
  GroupPtr group;
};

/// A builtin name, a presentation file (first group), or file:name.
Resolved resolve_group(const std::string& spec, std::size_t cap) {
  if (spec.empty()) throw Usage("--group is required");
  if (const CatalogEntry* e = find_entry(builtin_catalog(), spec)) return {*e, entry_group(*e, cap)};
  std::string path = spec, name;
  if (auto colon = spec.rfind(':'); colon != std::string::npos && !std::ifstream(spec)) {
    path = spec.substr(0, colon);
    name = spec.substr(colon + 1);
  }
  if (!std::ifstream(path)) throw Usage("unknown group " + spec);
  auto cat = load_catalog(path);
  if (cat.empty()) throw Usage("no group in " + path);
  const CatalogEntry* e = name.empty() ? &cat.front() : find_entry(cat, name);
  if (!e) throw Usage("no group " + name + " in " + path);
  return {*e, entry_group(*e, cap)};
}

/// Comma-separated element indices or one of: trivial, center, frattini, derived, whole.
Subgroup parse_subgroup(const GroupTable& g, const std::string& text) {
  if (text == "trivial") return trivial_subgroup(g);
  if (text == "center") return center(g);
  if (text == "frattini") return frattini(g);
  if (text == "derived") return derived_subgroup(g);
  if (text == "whole") return whole_group(g);
  std::vector<Elem> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t v = std::stoul(item);
      if (v >= g.order()) throw Usage("element out of range: " + item);
      seeds.push_back(Elem(v));
    } catch (const std::logic_error&) {
      throw Usage("bad subgroup: " + text);
    }
  }
  return subgroup_closure(g, seeds);
}

std::string join_elems(const std::vector<Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/// trivial[:d], regular[:n], augmentation[:n], radical:<k>[:n] over the group b.
ModulePtr parse_module(const GroupPtr& b, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  auto num = [&](std::size_t i, std::size_t dflt) -> std::size_t {
    if (i >= parts.size()) return dflt;
    try {
      return std::stoul(parts[i]);
    } catch (const std::logic_error&) {
      throw Usage("bad module: " + text);
    }
  };
  if (parts.empty()) throw Usage("empty module");
  const std::string& kind = parts[0];
  if (kind == "trivial") return GModule::trivial(b, num(1, 1));
  FreeBimodule fb(b, kind == "radical" ? num(2, 1) : num(1, 1));
  Submodule whole = whole_module(fb.right_module());
  if (kind == "regular") return fb.right_module();
  if (kind == "augmentation") return restrict_module(make_submodule(fb.right_module(), radical(whole)));
  if (kind == "radical")
    return restrict_module(make_submodule(fb.right_module(), radical_power(*fb.right_module(), num(1, 1))));
  throw Usage("unknown module kind: " + kind);
}

std::size_t nilpotency_class_of(const GroupTable& g) {
  std::size_t c = 0;
  Subgroup cur = whole_group(g);
  while (cur.size() > 1) {
    cur = commutator_subgroup(g, cur, whole_group(g));
    ++c;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgv: finite p-group cohomology, extensions and non-inner automorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t order_cap = kDefaultOrderCap;
  std::uint64_t seed = 0;
  app.add_option("--order-cap", order_cap, "Largest group order to build")->check(CLI::Range(1, int(kMaxOrderCap)));
  app.add_option("--seed", seed, "Random seed");

  // catalog list
  auto* catalog = app.add_subcommand("catalog", "Catalog operations");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  std::string catalog_path = "builtin", filter = "all";
  list->add_option("--catalog", catalog_path, "builtin or a presentation file");
  list->add_option("--filter", filter, "Tag expression");

  // group info
  auto* group = app.add_subcommand("group", "Group operations");
  group->require_subcommand(1);
  group->fallthrough();
  auto* info = group->add_subcommand("info", "Structure summary");
  std::string group_spec;
  info->add_option("group", group_spec, "Name, file or file:name")->required();

  // h1
  auto* h1 = app.add_subcommand("h1", "First cohomology");
  std::string normal_spec, module_spec;
  h1->add_option("--group", group_spec)->required();
  h1->add_option("--normal", normal_spec, "Normal subgroup: element list or center|frattini|derived|trivial|whole");
  h1->add_option("--module", module_spec,
                 "omega1-center (with --normal), trivial[:d], regular[:n], augmentation[:n], radical:k[:n]");

  // h2
  auto* h2 = app.add_subcommand("h2", "Second cohomology");
  h2->add_option("--group", group_spec)->required();
  h2->add_option("--module", module_spec, "trivial[:d], regular[:n], augmentation[:n], radical:k[:n]");

  // extend
  auto* extend = app.add_subcommand("extend", "Extension from a 2-cocycle");
  std::string kernel_spec = "1", cocycle_spec = "random", out_path;
  bool nonsplit = false;
  extend->add_option("--group", group_spec)->required();
  extend->add_option("--kernel", kernel_spec, "<t>[,trivial|uni]: P = F_p^t, unitriangular action for t = 2");
  extend->add_option("--cocycle", cocycle_spec, "random, or a file of whitespace-separated residues");
  extend->add_flag("--nonsplit", nonsplit, "Random cocycle outside B^2");
  extend->add_option("--out", out_path, "Write the extension as a presentation file");

  // find-noninner
  auto* find = app.add_subcommand("find-noninner", "Certificate for a non-inner automorphism of order p");
  std::string mode = "search";
  find->add_option("--group", group_spec)->required();
  find->add_option("--mode", mode, "search or paper")->check(CLI::IsMember({"search", "paper"}));
  find->add_option("--out", out_path, "Certificate JSON path");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a certificate");
  std::string cert_path;
  verify->add_option("--group", group_spec)->required();
  verify->add_option("--cert", cert_path)->required();

  // check
  auto* check = app.add_subcommand("check", "Run registry checks over a catalog");
  std::string check_id = "all", catalog_expr = "all", module_kind = "sampled";
  std::uint64_t budget_ms = 0;
  std::size_t samples = 1, copies = 0, rank_t = 0;
  bool no_reverify = false;
  check->add_option("--id", check_id, "Check id, comma-separated ids, or all");
  check->add_option("--catalog", catalog_expr, "Tag expression over the catalog");
  check->add_option("--catalog-file", catalog_path, "builtin or a presentation file");
  check->add_option("--budget-ms", budget_ms, "Per-instance budget, 0 for none");
  check->add_option("--samples", samples, "Samples per (group, check)");
  check->add_option("--copies", copies, "n for module checks, 0 to let the check choose");
  check->add_option("--t", rank_t, "Rank of P for extension checks, 0 to let the check choose");
  check->add_option("--module-kind", module_kind, "sampled, free, augmentation or radical:<k>");
  check->add_flag("--no-reverify", no_reverify, "Skip recomputing counterexamples");
  check->add_option("--out", out_path, "Report JSON path");
  auto* check_list = app.add_subcommand("checks", "List check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*list) {
      auto cat = load_catalog(catalog_path);
      for (const CatalogEntry* e : select_entries(cat, TagExpr::parse(filter))) {
        std::cout << e->name << "\t" << e->order << "\tp=" << e->presentation.p << "\t";
        for (std::size_t i = 0; i < e->tags.size(); ++i) std::cout << (i ? "," : "") << e->tags[i];
        std::cout << "\n";
      }
    } else if (*info) {
      auto r = resolve_group(group_spec, order_cap);
      const GroupTable& g = *r.group;
      Subgroup all = whole_group(g);
      std::cout << "name: " << r.entry.name << "\n"
                << "order: " << g.order() << "\n"
                << "p: " << g.p() << "\n"
                << "fingerprint: " << g.fingerprint_hex() << "\n"
                << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n"
                << "nilpotency class: " << nilpotency_class_of(g) << "\n"
                << "d(G): " << generator_rank(g, all) << "\n"
                << "|Z(G)|: " << center(g).size() << "\n"
                << "|Phi(G)|: " << frattini(g).size() << "\n"
                << "|G'|: " << derived_subgroup(g).size() << "\n"
                << "normal subgroups: " << normal_subgroups(g, kMaxOrderCap).size() << "\n";
      if (!g.is_abelian()) {
        std::size_t sp = 0;
        for (const auto& s : find_special_subgroups(g)) sp += special_info(g, s).special;
        std::cout << "special subgroups: " << sp << "\n";
      }
      std::cout << "tags: ";
      for (std::size_t i = 0; i < r.entry.tags.size(); ++i) std::cout << (i ? "," : "") << r.entry.tags[i];
      std::cout << "\n\n" << format_presentation(r.entry.presentation);
    } else if (*h1) {
      auto r = resolve_group(group_spec, order_cap);
      ModulePtr m;
      if (module_spec.empty() || module_spec == "omega1-center") {
        if (normal_spec.empty()) throw Usage("omega1-center needs --normal");
        Subgroup n = parse_subgroup(*r.group, normal_spec);
        Subgroup w = omega1(*r.group, meet(*r.group, n, centralizer(*r.group, n)));
        if (w.size() == 1) throw Usage("Omega_1(Z(N)) is trivial");
        m = module_from_conjugation(r.group, n, w).module;
        std::cout << "N: " << join_elems(n.members()) << "\nW: " << join_elems(w.members()) << "\n";
      } else {
        GroupPtr b = r.group;
        if (!normal_spec.empty()) b = quotient(r.group, parse_subgroup(*r.group, normal_spec)).target;
        m = parse_module(b, module_spec);
      }
      CohomologySpace cs = cohomology(m, 1);
      std::cout << "acting order: " << m->acting()->order() << "\nmodule dim: " << m->dim()
                << "\ndim Z1: " << cs.z_dim << "\ndim B1: " << cs.b_dim << "\ndim H1: " << cs.h_dim << "\n";
    } else if (*h2) {
      auto r = resolve_group(group_spec, order_cap);
      ModulePtr m = parse_module(r.group, module_spec.empty() ? "trivial" : module_spec);
      CohomologySpace cs = cohomology(m, 2);
      std::cout << "acting order: " << m->acting()->order() << "\nmodule dim: " << m->dim()
                << "\ndim Z2: " << cs.z_dim << "\ndim B2: " << cs.b_dim << "\ndim H2: " << cs.h_dim << "\n";
    } else if (*extend) {
      auto r = resolve_group(group_spec, order_cap);
      const GroupTable& g = *r.group;
      std::size_t t = 0;
      std::string action = "trivial";
      {
        auto comma = kernel_spec.find(',');
        try {
          t = std::stoul(kernel_spec.substr(0, comma));
        } catch (const std::logic_error&) {
          throw Usage("bad --kernel " + kernel_spec);
        }
        if (comma != std::string::npos) action = kernel_spec.substr(comma + 1);
        if (t == 0 || (action != "trivial" && action != "uni") || (action == "uni" && t != 2))
          throw Usage("bad --kernel " + kernel_spec);
      }
      ModulePtr p = GModule::trivial(r.group, t);
      if (action == "uni") {
        // unitriangular action through the character sending the first generator to 1
        const auto& tr = g.traversal();
        std::vector<Residue> chi(g.order(), 0);
        for (std::size_t k = 1; k < tr.order.size(); ++k) {
          Elem x = tr.order[k];
          chi[x] = fp_add(chi[tr.parent[x]], tr.gen_used[x] == 0 ? 1 : 0, g.p());
        }
        std::vector<FpMatrix> acts;
        for (Elem x = 0; x < g.order(); ++x) {
          FpMatrix a = FpMatrix::identity(g.p(), 2);
          a.row(1)[0] = chi[x];
          acts.push_back(std::move(a));
        }
        p = std::make_shared<const GModule>(r.group, Side::Right, 2, std::move(acts));
      }
      CohomologySpace cs = cohomology(p, 2);
      Cochain values(g.order() * g.order() * t, 0);
      if (cocycle_spec == "random") {
        std::mt19937_64 rng(seed);
        for (const auto& b : cs.b_basis) axpy(values, Residue(rng() % g.p()), b, g.p());
        bool any = false;
        for (const auto& h : cs.h_reps) {
          Residue c = Residue(rng() % g.p());
          any = any || c;
          axpy(values, c, h, g.p());
        }
        if (nonsplit && !any) {
          if (cs.h_reps.empty()) throw Usage("H^2 is zero: no non-split extension");
          axpy(values, 1, cs.h_reps.front(), g.p());
        }
      } else {
        std::istringstream in(read_file(cocycle_spec));
        std::size_t i = 0;
        long long v;
        while (in >> v) {
          if (i >= values.size()) throw Usage("cocycle file too long");
          values[i++] = Residue(((v % g.p()) + g.p()) % g.p());
        }
        if (i != values.size()) throw Usage("cocycle file needs " + std::to_string(values.size()) + " residues");
      }
      TwoCocycle tau{p, values};
      if (!tau.satisfies_identity()) throw Usage("not a 2-cocycle");
      Extension e = build_extension(tau, order_cap);
      bool split = cs.b_space().contains(values);
      auto pres = pc_presentation_of(*e.group, r.entry.name + "_ext");
      std::cout << "order: " << e.group->order() << "\nsplit: " << (split ? "yes" : "no")
                << "\nabelian: " << (e.group->is_abelian() ? "yes" : "no")
                << "\nfingerprint: " << e.group->fingerprint_hex() << "\n";
      if (!out_path.empty())
        write_or_print(out_path, format_presentation(pres.presentation));
      else
        std::cout << "\n" << format_presentation(pres.presentation);
    } else if (*find) {
      auto r = resolve_group(group_spec, order_cap);
      std::optional<Certificate> cert;
      if (mode == "search") {
        cert = engine_sweep(r.group);
      } else {
        DescentOutcome d = descent(r.group);
        if (d.diagnostic) std::cerr << diagnostic_to_json(*d.diagnostic) << "\n";
        cert = d.certificate;
      }
      if (!cert) {
        std::cerr << "no certificate\n";
        return 2;
      }
      write_or_print(out_path, certificate_to_json(*cert));
    } else if (*verify) {
      auto r = resolve_group(group_spec, order_cap);
      Certificate c = certificate_from_json(read_file(cert_path));
      VerifyReport v = verify_certificate(r.group, c);
      std::cout << "homomorphism: " << v.homomorphism << "\nbijective: " << v.bijective << "\norder_p: " << v.order_p
                << "\nnoninner: " << v.noninner << "\nreplay: " << v.replay << "\nok: " << v.ok() << "\n";
      return v.ok() ? 0 : 2;
    } else if (*check) {
      SuiteOptions o;
      o.catalog = catalog_path;
      o.filter = catalog_expr;
      o.seed = seed;
      o.budget_ms = budget_ms;
      o.samples = samples;
      o.module.copies = copies;
      o.module.t = rank_t;
      o.module.kind = module_kind;
      o.reverify_counterexamples = !no_reverify;
      if (check_id != "all") {
        std::stringstream ss(check_id);
        std::string id;
        while (std::getline(ss, id, ',')) o.checks.push_back(canonical_check_id(id));
      }
      SuiteReport rep = run_suite(o);
      write_or_print(out_path, rep.to_json(o));
      if (!out_path.empty()) {
        for (Status s : {Status::Pass, Status::Counterexample, Status::SkippedHypothesis, Status::Unsupported})
          std::cout << status_name(s) << ": " << rep.total(s) << "\n";
      }
    } else if (*check_list) {
      for (const auto& id : check_ids()) std::cout << id << "\n";
    }
  } catch (const Usage& u) {
    std::cerr << "pgv: " << u.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "pgv: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "pgv: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
