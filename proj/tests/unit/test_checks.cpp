#include <doctest.h>

#include "pgv/catalog.hpp"
#include "pgv/checks.hpp"
#include "pgv/suite.hpp"

using namespace pgv;

namespace {

GroupPtr builtin(const std::string& name) { return entry_group(*find_entry(builtin_catalog(), name)); }

CheckInstance instance(const std::string& group, std::uint64_t seed = 1) {
  CheckInstance inst;
  inst.entry = group;
  inst.group = builtin(group);
  inst.seed = seed;
  return inst;
}

template <class T>
T get(const CheckVerdict& v, const std::string& key) {
  auto it = v.details.find(key);
  REQUIRE_MESSAGE(it != v.details.end(), key);
  return std::get<T>(it->second);
}

}  // namespace

TEST_CASE("registry ids") {
  CHECK(check_ids().size() == 51);
  CHECK(canonical_check_id("thm_gg") == "gg_growth");
  CHECK(canonical_check_id("ij_bound") == "ij_bound");
  CHECK_THROWS_AS(canonical_check_id("bogus"), Error);
  CHECK_THROWS_AS(run_check("bogus", instance("C2")), Error);
}

TEST_CASE("ij_bound on D16 with the cyclic maximal subgroup") {
  CheckInstance inst = instance("D16");
  const GroupTable& g = *inst.group;
  Elem r = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.elem_order(x) == 8) r = x;
  REQUIRE(r != 0);
  inst.normal = subgroup_closure(g, {r}).members();
  CheckVerdict v = run_check("ij_bound", inst);
  CHECK(v.status == Status::Pass);
  CHECK(get<std::int64_t>(v, "configs_satisfying") == 1);
}

TEST_CASE("l00_duality on C2 with the augmentation ideal") {
  CheckInstance inst = instance("C2");
  inst.module.copies = 1;
  inst.module.kind = "augmentation";
  CheckVerdict v = run_check("l00_duality", inst);
  CHECK(v.status == Status::Pass);
  CHECK(get<std::int64_t>(v, "l_size") == 2);
  CHECK(get<std::int64_t>(v, "product") == 4);
}

TEST_CASE("thm_gg with m = n skips") {
  CheckInstance inst = instance("C4");
  inst.module.copies = 2;
  inst.module.kind = "augmentation";  // H^1 of n copies of J(F_p(G)) has dimension n
  CheckVerdict v = run_check("thm_gg", inst);
  CHECK(v.check_id == "gg_growth");
  CHECK(v.status == Status::SkippedHypothesis);
}

TEST_CASE("group-level checks on abelian groups skip") {
  for (const char* id : {"ij_bound", "cor18", "hh"}) CHECK(run_check(id, instance("C2xC2")).status == Status::SkippedHypothesis);
}

TEST_CASE("verdicts are deterministic and replayable") {
  for (const std::string& id : {std::string("gg_growth"), std::string("l00_duality"), std::string("ui")}) {
    CheckInstance inst = instance("D8", 42);
    CheckVerdict a = run_check(id, inst), b = run_check(id, inst);
    CHECK(verdict_to_json(a) == verdict_to_json(b));
    ReverifyResult r = reverify(a, inst);
    CHECK(r.agrees);
  }
}

TEST_CASE("budget exhaustion is unsupported, not wrong") {
  CheckInstance inst = instance("Sp243a");
  inst.budget_ms = 1;
  CheckVerdict v = run_check("cor18", inst);
  CHECK((v.status == Status::Unsupported || v.status == Status::Pass));
}

TEST_CASE("suite report") {
  SuiteOptions o;
  o.filter = "order<=8";
  o.checks = {"l00_duality", "ij_bound"};
  o.seed = 5;
  SuiteReport a = run_suite(o), b = run_suite(o);
  CHECK(a.to_json(o) == b.to_json(o));
  CHECK(a.groups == 11);
  CHECK(a.records.size() == 22);
  CHECK(a.count("l00_duality", Status::Pass) == 11);
  CHECK(a.total(Status::Unsupported) == 0);
  CHECK(pair_seed(5, "D8", "ij_bound", 0) != pair_seed(5, "D8", "ij_bound", 1));
}
