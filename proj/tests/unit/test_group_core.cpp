#include <doctest.h>

#include <algorithm>
#include <map>

#include "pgv/catalog.hpp"
#include "oracles.hpp"

using namespace pgv;

namespace {

std::vector<const CatalogEntry*> entries(const std::string& filter) {
  return select_entries(builtin_catalog(), TagExpr::parse(filter));
}

GroupPtr builtin(const std::string& name) { return entry_group(*find_entry(builtin_catalog(), name)); }

}  // namespace

TEST_CASE("catalog contents") {
  CHECK(entries("order=16").size() == 14);
  CHECK(entries("order=81").size() == 15);
  CHECK(entries("order=8").size() == 5);
  CHECK(entries("order=27").size() == 5);
  CHECK(entries("order=32 & abelian").size() == 7);
  CHECK(entries("special").size() == 7);
  auto d8 = find_entry(builtin_catalog(), "D8");
  REQUIRE(d8);
  CHECK(d8->has_tag("dihedral"));
  CHECK(d8->has_tag("nonabelian"));
  CHECK(find_entry(builtin_catalog(), "nope") == nullptr);
}

TEST_CASE("groups of order 16 and 81 are pairwise non-isomorphic") {
  for (std::size_t order : {16u, 81u}) {
    auto es = entries("order=" + std::to_string(order));
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        CHECK_FALSE(find_isomorphism(*entry_group(*es[i]), *entry_group(*es[j])).has_value());
  }
}

TEST_CASE("tables are associative groups") {
  for (const CatalogEntry* e : entries("order<=64")) {
    GroupPtr g = entry_group(*e);
    CHECK(g->order() == e->order);
    CHECK(g->check_associativity(g->order() <= 32));
  }
}

TEST_CASE("center and Frattini subgroup against definitions") {
  for (const CatalogEntry* e : entries("order<=32")) {
    const GroupTable& g = *entry_group(*e);
    CHECK(center(g).members() == oracle::brute_center(g));
    CHECK(frattini(g) == frattini_by_maximals(g));
    CHECK(g.is_abelian() == (center(g).size() == g.order()));
    // d(G) = log_p |G / Phi(G)|
    std::size_t idx = g.order() / frattini(g).size(), d = 0;
    while (idx > 1) idx /= g.p(), ++d;
    CHECK(generator_rank(g, whole_group(g)) == d);
  }
}

TEST_CASE("frozen invariants") {
  auto d8 = builtin("D8"), q8 = builtin("Q8");
  CHECK(center(*d8).size() == 2);
  CHECK(normal_subgroups(*d8).size() == 6);
  CHECK(normal_subgroups(*q8).size() == 6);
  CHECK(omega1(*q8, whole_group(*q8)).size() == 2);
  CHECK(omega1(*d8, whole_group(*d8)).size() == 8);
  CHECK(maximal_subgroups(*d8).size() == 3);
  CHECK(is_cyclic(*builtin("C8"), whole_group(*builtin("C8"))));
  CHECK(derived_subgroup(*builtin("He27")).size() == 3);
  CHECK(frattini(*builtin("He27")).size() == 3);
  CHECK(group_invariants(*d8) != group_invariants(*q8));
}

TEST_CASE("pc presentation of a table reproduces it") {
  for (const CatalogEntry* e : entries("order<=64 | order=81")) {
    GroupPtr g = entry_group(*e);
    auto pres = pc_presentation_of(*g, e->name + "_re");
    GroupPtr h = from_pc_presentation(pres.presentation);
    REQUIRE(h->order() == g->order());
    // to_source is an isomorphism h -> g
    bool iso = true;
    for (Elem a = 0; a < h->order() && iso; ++a)
      for (Elem b = 0; b < h->order() && iso; ++b)
        iso = pres.to_source[h->mul(a, b)] == g->mul(pres.to_source[a], pres.to_source[b]);
    CHECK(iso);
    auto parsed = parse_presentations(format_presentation(pres.presentation));
    REQUIRE(parsed.size() == 1);
    CHECK(from_pc_presentation(parsed[0].presentation)->table() == h->table());
  }
}

TEST_CASE("presentation parser reports locations") {
  const char* bad = "group X\np 2\ngens 2\npow 1 : g1\nend\n";
  try {
    parse_presentations(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_presentations("group X\np 4\ngens 1\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_presentations("group X\np 2\ngens 1\n"), ParseError);
  auto ok = parse_presentations("# comment\ngroup C4\np 2\ngens 2\npow 1 : g2\nend\n");
  REQUIRE(ok.size() == 1);
  CHECK(from_pc_presentation(ok[0].presentation)->elem_order(2) == 4);
}

TEST_CASE("inconsistent presentation is rejected") {
  // g2 = g1^2 commutes with g1, so [g2, g1] = g3 cannot hold
  auto e = parse_presentations("group B\np 2\ngens 3\npow 1 : g2\ncomm 2 1 : g3\nend\n");
  REQUIRE(e.size() == 1);
  CHECK_THROWS_AS(from_pc_presentation(e[0].presentation), Error);
}

TEST_CASE("tag expressions") {
  auto all = builtin_catalog();
  std::size_t p3 = select_entries(all, TagExpr::parse("p=3")).size();
  std::size_t np3 = select_entries(all, TagExpr::parse("!p=3")).size();
  CHECK(p3 + np3 == all.size());
  CHECK(select_entries(all, TagExpr::parse("name=Q8")).size() == 1);
  CHECK(select_entries(all, TagExpr::parse("dihedral & order<=16")).size() == 2);
  CHECK(select_entries(all, TagExpr::parse("cyclic & order=2 | name=D8")).size() == 2);
  CHECK_THROWS(TagExpr::parse("order<=x"));
}

TEST_CASE("quotients and inner automorphisms") {
  auto d8 = builtin("D8");
  QuotientMap q = quotient(d8, center(*d8));
  CHECK(q.target->order() == 4);
  CHECK(q.target->is_abelian());
  for (Elem x = 0; x < d8->order(); ++x)
    for (Elem y = 0; y < d8->order(); ++y)
      CHECK(q.image_of[d8->mul(x, y)] == q.target->mul(q.image_of[x], q.image_of[y]));
  for (Elem h = 0; h < d8->order(); ++h) {
    std::vector<Elem> f(d8->order());
    for (Elem x = 0; x < d8->order(); ++x) f[x] = d8->conj(x, h);
    CHECK(is_inner(*d8, f).has_value());
    CHECK(map_order(*d8, f) == oracle::brute_map_order(f));
  }
}

TEST_CASE("isomorphism search") {
  auto a = builtin("C4xC2"), b = from_pc_presentation(abelian_presentation(2, {1, 2}));
  auto iso = find_isomorphism(*a, *b);
  REQUIRE(iso);
  CHECK(GroupMap(a, b, *iso).is_bijective());
  CHECK_FALSE(find_isomorphism(*builtin("D8"), *builtin("Q8")));
}
