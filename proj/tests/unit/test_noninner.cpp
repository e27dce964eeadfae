#include <doctest.h>

#include "pgv/catalog.hpp"
#include "pgv/noninner.hpp"
#include "oracles.hpp"

using namespace pgv;

namespace {

GroupPtr builtin(const std::string& name) { return entry_group(*find_entry(builtin_catalog(), name)); }

}  // namespace

TEST_CASE("brute force against the definitions") {
  for (const char* name : {"D8", "Q8", "C2xC2", "C4"}) {
    GroupPtr g = builtin(name);
    BruteForceResult r = brute_force_order_p_noninner(*g);
    CHECK(r.exists);
    CHECK(oracle::brute_automorphism(*g, r.witness));
    CHECK_FALSE(oracle::brute_inner(*g, r.witness));
    CHECK(oracle::brute_map_order(r.witness) == g->p());
    CHECK(r.inner == g->order() / center(*g).size());
  }
  CHECK(brute_force_order_p_noninner(*builtin("D8")).automorphisms == 8);
  CHECK(brute_force_order_p_noninner(*builtin("Q8")).automorphisms == 24);
  CHECK_FALSE(brute_force_order_p_noninner(*builtin("C3")).exists);
}

TEST_CASE("search-mode certificates for non-abelian groups of order <= 32") {
  for (const CatalogEntry* e : select_entries(builtin_catalog(), TagExpr::parse("nonabelian & order<=32"))) {
    GroupPtr g = entry_group(*e);
    auto c = engine_sweep(g);
    REQUIRE_MESSAGE(c, e->name);
    CHECK(verify_certificate(g, *c).ok());
    CHECK(oracle::brute_automorphism(*g, c->map));
    CHECK_FALSE(oracle::brute_inner(*g, c->map));
    CHECK(oracle::brute_map_order(c->map) == g->p());
  }
}

TEST_CASE("certificates round trip and tampering is caught") {
  GroupPtr g = builtin("Q16");
  auto c = engine_sweep(g);
  REQUIRE(c);
  std::string json = certificate_to_json(*c);
  Certificate back = certificate_from_json(json);
  CHECK(certificate_to_json(back) == json);
  CHECK(verify_certificate(g, back).ok());

  Certificate inner = back;
  for (Elem x = 0; x < g->order(); ++x) inner.map[x] = g->conj(x, 1);
  CHECK_FALSE(verify_certificate(g, inner).ok());

  Certificate broken = back;
  std::swap(broken.map[1], broken.map[2]);
  CHECK_FALSE(verify_certificate(g, broken).homomorphism);

  CHECK_THROWS_AS(verify_certificate(builtin("D16"), back), Error);
  CHECK_THROWS_AS(certificate_from_json("{\"p\": 2}"), Error);
}

TEST_CASE("special subgroups") {
  CHECK_THROWS_AS(find_special_subgroups(*builtin("C4")), Error);
  CHECK(find_special_subgroups(*builtin("D8")).empty());
  for (const char* name : {"Sp32a", "Sp64a", "Sp243a"}) {
    GroupPtr g = builtin(name);
    auto sp = find_special_subgroups(*g);
    REQUIRE_FALSE(sp.empty());
    for (const Subgroup& n : sp) {
      SpecialInfo info = special_info(*g, n);
      CHECK(info.special);
      CHECK(n.subset_of(frattini(*g)));
      CHECK(info.product.subset_of(frattini(*g)));
    }
  }
}

TEST_CASE("descent yields a certificate or a diagnostic") {
  for (const char* name : {"D8", "Q8", "D16", "He27", "Sp32a"}) {
    GroupPtr g = builtin(name);
    DescentOutcome d = descent(g);
    CHECK((d.certificate.has_value() || d.diagnostic.has_value()));
    if (d.certificate) CHECK(verify_certificate(g, *d.certificate).ok());
  }
}

TEST_CASE("generator search") {
  GroupPtr g = builtin("M16");
  auto f = search_noninner_by_generators(*g, 100000);
  REQUIRE(f);
  CHECK(oracle::brute_automorphism(*g, *f));
  CHECK_FALSE(oracle::brute_inner(*g, *f));
}
