#include <doctest.h>

#include <random>

#include "pgv/catalog.hpp"
#include "pgv/gmodule.hpp"
#include "oracles.hpp"

using namespace pgv;

namespace {

GroupPtr builtin(const std::string& name) { return entry_group(*find_entry(builtin_catalog(), name)); }

Vec random_vec(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  Vec v(n);
  for (auto& x : v) x = Residue(rng() % p);
  return v;
}

}  // namespace

TEST_CASE("regular module: radical, fixed points, generators") {
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "D8", "Q8", "C9", "C5"}) {
    GroupPtr g = builtin(name);
    FreeBimodule fb(g, 2);
    const GModule& m = *fb.right_module();
    CHECK(radical(m).dim() == 2 * (g->order() - 1));
    CHECK(fixed_points(m) == fb.socle());
    CHECK(d_G(m) == 2);
    CHECK(minimal_generators(fb.right_module()).size() == 2);
    // J^k strictly decreases to zero (Loewy length)
    std::size_t prev = m.dim(), k = 1;
    while (prev > 0) {
      std::size_t d = radical_power(m, k++).dim();
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("left and right multiplication commute") {
  GroupPtr g = builtin("D8");
  FreeBimodule fb(g, 1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Vec x = random_vec(rng, fb.dim(), 2);
    Elem a = Elem(rng() % 8), b = Elem(rng() % 8);
    CHECK(fb.left_mul(a, fb.right_mul(x, b)) == fb.right_mul(fb.left_mul(a, x), b));
  }
}

TEST_CASE("group algebra multiplication is associative with unit") {
  GroupPtr g = builtin("Q8");
  std::mt19937_64 rng(9);
  Vec one(8, 0);
  one[0] = 1;
  for (int i = 0; i < 20; ++i) {
    Vec a = random_vec(rng, 8, 2), b = random_vec(rng, 8, 2), c = random_vec(rng, 8, 2);
    CHECK(group_algebra_mul(*g, group_algebra_mul(*g, a, b), c) == group_algebra_mul(*g, a, group_algebra_mul(*g, b, c)));
    CHECK(group_algebra_mul(*g, one, a) == a);
  }
}

TEST_CASE("annihilator duality on random submodules") {
  std::mt19937_64 rng(21);
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "D8", "C9"}) {
    GroupPtr g = builtin(name);
    for (std::size_t n : {1u, 2u}) {
      FreeBimodule fb(g, n);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Vec> gens;
        for (std::size_t k = rng() % 3; k > 0; --k) gens.push_back(random_vec(rng, fb.dim(), g->p()));
        Submodule q = generated_submodule(fb.right_module(), gens);
        Submodule l = annihilator(fb, q, AnnSide::LeftOfRight);
        CHECK(annihilator(fb, l, AnnSide::RightOfLeft).carrier == q.carrier);
        CHECK(l.dim() + q.dim() == fb.dim());
        CHECK(annihilator_by_products(fb, q.carrier, AnnSide::LeftOfRight) == l.carrier);
      }
    }
  }
}

TEST_CASE("augmentation ideal of C2") {
  GroupPtr g = builtin("C2");
  FreeBimodule fb(g, 1);
  Submodule q = make_submodule(fb.right_module(), radical(*fb.right_module()));
  Submodule l = annihilator(fb, q, AnnSide::LeftOfRight);
  CHECK(q.dim() == 1);
  CHECK(l.dim() == 1);
  CHECK(l.carrier == q.carrier);
}

TEST_CASE("submodule checks") {
  GroupPtr g = builtin("C4");
  FreeBimodule fb(g, 1);
  FpSubspace line = FpSubspace::span(2, 4, {{1, 0, 0, 0}});
  CHECK_FALSE(is_submodule(*fb.right_module(), line));
  CHECK_THROWS_AS(make_submodule(fb.right_module(), line), Error);
  Submodule gen = generated_submodule(fb.right_module(), {{1, 0, 0, 0}});
  CHECK(gen.dim() == 4);
}

TEST_CASE("embedding into a free module") {
  GroupPtr g = builtin("C2xC2");
  FreeBimodule fb(g, 1);
  ModulePtr aug = restrict_module(make_submodule(fb.right_module(), radical(*fb.right_module())));
  ModuleHom h = embed_into_free(aug);
  CHECK(h.is_equivariant());
  CHECK(h.is_injective());
  CHECK(h.target->dim() == fixed_points(*aug).dim() * g->order());
}

TEST_CASE("conjugation module of the center") {
  GroupPtr d8 = builtin("D8");
  Subgroup z = center(*d8);
  ConjugationModule cm = module_from_conjugation(d8, z, z);
  CHECK(cm.module->dim() == 1);
  CHECK(cm.quotient.target->order() == 4);
  for (Elem x : z.members()) CHECK(cm.to_element(cm.to_vector(x)) == x);
  CHECK_THROWS_AS(module_from_conjugation(d8, trivial_subgroup(*d8), whole_group(*d8)), Error);
}

TEST_CASE("dual module flips the side and keeps fixed-point data") {
  GroupPtr g = builtin("C4");
  FreeBimodule fb(g, 1);
  ModulePtr j = restrict_module(make_submodule(fb.right_module(), radical(*fb.right_module())));
  ModulePtr d = dual_module(*j);
  CHECK(d->side() == Side::Left);
  CHECK(d->dim() == j->dim());
  // the dual of J is the quotient F_p(G) / soc, which is cyclic
  CHECK(d_G(*d) == 1);
  CHECK(fixed_points(*j).dim() == 1);
}

TEST_CASE("sampled modules contain the socle") {
  GroupPtr g = builtin("C4");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SampledModule s = sample_nG_module(g, 2, seed);
    CHECK(s.q.carrier.contains(s.ambient->socle()));
    CHECK(s.h1_dim <= 2);
    CHECK(sample_nG_module(g, 2, seed).q.carrier == s.q.carrier);
  }
}
