#include <doctest.h>

#include <random>

#include "pgv/catalog.hpp"
#include "pgv/extensions.hpp"
#include "oracles.hpp"

using namespace pgv;

namespace {

GroupPtr builtin(const std::string& name) { return entry_group(*find_entry(builtin_catalog(), name)); }

Extension nonsplit_extension(const GroupPtr& g, std::size_t t) {
  ModulePtr p = GModule::trivial(g, t);
  CohomologySpace h = cohomology(p, 2);
  REQUIRE(!h.h_reps.empty());
  return build_extension(TwoCocycle{p, h.h_reps.front()});
}

}  // namespace

TEST_CASE("extensions of C_p by F_p") {
  for (const char* name : {"C2", "C3", "C5"}) {
    GroupPtr g = builtin(name);
    const std::uint32_t p = g->p();
    ModulePtr f = GModule::trivial(g, 1);
    Extension split = build_extension(TwoCocycle{f, Cochain(p * p, 0)});
    CHECK(split.group->order() == p * p);
    CHECK_FALSE(is_cyclic(*split.group, whole_group(*split.group)));
    Extension e = nonsplit_extension(g, 1);
    CHECK(is_cyclic(*e.group, whole_group(*e.group)));
    for (Elem x = 0; x < e.group->order(); ++x)
      for (Elem y = 0; y < e.group->order(); ++y)
        CHECK(e.eta[e.group->mul(x, y)] == g->mul(e.eta[x], e.eta[y]));
    CHECK(e.kernel().size() == p);
    CHECK(e.kernel().normal());
  }
}

TEST_CASE("non-cocycles are rejected") {
  GroupPtr g = builtin("C2");
  ModulePtr f = GModule::trivial(g, 1);
  // f(1, 1) = 1 breaks normalization
  CHECK_THROWS_AS(build_extension(TwoCocycle{f, Cochain{1, 0, 0, 0}}), Error);
}

TEST_CASE("cohomologous cocycles give equivalent extensions") {
  GroupPtr g = builtin("C4");
  ModulePtr f = GModule::trivial(g, 1);
  CohomologySpace h = cohomology(f, 2);
  Cochain sigma{0, 1, 0, 1};
  Cochain f2 = h.h_reps.front();
  axpy(f2, 1, coboundary2(*f, sigma), 2);
  Extension e1 = build_extension(TwoCocycle{f, h.h_reps.front()});
  Extension e2 = build_extension(TwoCocycle{f, f2});
  std::vector<Elem> map = equivalence_map(e1, e2, sigma);
  for (Elem x = 0; x < e1.group->order(); ++x)
    for (Elem y = 0; y < e1.group->order(); ++y)
      CHECK(map[e1.group->mul(x, y)] == e2.group->mul(map[x], map[y]));
}

TEST_CASE("transfer maps") {
  for (const char* name : {"C2", "C3", "C2xC2"}) {
    GroupPtr g = builtin(name);
    for (std::size_t t : {1u, 2u}) {
      if (g->order() * oracle::ipow(g->p(), t) > 36) continue;
      Extension e = nonsplit_extension(g, t);
      TransferPair tp = transfer_maps(e, 1);
      const std::uint32_t p = g->p();
      // down after up vanishes
      FpMatrix du = tp.up * tp.down;
      CHECK(is_zero(du.data()));
      // up after down is right multiplication by the norm element
      FpMatrix ud = tp.down * tp.up;
      for (std::size_t r = 0; r < ud.rows(); ++r) {
        Vec x(ud.rows(), 0);
        x[r] = 1;
        CHECK(ud.left_apply(x) == tp.top->right_mul_alg(x, tp.norm_element));
      }
      CHECK(tp.down_kernel() == filtration(tp, 1).two_sided);
      CHECK(tp.tuples.size() == oracle::ipow(p, t));
      FiltrationLayer top = filtration(tp, t * (p - 1));
      CHECK(top.two_sided.dim() == g->order());
      CHECK(filtration(tp, t * (p - 1) + 1).two_sided.dim() == 0);
    }
  }
}

TEST_CASE("filtration layers for t = 2") {
  for (const char* name : {"C2", "C3"}) {
    GroupPtr g = builtin(name);
    const std::uint32_t p = g->p();
    Extension e = build_extension(TwoCocycle{GModule::trivial(g, 2), Cochain(g->order() * g->order() * 2, 0)});
    TransferPair tp = transfer_maps(e, 1);
    for (std::size_t i = 0; i + 1 < 2 * p; ++i) {
      std::size_t dim = filtration(tp, i).two_sided.dim() - filtration(tp, i + 1).two_sided.dim();
      std::size_t copies = i <= p - 1 ? i + 1 : 2 * p - 1 - i;
      CHECK(dim == copies * g->order());
    }
  }
}

TEST_CASE("quotient by part of the kernel") {
  GroupPtr g = builtin("C2");
  Extension e = nonsplit_extension(g, 2);
  FpSubspace line = FpSubspace::span(2, 2, {{1, 0}});
  Subgroup part = e.kernel_part(line);
  CHECK(part.size() == 2);
  ExtensionQuotient q = quotient_by_kernel_part(e, part);
  CHECK(q.quotient.target->order() == 4);
  for (Elem x = 0; x < e.group->order(); ++x) CHECK(q.to_base[q.quotient.image_of[x]] == e.eta[x]);
}

TEST_CASE("lambda expansion exists for the identity") {
  GroupPtr g = builtin("C3");
  Extension e = nonsplit_extension(g, 1);
  TransferPair tp = transfer_maps(e, 1);
  Vec y(tp.top->dim(), 0);
  y[0] = 1;
  LambdaExpansion l = lambda_expansion(tp, y, false);
  CHECK(l.basis);
  CHECK(l.exists);
}

TEST_CASE("radical of F_p(C_p) keeps H^1 under the cyclic extension") {
  for (const char* name : {"C2", "C3", "C5"}) {
    GroupPtr g = builtin(name);
    FreeBimodule fb(g, 1);
    ModulePtr j = restrict_module(make_submodule(fb.right_module(), radical(*fb.right_module())));
    CHECK(h1_dim(j) == 1);
    Extension e = nonsplit_extension(g, 1);
    CHECK(e.group->order() == g->order() * g->order());
    CHECK(is_cyclic(*e.group, whole_group(*e.group)));
    CHECK(h1_dim(inflate_module(j, e.group, e.eta)) == 1);
  }
}
