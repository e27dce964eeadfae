#pragma once

#include <vector>

#include "pgv/cohomology.hpp"

namespace pgv {

/// Group of pairs (a, g), a a module vector and g in G, with
/// (a,g)(b,h) = (a act(h) + b + f(g,h), gh), indexed a + |N| * g.
struct Extension {
  GroupPtr group;
  GroupPtr base;
  ModulePtr kernel_module;
  std::size_t kernel_size = 1;
  std::vector<Elem> eta;           // element -> base element
  std::vector<Elem> kernel_embed;  // module vector index -> element
  std::vector<Elem> section;       // base element -> (0, g)

  Elem element(std::size_t vec_index, Elem g) const { return Elem(vec_index + kernel_size * g); }
  Subgroup kernel() const;
  /// Subgroup of the kernel given by a submodule of the kernel module.
  Subgroup kernel_part(const FpSubspace& sub) const;
};

/// Throws "not a cocycle" unless f is a normalized 2-cocycle.
Extension build_extension(const TwoCocycle& f, std::size_t order_cap = kMaxOrderCap);

/// Flat 2-cochain of the coboundary of a 1-cochain sigma.
Cochain coboundary2(const GModule& m, const Cochain& sigma);

/// When f1 - f2 is the coboundary of sigma, (a,g) -> (a + sigma(g), g) from e1 to e2.
/// Throws "not equivalent" otherwise.
std::vector<Elem> equivalence_map(const Extension& e1, const Extension& e2, const Cochain& sigma);

/// Elements of the extension modulo a normal subgroup of the kernel, together with the
/// induced projection onto the base group.
struct ExtensionQuotient {
  QuotientMap quotient;
  std::vector<Elem> to_base;  // quotient element -> base element
};
ExtensionQuotient quotient_by_kernel_part(const Extension& e, const Subgroup& part);

/// Maps between n copies of F_p(E) and n copies of F_p(G).
struct TransferPair {
  const Extension* ext = nullptr;
  std::size_t n = 0;
  BimodulePtr top;     // over E
  BimodulePtr bottom;  // over G
  FpMatrix down;       // top.dim x bottom.dim, coefficients summed over eta-fibres
  FpMatrix up;         // bottom.dim x top.dim, g -> (0,g) * prod (a_i - 1)^(p-1)
  std::vector<std::vector<std::uint32_t>> tuples;  // exponent tuples in L^t, lexicographic
  std::vector<Vec> kernel_factors;                 // prod (a_i - 1)^(i_i) in F_p(E), per tuple
  Vec norm_element;                                // prod (a_i - 1)^(p-1)

  std::size_t t() const { return tuples.empty() ? 0 : tuples.front().size(); }
  /// e_{i,l}: the kernel factor of tuple i placed in copy l.
  Vec e_vector(std::size_t tuple, std::size_t l) const;
  FpSubspace down_kernel() const;
  FpSubspace up_image() const;
};

TransferPair transfer_maps(const Extension& ext, std::size_t n);

struct FiltrationLayer {
  std::size_t m = 0;
  FpSubspace two_sided;
  FpSubspace left_generated;
  FpSubspace right_generated;
};
/// I_{n,m}: submodule generated by e_{i,l} with |i| >= m.
FiltrationLayer filtration(const TransferPair& tp, std::size_t m);

struct LambdaExpansion {
  bool basis = false;      // the products x * k_i (or k_i * x) form a basis of F_p(E)
  bool exists = false;
  bool zero_tuple_vanishes = false;
  /// coefficients indexed [l][tuple * |G| + g] for the section element of g
  std::vector<Vec> lambda;
};
/// Expansion y = sum lambda(i,l) e_{i,l} with lambda in the span of diagonal section elements,
/// multiplied on the left (or on the right when right_variant is set).
LambdaExpansion lambda_expansion(const TransferPair& tp, std::span<const Residue> y, bool right_variant);

}  // namespace pgv
