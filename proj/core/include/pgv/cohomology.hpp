#pragma once

#include <optional>
#include <vector>

#include "pgv/gmodule.hpp"

namespace pgv {

inline constexpr std::size_t kDegree2OrderCap = 64;

/// Cochains are stored flat over the acting group of the module:
/// degree 1 at [g * dim + c], degree 2 at [(g * |G| + h) * dim + c].
using Cochain = Vec;

struct Derivation {
  ModulePtr module;
  Cochain values;

  Vec at(Elem g) const;
  /// tau(gh) = tau(g) act(h) + tau(h) for all g, h.
  bool satisfies_identity() const;
};

struct TwoCocycle {
  ModulePtr module;
  Cochain values;

  Vec at(Elem g, Elem h) const;
  bool is_normalized() const;
  /// f(g,h) act(k) + f(gh,k) = f(h,k) + f(g,hk) for all g, h, k.
  bool satisfies_identity() const;
};

struct CohomologySpace {
  int degree = 1;
  ModulePtr module;
  std::size_t z_dim = 0, b_dim = 0, h_dim = 0;
  std::vector<Cochain> z_basis;  // echelon basis
  std::vector<Cochain> b_basis;  // echelon basis
  std::vector<Cochain> h_reps;   // echelon complement of B in Z

  Derivation derivation(const Cochain& c) const { return {module, c}; }
  TwoCocycle cocycle(const Cochain& c) const { return {module, c}; }
  FpSubspace z_space() const;
  FpSubspace b_space() const;
};

/// Degree 1 or 2 cohomology of a right module over its acting group.
/// Cocycle conditions are imposed for every (g, s) or (g, h, s) with s a generator;
/// this is equivalent to imposing them for all pairs or triples.
/// Degree 2 requires |G| <= degree2_cap.
CohomologySpace cohomology(const ModulePtr& m, int degree, std::size_t degree2_cap = kDegree2OrderCap);

struct CohomologyDims {
  std::size_t z_dim = 0, b_dim = 0, h_dim = 0;
};
/// Same dimensions from the system over all pairs (degree 1) or all triples (degree 2).
CohomologyDims cohomology_all_pairs(const ModulePtr& m, int degree);

std::size_t h1_dim(const ModulePtr& m);

Cochain coboundary_of_vector(const GModule& m, std::span<const Residue> v);

/// psi(x) = x * tau(x N1) for tau a derivation on g / n1 with values in w.
std::vector<Elem> derivation_to_automorphism(const GroupTable& g, const ConjugationModule& cm,
                                             const Cochain& tau);
/// delta_x(g) = g^-1 g^x on g / n1. Throws "not W-valued".
Cochain conjugation_derivation(const GroupTable& g, const ConjugationModule& cm, Elem x);
/// Pulls a derivation on the coarse quotient back to the fine one.
Cochain inflate(const Cochain& tau, std::size_t dim, const QuotientMap& coarse, const QuotientMap& fine);

struct NoninnerWitness {
  std::size_t rep_index = 0;
  Cochain tau;
  std::vector<Elem> map;
};
/// Tests the automorphism of each H^1 representative; since psi_{tau+sigma} = psi_tau psi_sigma
/// and coboundaries give inner maps, the basis decides the whole space.
std::optional<NoninnerWitness> derivation_span_noninner_probe(const GroupTable& g, const ConjugationModule& cm,
                                                              const CohomologySpace& h1);

}  // namespace pgv
