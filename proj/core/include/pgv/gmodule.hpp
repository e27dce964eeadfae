#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "pgv/fp_linalg.hpp"
#include "pgv/group_core.hpp"

namespace pgv {

enum class Side { Right, Left };

inline constexpr std::size_t kModuleDimCap = 8192;

/// Finite-dimensional F_p-module with a right action v -> v * act(g).
/// A left module over G is stored as a right module over the opposite table.
class GModule {
 public:
  GModule(GroupPtr base, Side side, std::size_t dim, std::vector<FpMatrix> act, bool verify = true);

  static std::shared_ptr<const GModule> trivial(GroupPtr g, std::size_t dim);

  /// The group the action is a right action of (base, or its opposite for left modules).
  const GroupPtr& acting() const { return acting_; }
  const GroupPtr& base() const { return base_; }
  Side side() const { return side_; }
  std::uint32_t p() const { return base_->p(); }
  std::size_t dim() const { return dim_; }
  const FpMatrix& act(Elem g) const { return act_[g]; }
  const std::vector<FpMatrix>& actions() const { return act_; }
  Vec apply(std::span<const Residue> v, Elem g) const { return act_[g].left_apply(v); }
  /// Generators of the acting group.
  const std::vector<Elem>& generators() const { return acting_->generators(); }

 private:
  GroupPtr base_;
  GroupPtr acting_;
  Side side_;
  std::size_t dim_;
  std::vector<FpMatrix> act_;
};

using ModulePtr = std::shared_ptr<const GModule>;

struct Submodule {
  ModulePtr ambient;
  FpSubspace carrier;

  std::size_t dim() const { return carrier.dim(); }
};

struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  FpMatrix matrix;  // source.dim x target.dim, acting on row vectors

  Vec apply(std::span<const Residue> v) const { return matrix.left_apply(v); }
  bool is_equivariant() const;
  bool is_injective() const;
};

bool is_submodule(const GModule& m, const FpSubspace& s);
Submodule whole_module(const ModulePtr& m);
/// Smallest submodule containing the vectors.
Submodule generated_submodule(const ModulePtr& m, const std::vector<Vec>& vectors);
/// Throws "not a submodule" unless s is invariant.
Submodule make_submodule(const ModulePtr& m, FpSubspace s);

FpSubspace fixed_points(const GModule& m);
FpSubspace fixed_points(const Submodule& s);
/// Vectors fixed by every listed element of the acting group.
FpSubspace fixed_points_under(const GModule& m, const std::vector<Elem>& elems);

/// J(M) = sum over g of the image of act(g) - I.
FpSubspace radical(const GModule& m);
FpSubspace radical(const Submodule& s);

std::size_t d_G(const GModule& m);
std::size_t d_G(const Submodule& s);
/// d_G of s / t for t a submodule of s.
std::size_t d_G_quotient(const Submodule& s, const Submodule& t);
/// Echelon-first elements of s independent modulo J(s); they generate s.
std::vector<Vec> minimal_generators(const Submodule& s);
std::vector<Vec> minimal_generators(const ModulePtr& m);

/// The action restricted to the carrier, in the carrier's echelon basis.
ModulePtr restrict_module(const Submodule& s);
/// Quotient module s / t in echelon-complement coordinates.
ModulePtr quotient_module(const Submodule& s, const Submodule& t);

/// Contragredient dual; the side flips.
ModulePtr dual_module(const GModule& m);

/// Module over e obtained through a homomorphism e -> m.base() given as an element map.
ModulePtr inflate_module(const ModulePtr& m, const GroupPtr& e, const std::vector<Elem>& to_base);

/// Product of n copies of F_p(G) with left and right multiplication.
class FreeBimodule {
 public:
  FreeBimodule(GroupPtr g, std::size_t n);

  const GroupPtr& group() const { return g_; }
  std::size_t copies() const { return n_; }
  std::size_t dim() const { return n_ * g_->order(); }
  std::uint32_t p() const { return g_->p(); }
  std::size_t coord(std::size_t copy, Elem g) const { return copy * g_->order() + g; }

  /// x * g
  Vec right_mul(std::span<const Residue> x, Elem g) const;
  /// g * x
  Vec left_mul(Elem g, std::span<const Residue> x) const;
  /// Componentwise group-algebra products x * (y,...,y) and (y,...,y) * x for y in F_p(G).
  Vec right_mul_alg(std::span<const Residue> x, std::span<const Residue> y) const;
  Vec left_mul_alg(std::span<const Residue> y, std::span<const Residue> x) const;
  /// sum_l x_l y_l in F_p(G).
  Vec pair_product(std::span<const Residue> x, std::span<const Residue> y) const;
  /// Coefficient of the identity in sum_l x_l y_l.
  Residue delta(std::span<const Residue> x, std::span<const Residue> y) const;
  FpMatrix gram_matrix() const;
  /// sum_{g} g in copy l.
  Vec socle_vector(std::size_t l) const;
  FpSubspace socle() const;

  const ModulePtr& right_module() const { return right_; }
  const ModulePtr& left_module() const { return left_; }

 private:
  GroupPtr g_;
  std::size_t n_;
  ModulePtr right_;
  ModulePtr left_;
};

using BimodulePtr = std::shared_ptr<const FreeBimodule>;

/// Group algebra product in F_p(G).
Vec group_algebra_mul(const GroupTable& g, std::span<const Residue> a, std::span<const Residue> b);

enum class AnnSide { LeftOfRight, RightOfLeft };

/// L_G(Q) = {x : x Q = 0} for a right submodule Q, or R_G(T) = {x : T x = 0} for a left one.
/// Computed as the orthogonal complement for the identity-coefficient pairing.
Submodule annihilator(const FreeBimodule& b, const Submodule& q, AnnSide side);
/// The same set from the product-zero definition (used as a cross-check).
FpSubspace annihilator_by_products(const FreeBimodule& b, const FpSubspace& q, AnnSide side);

/// Ann_L(x_1..x_s) = {(y_i) : sum_i (y_i,...,y_i) x_i = 0}, Ann_R with products on the right.
/// The result lives in the product of s copies of F_p(G).
struct TupleAnnihilator {
  BimodulePtr space;
  Submodule sub;
};
TupleAnnihilator ann_tuple(const FreeBimodule& b, const std::vector<Vec>& xs, AnnSide side);

/// Elementary abelian normal subgroup w as a module for g / n under conjugation.
struct ConjugationModule {
  QuotientMap quotient;
  ModulePtr module;
  std::vector<Elem> basis;        // least-index generators of w
  std::vector<Elem> elem_of;      // vector index -> element of w
  std::vector<std::int64_t> index_of;  // element -> vector index or -1

  Elem to_element(std::span<const Residue> v) const;
  Vec to_vector(Elem x) const;
};

std::size_t vec_to_index(std::span<const Residue> v, std::uint32_t p);
Vec index_to_vec(std::size_t idx, std::size_t dim, std::uint32_t p);

/// Throws "not a module" unless w is elementary abelian, normal and centralized by n.
ConjugationModule module_from_conjugation(const GroupPtr& g, const Subgroup& n, const Subgroup& w);

/// Injective equivariant map into a product of dim(M^G) copies of F_p(G) sending
/// M^G onto the socle. Throws "no embedding found".
ModuleHom embed_into_free(const ModulePtr& m);

struct SampledModule {
  BimodulePtr ambient;
  Submodule q;          // right submodule containing the socle
  std::size_t h1_dim = 0;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
};

/// Right submodule of n copies of F_p(g) containing the socle with H^1 of dimension at most n.
/// Throws when 64 attempts fail.
SampledModule sample_nG_module(const GroupPtr& g, std::size_t n, std::uint64_t seed);
/// Like sample_nG_module, but also accepts a custom predicate on the H^1 dimension.
std::optional<SampledModule> sample_module_where(const GroupPtr& g, std::size_t n, std::uint64_t seed,
                                                 const std::function<bool(std::size_t h1)>& accept,
                                                 std::size_t attempts = 64);

/// Powers of the augmentation ideal applied to a module: J^k(M).
FpSubspace radical_power(const GModule& m, std::size_t k);

}  // namespace pgv
