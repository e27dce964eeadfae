#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgv/fp_linalg.hpp"

namespace pgv {

using Elem = std::uint32_t;

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

inline constexpr std::size_t kDefaultOrderCap = 1024;
inline constexpr std::size_t kMaxOrderCap = 4096;

/// Word in the pc generators: (generator index from 0, exponent) pairs.
using PcWord = std::vector<std::pair<std::size_t, std::uint32_t>>;

struct PcRelation {
  std::size_t i = 0;  // power relation when j is empty
  std::optional<std::size_t> j;
  PcWord rhs;
};

struct PcPresentation {
  std::string name;
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::vector<PcRelation> relations;

  /// Power relation g_i^p, identity if absent.
  const PcWord* power(std::size_t i) const;
  /// Commutator relation [g_i, g_j] for i > j, identity if absent.
  const PcWord* commutator(std::size_t i, std::size_t j) const;
};

/// Full multiplication table of a finite p-group; element 0 is the identity.
class GroupTable {
 public:
  enum class Verify { Full, Sampled, None };

  static GroupPtr from_table(std::uint32_t p, std::size_t order, std::vector<Elem> mul,
                             std::vector<std::string> names = {}, Verify verify = Verify::Sampled,
                             std::size_t order_cap = kMaxOrderCap);

  std::uint32_t p() const { return p_; }
  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem power(Elem a, std::uint64_t k) const;
  std::size_t elem_order(Elem a) const { return eorder_[a]; }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  /// g^-1 a g
  Elem conj(Elem a, Elem g) const { return mul(mul(inv_[g], a), g); }

  bool is_abelian() const;
  /// Exhaustive when the order is at most 512, otherwise at least 10*order^2 random triples.
  bool check_associativity(bool exhaustive) const;

  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<Elem>& table() const { return mul_; }
  std::uint64_t fingerprint() const;
  std::string fingerprint_hex() const;

  GroupPtr opposite() const;
  /// Minimal generating set: least-index elements independent modulo the Frattini subgroup.
  const std::vector<Elem>& generators() const;
  /// Elements ordered by a breadth-first traversal from the identity using generators(),
  /// with parent[x] * gen_used[x] = x.
  struct Traversal {
    std::vector<Elem> order;
    std::vector<Elem> parent;
    std::vector<std::size_t> gen_used;
  };
  const Traversal& traversal() const;

 private:
  GroupTable() = default;
  std::uint32_t p_ = 2;
  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> eorder_;
  std::vector<std::string> names_;
  mutable std::vector<Elem> gens_;
  mutable bool gens_ready_ = false;
  mutable Traversal trav_;
  mutable bool trav_ready_ = false;
};

GroupPtr from_pc_presentation(const PcPresentation& pres, std::size_t order_cap = kDefaultOrderCap);
/// Presentation along a refined lower exponent-p central series; the element with
/// exponent vector e in the result corresponds to to_source[index of e].
struct PcPresentationOf {
  PcPresentation presentation;
  std::vector<Elem> to_source;
};
PcPresentationOf pc_presentation_of(const GroupTable& g, const std::string& name);

class Subgroup {
 public:
  Subgroup() = default;
  /// Members need not be sorted; they are validated for closure only by factories below.
  Subgroup(const GroupTable& g, std::vector<Elem> members);

  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem e) const { return e < bitmap_.size() && bitmap_[e]; }
  bool normal() const { return normal_; }
  std::size_t parent_order() const { return bitmap_.size(); }
  bool subset_of(const Subgroup& o) const;

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  /// Ordering by (order, members).
  bool operator<(const Subgroup& o) const;

 private:
  std::vector<Elem> members_;
  std::vector<bool> bitmap_;
  bool normal_ = false;
};

Subgroup subgroup_closure(const GroupTable& g, const std::vector<Elem>& seeds);
Subgroup trivial_subgroup(const GroupTable& g);
Subgroup whole_group(const GroupTable& g);
Subgroup join(const GroupTable& g, const Subgroup& a, const Subgroup& b);
Subgroup meet(const GroupTable& g, const Subgroup& a, const Subgroup& b);

Subgroup center(const GroupTable& g);
/// Elements commuting with every element of s.
Subgroup centralizer(const GroupTable& g, const Subgroup& s);
/// Subgroup generated by [a, b] with a in x, b in y.
Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& x, const Subgroup& y);
Subgroup derived_subgroup(const GroupTable& g);
/// G' G^p.
Subgroup frattini(const GroupTable& g);
/// Intersection of all maximal subgroups, computed independently of frattini().
Subgroup frattini_by_maximals(const GroupTable& g);
Subgroup omega1(const GroupTable& g, const Subgroup& s);
Subgroup agemo1(const GroupTable& g, const Subgroup& s);

struct ISet {
  std::vector<Elem> members;  // {x in A : x^p in Z(G)}, sorted
  bool closed = false;
  std::optional<Subgroup> subgroup;  // set when closed
  Subgroup generated;                // subgroup generated by the set
};
ISet iset(const GroupTable& g, const Subgroup& a);

/// Throws "not a subgroup" unless the set is a subgroup.
Subgroup iset_subgroup(const GroupTable& g, const Subgroup& a);

bool is_elementary_abelian(const GroupTable& g, const Subgroup& s);
bool is_abelian(const GroupTable& g, const Subgroup& s);
bool is_cyclic(const GroupTable& g, const Subgroup& s);
/// Whether the quotient a/b is cyclic (b normal in a).
bool quotient_is_cyclic(const GroupTable& g, const Subgroup& a, const Subgroup& b);
std::size_t rank_of_elementary(const GroupTable& g, const Subgroup& s);
/// Minimum number of generators d(s).
std::size_t generator_rank(const GroupTable& g, const Subgroup& s);

/// All subgroups of `within` that are normal in g, sorted by (order, members).
/// Throws "order cap" when |g| exceeds cap.
std::vector<Subgroup> normal_subgroups(const GroupTable& g, const Subgroup& within,
                                       std::size_t order_cap = kDefaultOrderCap);
std::vector<Subgroup> normal_subgroups(const GroupTable& g, std::size_t order_cap = kDefaultOrderCap);
std::vector<Subgroup> maximal_subgroups(const GroupTable& g);

class GroupMap {
 public:
  GroupMap() = default;
  /// Throws "not a homomorphism" unless the map respects multiplication.
  GroupMap(GroupPtr source, GroupPtr target, std::vector<Elem> image);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  Elem operator()(Elem x) const { return image_[x]; }
  const std::vector<Elem>& images() const { return image_; }
  bool is_bijective() const;
  bool operator==(const GroupMap& o) const { return image_ == o.image_; }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> image_;
};

/// Homomorphism from images of generators(); nullopt when they do not extend.
std::optional<std::vector<Elem>> extend_from_generators(const GroupTable& src, const GroupTable& dst,
                                                        const std::vector<Elem>& gen_images);

struct QuotientMap {
  GroupPtr source;
  GroupPtr target;
  Subgroup kernel;
  std::vector<Elem> image_of;  // source element -> coset index
  std::vector<Elem> section;   // coset index -> least member
};

/// Cosets ordered by least member. Throws "not normal".
QuotientMap quotient(const GroupPtr& g, const Subgroup& n);

/// Returns an h with f(x) = h^-1 x h for all x, or nullopt. Throws "not automorphism".
std::optional<Elem> is_inner(const GroupTable& g, const std::vector<Elem>& f);
std::size_t map_order(const GroupTable& g, const std::vector<Elem>& f);
bool is_automorphism(const GroupTable& g, const std::vector<Elem>& f);

/// Direct product table with pair (a, b) indexed a * |h| + b.
GroupPtr direct_product(const GroupTable& a, const GroupTable& b);

/// Isomorphism-invariant summary used to separate groups cheaply.
std::vector<std::size_t> group_invariants(const GroupTable& g);
/// An isomorphism a -> b as an element map, or nullopt.
std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& a, const GroupTable& b);

std::string elem_name_from_exponents(const std::vector<std::uint32_t>& e);

}  // namespace pgv
