#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pgv/group_core.hpp"

namespace pgv {

/// Parse failure with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct CatalogEntry {
  std::string name;
  PcPresentation presentation;
  std::vector<std::string> tags;  // sorted
  std::size_t order = 1;

  bool has_tag(std::string_view t) const;
};

/// Presentations in the line grammar
///   group <name> / p <prime> / gens <n> / pow <i> : <word> / comm <i> <j> : <word> / end
/// with '#' comments. Entries come back untagged, in file order.
std::vector<CatalogEntry> parse_presentations(std::string_view text);

/// Text in the presentation file grammar, accepted by parse_presentations.
std::string format_presentation(const PcPresentation& pres);

/// Tags derived from the name and the group structure; also sets order.
void assign_tags(CatalogEntry& e, const GroupTable& g);

/// "builtin" (or an empty path) gives the builtin catalog; otherwise a presentation file.
/// Throws ParseError with location, or Error("duplicate name: X").
std::vector<CatalogEntry> load_catalog(const std::string& path);

/// Cyclic and abelian groups of order <= 64, dihedral, quaternion and semidihedral 2-groups,
/// modular and extraspecial groups, the data files for orders 16 and 81, selected
/// direct products and a few groups with special subgroups (tag "special"). Sorted by (order, p), stable.
const std::vector<CatalogEntry>& builtin_catalog();

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat, std::string_view name);

/// Group table of an entry, memoized per presentation name for the builtin catalog.
GroupPtr entry_group(const CatalogEntry& e, std::size_t order_cap = kMaxOrderCap);

/// Presentation helpers used by the builtin catalog.
PcPresentation cyclic_presentation(std::uint32_t p, std::size_t k);
/// Factors given as exponents, e.g. {3,1} for C8 x C2.
PcPresentation abelian_presentation(std::uint32_t p, const std::vector<std::size_t>& exps);
/// <s> acting on <r>: |s| divides p*|r|, s^p = r^t, s^-1 r s = r^u, |r| = p^m.
PcPresentation metacyclic_presentation(const std::string& name, std::uint32_t p, std::size_t m, std::uint64_t t,
                                       std::uint64_t u);
PcPresentation direct_product_presentation(const PcPresentation& a, const PcPresentation& b);

/// Tag expression: OR of AND-terms. Terms: tag, !term, all, order<=N, order>=N, order<N,
/// order>N, order=N, p=N, name=X. The empty expression matches nothing.
class TagExpr {
 public:
  static TagExpr parse(std::string_view text);
  bool matches(const CatalogEntry& e) const;
  bool empty() const { return clauses_.empty(); }

 private:
  struct Term {
    enum Kind { Tag, All, OrderLe, OrderGe, OrderLt, OrderGt, OrderEq, PEq, NameEq } kind = Tag;
    bool negated = false;
    std::string text;
    std::size_t value = 0;
  };
  std::vector<std::vector<Term>> clauses_;
};

std::vector<const CatalogEntry*> select_entries(const std::vector<CatalogEntry>& cat, const TagExpr& expr);

}  // namespace pgv
