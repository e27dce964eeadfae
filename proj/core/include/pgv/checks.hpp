#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pgv/catalog.hpp"

namespace pgv {

enum class Status { Pass, Counterexample, SkippedHypothesis, Unsupported };

/// "PASS", "COUNTEREXAMPLE", "SKIPPED_HYPOTHESIS", "UNSUPPORTED".
const char* status_name(Status s);

using DetailValue = std::variant<std::int64_t, bool, std::string, std::vector<std::int64_t>>;
using Details = std::map<std::string, DetailValue>;

/// Module parameters for module-level checks. Zero means "let the check choose".
struct ModuleSpec {
  std::size_t copies = 0;  // n, the number of copies of F_p(G)
  std::size_t t = 0;       // rank of the kernel module P of the extension
  /// "sampled" (default), "free", "augmentation" (n copies of J(F_p(G))), "radical:<k>" (J^k)
  std::string kind = "sampled";
};

struct CheckInstance {
  std::string entry;  // catalog name, informational
  GroupPtr group;
  std::uint64_t seed = 0;
  std::optional<std::vector<Elem>> normal;  // restrict group-level checks to this N
  ModuleSpec module;
  /// Wall-clock budget in milliseconds, 0 for none. Exceeding it yields UNSUPPORTED.
  std::uint64_t budget_ms = 0;

  std::string descriptor() const;
};

struct CheckVerdict {
  std::string check_id;
  std::string instance;
  Status status = Status::Unsupported;
  Details details;
  std::uint64_t replay_seed = 0;
};

/// Registry ids in report order.
const std::vector<std::string>& check_ids();
/// Canonical id for an id or alias; throws Error("unknown check id: X").
std::string canonical_check_id(const std::string& id);

/// Evaluates the hypotheses, then both sides of the claim. Never throws for
/// mathematical outcomes; throws Error only for an unknown id.
CheckVerdict run_check(const std::string& id, const CheckInstance& inst);

struct ReverifyResult {
  bool agrees = false;
  std::string solver;  // "dense" when every H^1 came from the all-pairs system
  CheckVerdict recomputed;
};

/// Recomputes the verdict from its replay seed with the all-pairs cohomology solver
/// where the system is small enough, and compares status and details.
ReverifyResult reverify(const CheckVerdict& v, const CheckInstance& inst);

/// JSON object for one verdict (keys sorted).
std::string verdict_to_json(const CheckVerdict& v);

}  // namespace pgv
