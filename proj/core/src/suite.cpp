#include "pgv/suite.hpp"

#include <algorithm>

#include "json.hpp"

namespace pgv {

std::size_t SuiteReport::count(const std::string& check, Status s) const {
  auto it = counts.find(check);
  if (it == counts.end()) return 0;
  auto jt = it->second.find(status_name(s));
  return jt == it->second.end() ? 0 : jt->second;
}

std::size_t SuiteReport::total(Status s) const {
  std::size_t n = 0;
  for (const auto& [k, m] : counts) n += count(k, s);
  return n;
}

std::string SuiteReport::to_json(const SuiteOptions& opts) const {
  nlohmann::json j;
  j["catalog"] = opts.catalog;
  j["filter"] = opts.filter;
  j["seed"] = opts.seed;
  j["samples"] = opts.samples;
  j["groups"] = groups;
  j["counts"] = counts;
  nlohmann::json totals = nlohmann::json::object();
  for (Status s : {Status::Pass, Status::Counterexample, Status::SkippedHypothesis, Status::Unsupported})
    totals[status_name(s)] = total(s);
  j["totals"] = totals;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json v = nlohmann::json::parse(verdict_to_json(r.verdict));
    if (r.reverified) v["reverify_agrees"] = r.reverify_agrees;
    vs.push_back(std::move(v));
  }
  j["verdicts"] = vs;
  return j.dump(2);
}

std::uint64_t pair_seed(std::uint64_t seed, const std::string& entry, const std::string& check, std::size_t sample) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  mix(entry);
  mix(check);
  mix(std::to_string(sample));
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

SuiteReport run_suite(const SuiteOptions& opts) {
  const auto cat = load_catalog(opts.catalog);
  TagExpr expr = TagExpr::parse(opts.filter);
  std::vector<std::string> ids;
  if (opts.checks.empty())
    ids = check_ids();
  else
    for (const auto& c : opts.checks) ids.push_back(canonical_check_id(c));

  SuiteReport rep;
  for (const CatalogEntry* e : select_entries(cat, expr)) {
    ++rep.groups;
    GroupPtr g;
    std::string load_error;
    try {
      g = entry_group(*e);
    } catch (const Error& err) {
      load_error = err.what();
    }
    for (const auto& id : ids)
      for (std::size_t s = 0; s < std::max<std::size_t>(opts.samples, 1); ++s) {
        CheckInstance inst;
        inst.entry = e->name;
        inst.group = g;
        inst.seed = pair_seed(opts.seed, e->name, id, s);
        inst.module = opts.module;
        inst.budget_ms = opts.budget_ms;
        SuiteRecord rec;
        if (!g) {
          rec.verdict.check_id = id;
          rec.verdict.instance = "group=" + e->name;
          rec.verdict.status = Status::Unsupported;
          rec.verdict.replay_seed = inst.seed;
          rec.verdict.details["reason"] = load_error;
        } else {
          rec.verdict = run_check(id, inst);
          if (opts.reverify_counterexamples && rec.verdict.status == Status::Counterexample) {
            ReverifyResult rv = reverify(rec.verdict, inst);
            rec.reverified = true;
            rec.reverify_agrees = rv.agrees;
          }
        }
        ++rep.counts[id][status_name(rec.verdict.status)];
        rep.records.push_back(std::move(rec));
      }
  }
  return rep;
}

}  // namespace pgv
