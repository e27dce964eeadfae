#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgv/cohomology.hpp"

namespace pgv {

struct SpecialInfo {
  bool special = false;
  Subgroup centralizer;       // C_G(N)
  Subgroup center_of_n;       // Z(N)
  Subgroup product;           // N C_G(N)
  ISet i_of_centralizer;      // I(C_G(N))
  bool centralizer_quotient_cyclic = false;
  bool i_inside_n = false;
  bool product_inside_frattini = false;
};

/// N normal, C_G(N)/Z(N) cyclic and I(C_G(N)) <= N <= N C_G(N) <= Phi(G).
SpecialInfo special_info(const GroupTable& g, const Subgroup& n);

/// Special subgroups among the normal subgroups inside Phi(G), sorted by (order, members).
/// Throws "abelian: out of scope" for abelian groups.
std::vector<Subgroup> find_special_subgroups(const GroupTable& g);

struct CertificateProvenance {
  std::string mode;   // "search" or "paper"
  std::string route;  // "derivation", "central-maximal", "special-descent", "generator-search"
  std::vector<Elem> n;
  std::vector<Elem> n1;
  std::vector<Elem> w;
  Cochain tau;
  std::vector<Elem> generator_images;
};

struct Certificate {
  std::string fingerprint;
  std::uint32_t p = 2;
  std::size_t order = 0;
  std::vector<Elem> map;
  CertificateProvenance provenance;
  std::vector<std::string> transcript;
};

struct Diagnostic {
  std::string reason;
  std::vector<Elem> n;
  std::vector<std::string> transcript;
};

struct ProbeResult {
  bool hypotheses = false;
  std::string reason;           // why no certificate, when absent
  std::size_t h1_dim = 0;
  std::size_t center_rank = 0;  // d(Z(G))
  bool w_inside_n = false;
  std::optional<Certificate> certificate;
  std::optional<Diagnostic> diagnostic;
};

/// W = Omega_1(Z(N C_G(N))) as a module for G / N C_G(N); certificate when dim H^1 >= d(Z(G)) + 1
/// and a representative gives a non-inner map, diagnostic when the bound holds but none does.
ProbeResult special_h1_probe(const GroupPtr& g, const Subgroup& n);

struct DescentOutcome {
  std::optional<Certificate> certificate;
  std::optional<Diagnostic> diagnostic;
  bool paper_route_succeeded = false;
};

/// Paper mode: the maximal-subgroup construction when C_G(Phi(G)) is not inside Phi(G),
/// otherwise the descent over special subgroups. A diagnostic is accompanied by a
/// search-mode certificate when one exists.
DescentOutcome descent(const GroupPtr& g);

struct SweepStats {
  std::size_t pairs_tried = 0;
  std::size_t phase = 0;  // 1 = inside Phi(G), 2 = all normal subgroups, 3 = generator search
};

/// Search mode: derivation sweep over N <= Phi(G), then over all normal N, then a generator search.
std::optional<Certificate> engine_sweep(const GroupPtr& g, SweepStats* stats = nullptr);

/// Only the derivation phases restricted to normal N inside Phi(G).
std::optional<Certificate> frattini_sweep(const GroupPtr& g);

struct VerifyReport {
  bool homomorphism = false;
  bool bijective = false;
  bool order_p = false;
  bool noninner = false;
  bool replay = false;
  bool ok() const { return homomorphism && bijective && order_p && noninner && replay; }
};
/// Throws "fingerprint mismatch" when the certificate belongs to another table.
VerifyReport verify_certificate(const GroupPtr& g, const Certificate& c);

struct BruteForceResult {
  bool exists = false;
  std::vector<Elem> witness;
  std::size_t automorphisms = 0;
  std::size_t inner = 0;
};
/// Enumerates every automorphism from generator images; |g| <= 16.
BruteForceResult brute_force_order_p_noninner(const GroupTable& g);

/// Backtracking over generator images for a non-inner automorphism of order p.
std::optional<std::vector<Elem>> search_noninner_by_generators(const GroupTable& g, std::size_t leaf_budget);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);
std::string diagnostic_to_json(const Diagnostic& d);

}  // namespace pgv
