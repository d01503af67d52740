#pragma once

#include <string>
#include <vector>

#include "bicay/group.hpp"
#include "bicay/solvers.hpp"

namespace bicay {

inline constexpr const char* kToolVersion = "bicay 1.0.0";

enum class ClaimStatus { Pass, Fail, Inconclusive, Diagnostic };
std::string to_string(ClaimStatus status);

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Pass;
  std::string expected;
  std::string computed;
  std::string notes;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::string timestamp;  // ISO-8601 UTC, set at assembly time
  std::string params;
  std::vector<ClaimResult> claims;
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;
  int diagnostics = 0;
  bool all_ok() const { return failed == 0; }
  const ClaimResult* find(const std::string& id) const;
};

// Full claim battery for the Z_{p^2 q^2} family instance (p, q): counts,
// degrees, connectivity, girth, triangle structure, clique/chromatic/
// independence values with certificates, component structure and explicit
// isomorphisms, diameters, and validation of every explicit construction.
// Exact-equality claims that rest on budget-limited solver runs come back
// Inconclusive, never Pass.
VerificationReport verify_p2q2(int p, int q, const Budget& budget = {});

// Structural claims for an arbitrary group with S3 = {identity}: counts,
// degree/regularity rules, connectivity laws (the side-connectivity
// biconditional is checked as stated alongside the repaired union-generation
// form), Eulerian rule on connected instances, same-side triangle rule,
// the clique-number maximum rule, and the chromatic sandwich.
VerificationReport verify_general(const FiniteGroup& g,
                                  const std::vector<int>& s1,
                                  const std::vector<int>& s2,
                                  const Budget& budget = {});

// Seeded randomized battery: `trials` independent draws of inverse-closed
// identity-free (S1, S2) pairs (each nonidentity element kept with
// probability 1/2, then symmetrized; empty draws are redrawn), running the
// verify_general claims per draw with a per-trial claim prefix.
VerificationReport verify_general_random(const FiniteGroup& g, int trials,
                                         unsigned seed,
                                         const Budget& budget = {});

// Claims for the variant whose cross edges use every involution: cross-edge
// regularity, counts, the cross-edge connectivity rule as stated, the
// component/coset partition rule, the involution-separating property
// (checked verbatim from elementary abelian 2-subgroups and cross-checked
// against the equivalent S-meets-no-involution form), the two-per-side
// mixed-clique bound over all maximal cliques, and clique diagnostics.
VerificationReport verify_involution(const FiniteGroup& g,
                                     const std::vector<int>& s1,
                                     const std::vector<int>& s2,
                                     const Budget& budget = {});

// Distance-structure diagnostics for the family instance (p, q): the
// side-1 product distance law, the empirical case table, and the
// cross-component distance split realizing the diameter.
VerificationReport distance_diagnostics(int p, int q);

// Verbatim involution-separating test: S meets no nontrivial elementary
// abelian 2-subgroup outside the identity (subgroups enumerated from
// involution singletons and commuting involution pairs).
bool is_involution_separating(const FiniteGroup& g, const std::vector<int>& s);

std::string report_to_json(const VerificationReport& report);

}  // namespace bicay
