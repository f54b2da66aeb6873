#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayleyci/aut_search.hpp"
#include "cayleyci/digraph.hpp"
#include "cayleyci/finite_group.hpp"
#include "cayleyci/perm_group.hpp"

namespace cayleyci {

// Total coloring of ordered pairs by the orbits of h on them, colors
// assigned in first-seen row-major order. Orbits of diagonal pairs
// become vertex colors.
ColoredDigraph orbital_coloring(const PermGroup& h);

// The 2-closure: the full automorphism group of h's orbital coloring,
// enumerated. Throws CapExceededError when the result exceeds cap.
PermGroup two_closure(const PermGroup& h, std::uint64_t cap = kDefaultAutCap);

struct CiVerdict {
  bool is_ci = false;
  int regular_subgroups_found = 0;
  std::optional<PermGroup> failing_subgroup;            // present iff a decided non-CI
  std::vector<std::pair<PermGroup, Perm>> conjugator_witnesses;
  std::optional<std::string> skipped;                   // set when no decision was reached
};

// Decides whether cayley(g, conn) is a CI-graph by the regular-subgroup
// criterion: every regular subgroup of the automorphism group that is
// isomorphic to g must be conjugate to the right regular representation
// inside the automorphism group. Empty and complete connection sets
// short-circuit to CI. When the automorphism group exceeds cap the
// verdict is skipped, never guessed.
CiVerdict is_ci_graph_babai(const FiniteGroup& g, const std::vector<int>& conn,
                            std::uint64_t cap = kDefaultAutCap);

// Literal CI oracle: for every subset T of g minus the identity, if
// cayley(g, conn) and cayley(g, T) are isomorphic then some group
// automorphism must carry conn to T. Exponential in |g|; requires
// |g| <= 16.
bool is_ci_graph_definitional(const FiniteGroup& g, const std::vector<int>& conn);

// A sigma in the 2-closure of <h1, h2> with h1^sigma = h2, or nullopt.
// h1 and h2 must be regular of equal degree.
std::optional<Perm> is_dci2_pair(const PermGroup& h1, const PermGroup& h2,
                                 std::uint64_t cap = kDefaultAutCap);

struct ScanReport {
  std::string group;
  std::string mode;  // "exhaustive" or "sample"
  std::optional<std::uint64_t> seed;
  int total = 0;
  int ci = 0;
  std::vector<std::pair<std::string, std::string>> skipped;  // (conn, reason)
  std::vector<std::string> failures;                         // conn of decided non-CI sets
  std::int64_t elapsed_ms = 0;  // wall time; everything else is deterministic

  std::string to_json() const;
  std::string to_text() const;
};

// Runs the CI check over every connection set of g (requires |g| <= 8).
ScanReport dci_scan_exhaustive(const FiniteGroup& g, const GroupSpec& spec,
                               std::uint64_t cap = kDefaultAutCap);

// Runs the CI check over `count` pseudorandom connection sets. Each
// non-identity element (ascending index r) is included iff the r-th
// draw of an mt19937_64 seeded with `seed` has its low bit set; the
// sampled sets are then sorted by bitmask, duplicates kept.
ScanReport dci_scan_sample(const FiniteGroup& g, const GroupSpec& spec, int count,
                           std::uint64_t seed, std::uint64_t cap = kDefaultAutCap);

struct PropertyFailure {
  std::string property;
  std::string detail;
};

// Randomized 2-closure property suite over `samples` generated
// subgroups of degree 2..max_degree: containment, idempotence,
// orbital preservation, graph-automorphism closure, monotonicity, and
// (degree <= 6) agreement with the literal pairwise definition checked
// against all degree! permutations. Returns the violations.
std::vector<PropertyFailure> two_closure_property_suite(int samples, std::uint64_t seed,
                                                        int max_degree = 8);

}  // namespace cayleyci
