#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayleyci/digraph.hpp"
#include "cayleyci/finite_group.hpp"
#include "cayleyci/perm.hpp"
#include "cayleyci/perm_group.hpp"

namespace cayleyci {

inline constexpr std::uint64_t kDefaultAutCap = 250'000;

struct AutResult {
  std::vector<Perm> generators;  // every generator preserves the color matrix
  // Exact group order, or 0 when it does not fit in 64 bits. When the
  // order is within the cap it has been re-derived by element
  // enumeration; otherwise only the generating set is available.
  std::uint64_t order = 1;
  bool capped = false;
};

// Full automorphism group of the colored digraph, by canonical
// partition refinement with individualization backtracking. Known
// automorphisms may be passed as seeds to speed up orbit pruning; they
// are verified and an invalid seed throws invalid_argument.
AutResult automorphism_group(const ColoredDigraph& graph, std::uint64_t cap = kDefaultAutCap,
                             const std::vector<Perm>& seeds = {});

// A color-preserving vertex bijection from g1 to g2, or nullopt.
// Requires equal vertex counts.
std::optional<Perm> are_isomorphic(const ColoredDigraph& g1, const ColoredDigraph& g2);

// All subgroups of a that act regularly and are abstractly isomorphic
// to g. Requires a to be enumerated and deg(a) = |g|. Results carry
// their full element lists and are deduplicated and sorted.
std::vector<PermGroup> regular_subgroups_isomorphic_to(const PermGroup& a, const FiniteGroup& g);

// First element alpha of a (in element order) with h1^alpha = h2, or
// nullopt. h1 and h2 must be subgroups of a.
std::optional<Perm> conjugating_element(const PermGroup& a, const PermGroup& h1,
                                        const PermGroup& h2);

}  // namespace cayleyci
