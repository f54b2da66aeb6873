#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayleyci/perm_group.hpp"

namespace cayleyci {

// Finite group as an explicit multiplication table with named elements.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::uint16_t> mul;  // order*order, row-major: mul[a*order+b] = a*b
  int identity = 0;
  std::vector<int> inverse;

  int order() const { return static_cast<int>(names.size()); }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * names.size() + b]; }
  int inv(int a) const { return inverse[a]; }
  int index_of(std::string_view token) const;  // throws on unknown token
  std::uint64_t element_order(int a) const;
  // Map order -> how many elements have it, as sorted pairs.
  std::vector<std::pair<std::uint64_t, int>> order_profile() const;
};

// Group description grammar: "Q8", "E8" (elementary abelian of order 8),
// "Z<n>", and 'x'-joined direct products such as "Q8xZ5".
struct GroupSpec {
  enum class Kind { q8, e8, cyclic, product };
  Kind kind = Kind::cyclic;
  int n = 1;                      // for cyclic
  std::vector<GroupSpec> factors;  // for product

  static GroupSpec parse(std::string_view text);
  std::string str() const;
  std::uint64_t order() const;
};

// Builds the multiplication table. Q8 element order is 1, -1, i, -i, j,
// -j, k, -k with ij = k; E8 elements are bit strings 000..111; Z<n>
// elements are 0..n-1; product elements are joined with '@'
// (e.g. "i@2"). Total order is limited to 10000. Identity, inverses and
// the Latin square property are always validated; associativity is
// checked for orders up to 64.
FiniteGroup build_group(const GroupSpec& spec);

// x -> x*g for each g; a regular subgroup of Sym(|G|) isomorphic to G.
PermGroup right_regular_rep(const FiniteGroup& g);
// x -> g*x for each g.
PermGroup left_regular_rep(const FiniteGroup& g);

// Short generating sequence found greedily: each step adjoins the
// element that grows the generated subgroup the most (lowest index on
// ties). Empty for the trivial group.
std::vector<int> greedy_generators(const FiniteGroup& g);

// All table automorphisms as index bijections, sorted. Order <= 64.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);

// Bijection phi with phi[a*b] = phi[a] * phi[b] from G onto the
// elements of h, or nullopt. h must be enumerated with |h| = |G|.
std::optional<std::vector<Perm>> abstract_isomorphic(const PermGroup& h, const FiniteGroup& g);

// Image of the subset s under the automorphism mu; validates mu.
std::vector<int> apply_automorphism(const FiniteGroup& g, const std::vector<int>& mu,
                                    const std::vector<int>& s);

}  // namespace cayleyci
