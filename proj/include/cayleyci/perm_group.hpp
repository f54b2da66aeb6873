#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cayleyci/perm.hpp"

namespace cayleyci {

// Thrown when an enumeration would exceed its element cap. Callers that
// can degrade gracefully (scans, CI checks) catch this and report a skip.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Permutation group given by generators, with an optional enumerated
// element list. Enumeration is capped; a capped group keeps its
// generators but has no element list.
class PermGroup {
 public:
  static constexpr std::uint64_t kDefaultElementCap = 2'000'000;

  PermGroup(int degree, std::vector<Perm> generators);

  // Breadth-first closure of the generators under composition.
  static PermGroup closure(int degree, std::vector<Perm> generators,
                           std::uint64_t cap = kDefaultElementCap);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  bool has_elements() const { return enumerated_; }
  bool cap_exceeded() const { return capped_; }
  // Sorted element list; throws CapExceededError when unavailable.
  const std::vector<Perm>& elements() const;
  std::uint64_t order() const;
  bool contains(const Perm& p) const;

  // Equal element sets (both sides must be enumerated).
  bool same_group(const PermGroup& other) const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  bool enumerated_ = false;
  bool capped_ = false;
};

// Returns g enumerated (no-op when it already is).
PermGroup with_elements(const PermGroup& g,
                        std::uint64_t cap = PermGroup::kDefaultElementCap);

// Orbits of the natural action, sorted cells, sorted by smallest point.
std::vector<std::vector<int>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);
// Transitive with order equal to degree. Requires an element list.
bool is_regular(const PermGroup& g);

// Group-invariant partition into equal-size cells.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // sorted cells, sorted by minimum
  std::vector<int> block_of;             // point -> block index

  static BlockSystem from_block_of(std::vector<int> block_of);
  int block_count() const { return static_cast<int>(blocks.size()); }
  int degree() const { return static_cast<int>(block_of.size()); }
};

// The finest invariant partition putting a and b in one cell
// (Atkinson's merge-and-propagate algorithm). The group must be
// transitive. Seed a == b yields the partition into singletons.
BlockSystem minimal_block_system(const PermGroup& g, int a, int b);

// Action of the generators on the cells of an invariant partition.
// Throws std::invalid_argument when some generator does not map cells
// onto cells.
PermGroup induced_action(const PermGroup& g, const BlockSystem& blocks);

}  // namespace cayleyci
