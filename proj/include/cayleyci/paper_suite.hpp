#pragma once

// Machine checks for the worked small cases behind the CI machinery: the
// depth-3 binary tree on 8 leaves, the two regular representations of the
// quaternion group, the pair of elementary abelian complements, and the
// block-lifting facts used to extend both to products with a prime
// cyclic factor.

#include <string>
#include <vector>

#include "cayleyci/closure_ci.hpp"
#include "cayleyci/digraph.hpp"
#include "cayleyci/finite_group.hpp"
#include "cayleyci/perm_group.hpp"

namespace cayleyci {

struct LemmaCheck {
  std::string id;
  std::string description;
  bool passed = false;
  std::string details_json;  // one JSON object with the measured values
};

// The tree on 15 vertices whose automorphisms, restricted to the 8
// leaves, realize a Sylow 2-subgroup of Sym(8). Vertices 0..7 are the
// leaves; 8..11 their parents in adjacent pairs, 12..13 the next level,
// 14 the root. All edges carry color 1, both directions.
ColoredDigraph build_delta();

// Restricts a vertex-transitive-free tree automorphism group to the 8
// leaves. Throws std::logic_error if some generator moves a leaf to an
// internal vertex or the restriction loses information.
PermGroup leaf_action(const AutResult& aut);

// The two regular representations of the quaternion group on the 8
// points 1,-1,i,-i,j,-j,k,-k (0-indexed in that order), their standard
// generator pairs, and the two complementary elementary abelian groups.
struct RegularSubgroupTables {
  std::vector<Perm> q_left;   // left translations, 8 permutations
  std::vector<Perm> q_right;  // right translations, 8 permutations
  Perm i1, j1;                // generate the left copy
  Perm i2, j2;                // generate the right copy
  std::vector<Perm> a1_gens;  // three commuting involutions
  std::vector<Perm> a2_gens;  // conjugate copy of the same shape
};
RegularSubgroupTables standard_tables();

// Individual checks. Each returns a LemmaCheck with every measured value
// recorded in details_json; passed is true only if every assertion in
// the check holds.
LemmaCheck check_delta_basics();           // id "delta"
LemmaCheck check_lemma_counts();           // id "lemma4"
LemmaCheck check_generator_tables(const RegularSubgroupTables& tables);  // id "lemma5"
LemmaCheck check_lemma_g1_equals_g2();     // id "lemma6"
LemmaCheck check_dci2();                   // id "prop1"
// Looks for a color-preserving permutation inducing each of the three
// standard quotient involutions on a block system of the given Cayley
// graph. id "obs2:<suffix>".
LemmaCheck check_involution_instances(const FiniteGroup& g, const std::vector<int>& conn,
                                      const std::string& suffix);
LemmaCheck check_lifting();                // id "lemma7"
LemmaCheck check_two_closure_properties(); // id "two_closure_props"

// Runs every check in a fixed order and returns the results.
std::vector<LemmaCheck> run_all();

// A JSON array of {"id","description","passed","details"} objects.
std::string report_json(const std::vector<LemmaCheck>& checks);

// One line per check: "PASS lemma4  <description>".
std::string report_text(const std::vector<LemmaCheck>& checks);

}  // namespace cayleyci
