#pragma once

#include <string>
#include <vector>

#include "cayleyci/finite_group.hpp"
#include "cayleyci/perm.hpp"
#include "cayleyci/perm_group.hpp"

namespace cayleyci {

// Dense colored digraph on n vertices. The color matrix is total: entry
// (u,v) holds the color of the ordered pair, and entry (v,v) holds the
// vertex color. For plain digraphs off-diagonal colors are 0 (no edge)
// and 1 (edge). Diagonal colors are a separate alphabet and are never
// compared against off-diagonal ones by any algorithm here.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;
  explicit ColoredDigraph(int n) : n_(n), color_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  int color(int u, int v) const { return color_[static_cast<std::size_t>(u) * n_ + v]; }
  void set_color(int u, int v, int c) { color_[static_cast<std::size_t>(u) * n_ + v] = c; }

  int max_color() const;
  // True when the full matrix (vertex colors included) is symmetric.
  bool symmetric() const;
  // Colors used anywhere in the matrix form the contiguous range 0..max.
  bool colors_contiguous() const;
  // Number of off-diagonal entries with a nonzero color.
  int edge_count() const;

  bool operator==(const ColoredDigraph&) const = default;

 private:
  int n_ = 0;
  std::vector<int> color_;
};

// Cayley digraph of g with connection set conn (element indices):
// edge a -> b iff a * b^-1 is in conn. Rejects the identity in conn.
ColoredDigraph cayley(const FiniteGroup& g, const std::vector<int>& conn);

// True iff conn is closed under inversion, i.e. the Cayley graph is
// undirected.
bool is_undirected(const FiniteGroup& g, const std::vector<int>& conn);

// True iff relabeling vertices by p maps the color matrix to itself.
bool preserves_colors(const ColoredDigraph& graph, const Perm& p);

// Confirms that all |g| right translations preserve the color matrix of
// cayley(g, conn) and returns them as a group. A failure is an internal
// bug and throws logic_error.
PermGroup regular_rep_in_aut(const FiniteGroup& g, const std::vector<int>& conn);

// The four uniform edge patterns between disjoint vertex sets, plus the
// non-uniform catch-all. OnlyForward means every A->B pair carries one
// common nonzero color and no B->A edge exists; Undirected means both
// directions are complete, each with one common color. For singleton
// sets NotSim cannot occur in a plain digraph.
enum class SimVerdict { OnlyForward, OnlyBackward, Undirected, Empty, NotSim };

std::string to_string(SimVerdict v);

SimVerdict relation_sim(const ColoredDigraph& graph, const std::vector<int>& a,
                        const std::vector<int>& b);

// Quotient graph on the blocks: undirected, with an edge between two
// blocks exactly when their sim verdict is NotSim.
ColoredDigraph gamma0(const ColoredDigraph& graph, const BlockSystem& blocks);

// Complete colored digraph on the blocks: two ordered block pairs share
// an off-diagonal color exactly when their induced two-block subgraphs
// (with block membership marked via vertex colors, so first maps to
// first) are isomorphic. Colors are 1,2,... in first-seen order over
// ordered pairs scanned lexicographically; the diagonal is color 0.
ColoredDigraph gamma1(const ColoredDigraph& graph, const BlockSystem& blocks);

// Connected components of an undirected quotient graph, i.e. the
// equivalence classes of the reachability relation. Cells are sorted
// and ordered by smallest member.
std::vector<std::vector<int>> equivalence_classes(const ColoredDigraph& g0);

// JSON forms. The matrix form is {"n": int, "colors": [[int]]}; the
// edge-list form {"n": int, "edges": [[u,v]]} (0-based) is accepted on
// input and produced for plain {0,1}-colored digraphs only.
std::string graph_to_json(const ColoredDigraph& g);
std::string graph_to_edge_json(const ColoredDigraph& g);
ColoredDigraph graph_from_json(const std::string& text);

}  // namespace cayleyci
