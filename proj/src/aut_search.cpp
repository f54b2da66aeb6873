#include "cayleyci/aut_search.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace cayleyci {

namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t hash_step(std::uint64_t h, std::uint64_t x) {
  return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Vertices grouped by vertex color, cells ordered by color value. The
// cert accumulates (color, size) so mismatched vertex-color histograms
// are caught immediately.
Cells initial_cells(const ColoredDigraph& g, std::uint64_t& cert) {
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < g.n(); ++v) by_color[g.color(v, v)].push_back(v);
  Cells cells;
  cells.reserve(by_color.size());
  for (auto& [c, members] : by_color) {
    cert = hash_step(cert, static_cast<std::uint64_t>(c));
    cert = hash_step(cert, members.size());
    cells.push_back(std::move(members));
  }
  return cells;
}

// Sorted out/in color lists of v against every cell: the splitting key
// of one refinement round (1-dimensional Weisfeiler-Leman).
std::vector<int> signature(const ColoredDigraph& g, int v, const Cells& cells) {
  std::vector<int> sig;
  sig.reserve(2 * g.n() + cells.size());
  std::vector<int> buf;
  for (const auto& cell : cells) {
    for (int dir = 0; dir < 2; ++dir) {
      buf.clear();
      for (int u : cell) buf.push_back(dir == 0 ? g.color(v, u) : g.color(u, v));
      std::sort(buf.begin(), buf.end());
      sig.insert(sig.end(), buf.begin(), buf.end());
      sig.push_back(-1);
    }
  }
  return sig;
}

// Refines to a fixpoint. Subcells are ordered by signature value, so
// the procedure is label-invariant: relabeling the graph permutes the
// result cell-for-cell and leaves cert unchanged. cert accumulates the
// full split trace, making equal certs a necessary condition for two
// branches to be related by an automorphism.
void refine(const ColoredDigraph& g, Cells& cells, std::uint64_t& cert) {
  bool changed = true;
  while (changed) {
    changed = false;
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) groups[signature(g, v, cells)].push_back(v);
      if (groups.size() > 1) changed = true;
      for (auto& [sig, members] : groups) {
        for (int s : sig) cert = hash_step(cert, static_cast<std::uint64_t>(s + 2));
        cert = hash_step(cert, members.size());
        next.push_back(std::move(members));
      }
    }
    cells = std::move(next);
  }
  for (const auto& cell : cells) cert = hash_step(cert, cell.size());
}

int pick_target(const Cells& cells) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (cells[i].size() < 2) continue;
    if (best < 0 || cells[i].size() < cells[best].size()) best = i;
  }
  return best;
}

Cells individualize(const Cells& cells, int cell_idx, int v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (i != cell_idx) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<int> rest;
    rest.reserve(cells[i].size() - 1);
    for (int u : cells[i]) {
      if (u != v) rest.push_back(u);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

// The fixed search tree over g1: at each level the first vertex of the
// smallest non-singleton cell is individualized. Any automorphism (or
// isomorphism into g2) must follow a branch whose refinement certsic
// match this path level by level.
struct BasePath {
  const ColoredDigraph* g1 = nullptr;
  std::vector<Cells> cells;                // per level; last one is discrete
  std::vector<int> target;                 // target cell index per level
  std::vector<int> vertex;                 // individualized base vertex per level
  std::vector<std::uint64_t> cert;         // refinement cert leading into each level
};

BasePath build_base(const ColoredDigraph& g) {
  BasePath base;
  base.g1 = &g;
  std::uint64_t cert = 0;
  Cells cells = initial_cells(g, cert);
  refine(g, cells, cert);
  base.cells.push_back(cells);
  base.cert.push_back(cert);
  while (true) {
    int t = pick_target(cells);
    if (t < 0) break;
    int v0 = cells[t][0];
    base.target.push_back(t);
    base.vertex.push_back(v0);
    std::uint64_t c = hash_step(0, static_cast<std::uint64_t>(t));
    cells = individualize(cells, t, v0);
    refine(g, cells, c);
    base.cells.push_back(cells);
    base.cert.push_back(c);
  }
  return base;
}

// First color-preserving bijection from g1 onto g2 whose branch matches
// the base path from the given depth on, or nullopt. cells is the
// candidate partition of g2 at that depth (cert already matched).
std::optional<Perm> dfs_match(const BasePath& base, const ColoredDigraph& g2, const Cells& cells,
                              std::size_t depth) {
  const ColoredDigraph& g1 = *base.g1;
  if (depth == base.target.size()) {
    int n = g1.n();
    std::vector<int> img(n);
    const Cells& leaf = base.cells[depth];
    for (std::size_t p = 0; p < leaf.size(); ++p) img[leaf[p][0]] = cells[p][0];
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (g2.color(img[u], img[v]) != g1.color(u, v)) return std::nullopt;
      }
    }
    return Perm(std::move(img));
  }
  int t = base.target[depth];
  for (int v : cells[t]) {
    std::uint64_t cert = hash_step(0, static_cast<std::uint64_t>(t));
    Cells child = individualize(cells, t, v);
    refine(g2, child, cert);
    if (cert != base.cert[depth + 1]) continue;
    if (auto found = dfs_match(base, g2, child, depth + 1)) return found;
  }
  return std::nullopt;
}

}  // namespace

AutResult automorphism_group(const ColoredDigraph& graph, std::uint64_t cap,
                             const std::vector<Perm>& seeds) {
  int n = graph.n();
  if (n < 1 || n > 64) throw std::invalid_argument("automorphism search supports 1 to 64 vertices");
  for (const Perm& s : seeds) {
    if (!preserves_colors(graph, s)) throw std::invalid_argument("seed is not an automorphism");
  }

  BasePath base = build_base(graph);
  std::size_t depth = base.target.size();
  std::vector<Perm> known = seeds;

  // Orbit of point under the known automorphisms that fix the first
  // `level` base vertices pointwise.
  auto orbit_of = [&](int point, std::size_t level) {
    std::vector<const Perm*> use;
    for (const Perm& p : known) {
      bool fixes = true;
      for (std::size_t i = 0; i < level && fixes; ++i) fixes = p[base.vertex[i]] == base.vertex[i];
      if (fixes) use.push_back(&p);
    }
    std::vector<char> in(n, 0);
    std::vector<int> queue{point};
    in[point] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (const Perm* p : use) {
        int y = (*p)[queue[qi]];
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return in;
  };

  // Levels are processed bottom-up so that stabilizer generators are
  // already known when shallower orbits are pruned. At each level every
  // cell vertex outside the current orbit of the base vertex is tried;
  // one automorphism per new orbit point is enough to generate.
  for (std::size_t k = depth; k-- > 0;) {
    const Cells& cells = base.cells[k];
    int t = base.target[k];
    int b = base.vertex[k];
    auto in_orb = orbit_of(b, k);
    for (int v : cells[t]) {
      if (v == b || in_orb[v]) continue;
      std::uint64_t cert = hash_step(0, static_cast<std::uint64_t>(t));
      Cells child = individualize(cells, t, v);
      refine(graph, child, cert);
      if (cert != base.cert[k + 1]) continue;
      if (auto found = dfs_match(base, graph, child, k + 1)) {
        known.push_back(*found);
        in_orb = orbit_of(b, k);
      }
    }
  }

  // |Aut| as the product of base-orbit sizes down the stabilizer chain.
  std::uint64_t order = 1;
  bool overflow = false;
  for (std::size_t k = 0; k < depth; ++k) {
    auto in_orb = orbit_of(base.vertex[k], k);
    std::uint64_t cnt = static_cast<std::uint64_t>(std::count(in_orb.begin(), in_orb.end(), 1));
    if (order > std::numeric_limits<std::uint64_t>::max() / cnt) {
      overflow = true;
      break;
    }
    order *= cnt;
  }

  AutResult res;
  std::set<Perm> seen;
  for (const Perm& p : known) {
    if (!p.is_identity() && seen.insert(p).second) res.generators.push_back(p);
  }
  if (overflow || order > cap) {
    res.order = overflow ? 0 : order;
    res.capped = true;
    return res;
  }
  PermGroup closed = PermGroup::closure(n, res.generators, order);
  if (closed.cap_exceeded() || closed.order() != order) {
    throw std::logic_error("automorphism search order does not match enumeration");
  }
  res.order = order;
  res.capped = false;
  return res;
}

std::optional<Perm> are_isomorphic(const ColoredDigraph& g1, const ColoredDigraph& g2) {
  if (g1.n() != g2.n()) throw std::invalid_argument("graphs have different vertex counts");
  int n = g1.n();
  std::vector<int> c1, c2;
  c1.reserve(static_cast<std::size_t>(n) * n);
  c2.reserve(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      c1.push_back(g1.color(u, v));
      c2.push_back(g2.color(u, v));
    }
  }
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  if (c1 != c2) return std::nullopt;

  BasePath base = build_base(g1);
  std::uint64_t cert = 0;
  Cells cells = initial_cells(g2, cert);
  refine(g2, cells, cert);
  if (cert != base.cert[0]) return std::nullopt;
  return dfs_match(base, g2, cells, 0);
}

namespace {

bool profile_is(const std::vector<std::pair<std::uint64_t, int>>& profile,
                std::initializer_list<std::pair<std::uint64_t, int>> want) {
  return std::equal(profile.begin(), profile.end(), want.begin(), want.end());
}

}  // namespace

std::vector<PermGroup> regular_subgroups_isomorphic_to(const PermGroup& a, const FiniteGroup& g) {
  int n = g.order();
  if (a.degree() != n) throw std::invalid_argument("degree of the ambient group must equal |g|");
  const std::vector<Perm>& elems = a.elements();

  std::set<std::vector<Perm>> found;
  auto consider = [&](const std::vector<Perm>& gens) {
    PermGroup h = PermGroup::closure(n, gens, static_cast<std::uint64_t>(n));
    if (h.cap_exceeded() || h.order() != static_cast<std::uint64_t>(n)) return;
    if (!is_regular(h)) return;
    if (!abstract_isomorphic(h, g)) return;
    found.insert(h.elements());
  };

  auto profile = g.order_profile();
  if (n == 8 && profile_is(profile, {{1, 1}, {2, 1}, {4, 6}})) {
    // Quaternion shape: ordered pairs (x, y) of semiregular order-4
    // elements with y outside <x>, x^2 = y^2 and y^-1 x y = x^-1.
    std::vector<int> quads;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
      if (elems[i].order() == 4 && elems[i].is_semiregular()) quads.push_back(i);
    }
    for (int xi : quads) {
      const Perm& x = elems[xi];
      Perm x2 = x * x;
      Perm x3 = x2 * x;
      Perm xinv = x.inverse();
      for (int yi : quads) {
        const Perm& y = elems[yi];
        if (y == x || y == x3) continue;
        if (!(y * y == x2)) continue;
        if (!(conjugate(x, y) == xinv)) continue;
        consider({x, y});
      }
    }
  } else if (n == 8 && profile_is(profile, {{1, 1}, {2, 7}})) {
    // Elementary abelian shape: commuting triples of semiregular
    // involutions with the third outside the first two's span.
    std::vector<int> invs;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
      if (elems[i].order() == 2 && elems[i].is_semiregular()) invs.push_back(i);
    }
    for (std::size_t i = 0; i < invs.size(); ++i) {
      const Perm& x = elems[invs[i]];
      for (std::size_t j = i + 1; j < invs.size(); ++j) {
        const Perm& y = elems[invs[j]];
        if (!(x * y == y * x)) continue;
        Perm xy = x * y;
        for (std::size_t k = j + 1; k < invs.size(); ++k) {
          const Perm& z = elems[invs[k]];
          if (z == xy) continue;
          if (!(x * z == z * x) || !(y * z == z * y)) continue;
          consider({x, y, z});
        }
      }
    }
  } else {
    // Generic shape: map a small generating tuple of g to semiregular
    // candidates of matching order, pruning by partial closure size.
    std::vector<int> gidx = greedy_generators(g);
    std::vector<std::vector<int>> cand(gidx.size());
    for (std::size_t s = 0; s < gidx.size(); ++s) {
      std::uint64_t want = g.element_order(gidx[s]);
      for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
        if (elems[i].order() == want && elems[i].is_semiregular()) cand[s].push_back(i);
      }
    }
    long budget = 100'000;
    std::vector<Perm> tuple;
    auto rec = [&](auto&& self, std::size_t slot) -> void {
      for (int ci : cand[slot]) {
        if (--budget < 0) throw CapExceededError("regular subgroup search exceeded its work budget");
        tuple.push_back(elems[ci]);
        PermGroup part = PermGroup::closure(n, tuple, static_cast<std::uint64_t>(n));
        if (!part.cap_exceeded() && n % part.order() == 0) {
          if (slot + 1 == gidx.size()) {
            if (part.order() == static_cast<std::uint64_t>(n)) consider(tuple);
          } else {
            self(self, slot + 1);
          }
        }
        tuple.pop_back();
      }
    };
    if (!gidx.empty()) rec(rec, 0);
  }

  // Present each subgroup through a short generating set: repeatedly
  // adjoin the element that grows the generated subgroup the most.
  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (const auto& set : found) {
    std::vector<Perm> gens;
    std::uint64_t have = 1;
    while (have < set.size()) {
      std::uint64_t best = have;
      const Perm* pick = nullptr;
      for (const Perm& p : set) {
        std::vector<Perm> trial = gens;
        trial.push_back(p);
        std::uint64_t grown = PermGroup::closure(n, trial, set.size()).order();
        if (grown > best) {
          best = grown;
          pick = &p;
        }
      }
      gens.push_back(*pick);
      have = best;
    }
    PermGroup sub = PermGroup::closure(n, gens, set.size());
    if (sub.elements() != set) throw std::logic_error("generator reduction changed the subgroup");
    out.push_back(std::move(sub));
  }
  return out;
}

std::optional<Perm> conjugating_element(const PermGroup& a, const PermGroup& h1,
                                        const PermGroup& h2) {
  PermGroup h1e = with_elements(h1);
  PermGroup h2e = with_elements(h2);
  for (const Perm& x : h1e.elements()) {
    if (!a.contains(x)) throw std::invalid_argument("h1 is not a subgroup of a");
  }
  for (const Perm& x : h2e.elements()) {
    if (!a.contains(x)) throw std::invalid_argument("h2 is not a subgroup of a");
  }
  if (h1e.order() != h2e.order()) return std::nullopt;
  const std::vector<Perm>& h2elems = h2e.elements();
  for (const Perm& alpha : a.elements()) {
    bool ok = true;
    for (const Perm& gen : h1e.generators()) {
      if (!std::binary_search(h2elems.begin(), h2elems.end(), conjugate(gen, alpha))) {
        ok = false;
        break;
      }
    }
    if (ok) return alpha;
  }
  return std::nullopt;
}

ColoredDigraph gamma1(const ColoredDigraph& graph, const BlockSystem& blocks) {
  if (blocks.degree() != graph.n()) throw std::invalid_argument("block system does not match graph");
  int m = blocks.block_count();
  for (const auto& cell : blocks.blocks) {
    if (cell.size() != blocks.blocks[0].size()) {
      throw std::invalid_argument("gamma1 needs blocks of equal size");
    }
  }
  int marker = 0;
  for (int v = 0; v < graph.n(); ++v) marker = std::max(marker, graph.color(v, v) + 1);

  // Induced subgraph on an ordered block pair, with vertex colors
  // shifted on the second block so isomorphisms must respect both the
  // partition and the order of the pair.
  auto gadget = [&](int i, int j) {
    std::vector<int> verts = blocks.blocks[i];
    verts.insert(verts.end(), blocks.blocks[j].begin(), blocks.blocks[j].end());
    std::size_t split = blocks.blocks[i].size();
    ColoredDigraph h(static_cast<int>(verts.size()));
    for (std::size_t p = 0; p < verts.size(); ++p) {
      for (std::size_t q = 0; q < verts.size(); ++q) {
        h.set_color(static_cast<int>(p), static_cast<int>(q), graph.color(verts[p], verts[q]));
      }
    }
    for (std::size_t p = split; p < verts.size(); ++p) {
      h.set_color(static_cast<int>(p), static_cast<int>(p),
                  marker + graph.color(verts[p], verts[p]));
    }
    return h;
  };

  ColoredDigraph out(m);
  std::vector<ColoredDigraph> reps;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      ColoredDigraph hij = gadget(i, j);
      int color = 0;
      for (std::size_t r = 0; r < reps.size(); ++r) {
        if (are_isomorphic(reps[r], hij)) {
          color = static_cast<int>(r) + 1;
          break;
        }
      }
      if (color == 0) {
        reps.push_back(hij);
        color = static_cast<int>(reps.size());
      }
      out.set_color(i, j, color);
    }
  }
  return out;
}

}  // namespace cayleyci
