#include "cayleyci/digraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace cayleyci {

int ColoredDigraph::max_color() const {
  int m = 0;
  for (int c : color_) m = std::max(m, c);
  return m;
}

bool ColoredDigraph::symmetric() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (color(u, v) != color(v, u)) return false;
    }
  }
  return true;
}

bool ColoredDigraph::colors_contiguous() const {
  std::vector<char> seen(static_cast<std::size_t>(max_color()) + 1, 0);
  for (int c : color_) {
    if (c < 0) return false;
    seen[c] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

int ColoredDigraph::edge_count() const {
  int count = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u != v && color(u, v) != 0) ++count;
    }
  }
  return count;
}

namespace {

std::vector<int> checked_conn(const FiniteGroup& g, const std::vector<int>& conn) {
  std::vector<int> s = conn;
  for (int x : s) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("connection set element out of range");
    if (x == g.identity) throw std::invalid_argument("identity is not allowed in a connection set");
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

ColoredDigraph cayley(const FiniteGroup& g, const std::vector<int>& conn) {
  std::vector<int> s = checked_conn(g, conn);
  int n = g.order();
  std::vector<char> in_s(n, 0);
  for (int x : s) in_s[x] = 1;
  ColoredDigraph graph(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && in_s[g.times(a, g.inv(b))]) graph.set_color(a, b, 1);
    }
  }
  return graph;
}

bool is_undirected(const FiniteGroup& g, const std::vector<int>& conn) {
  std::vector<int> s = checked_conn(g, conn);
  std::vector<char> in_s(g.order(), 0);
  for (int x : s) in_s[x] = 1;
  return std::all_of(s.begin(), s.end(), [&](int x) { return in_s[g.inv(x)] != 0; });
}

bool preserves_colors(const ColoredDigraph& graph, const Perm& p) {
  if (p.degree() != graph.n()) return false;
  for (int u = 0; u < graph.n(); ++u) {
    for (int v = 0; v < graph.n(); ++v) {
      if (graph.color(p[u], p[v]) != graph.color(u, v)) return false;
    }
  }
  return true;
}

PermGroup regular_rep_in_aut(const FiniteGroup& g, const std::vector<int>& conn) {
  ColoredDigraph graph = cayley(g, conn);
  PermGroup ghat = right_regular_rep(g);
  for (const Perm& t : ghat.elements()) {
    if (!preserves_colors(graph, t)) {
      throw std::logic_error("right translation does not preserve a Cayley graph");
    }
  }
  return ghat;
}

std::string to_string(SimVerdict v) {
  switch (v) {
    case SimVerdict::OnlyForward:
      return "OnlyForward";
    case SimVerdict::OnlyBackward:
      return "OnlyBackward";
    case SimVerdict::Undirected:
      return "Undirected";
    case SimVerdict::Empty:
      return "Empty";
    case SimVerdict::NotSim:
      return "NotSim";
  }
  return {};
}

SimVerdict relation_sim(const ColoredDigraph& graph, const std::vector<int>& a,
                        const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("relation_sim needs nonempty sets");
  std::set<int> seen;
  for (int v : a) {
    if (v < 0 || v >= graph.n()) throw std::invalid_argument("vertex out of range");
    if (!seen.insert(v).second) throw std::invalid_argument("relation_sim sets must not repeat vertices");
  }
  for (int v : b) {
    if (v < 0 || v >= graph.n()) throw std::invalid_argument("vertex out of range");
    if (!seen.insert(v).second) throw std::invalid_argument("relation_sim sets must be disjoint");
  }

  // fwd/bk hold the common color of the complete direction, 0 for the
  // empty direction, -1 for anything non-uniform.
  int fwd = graph.color(a[0], b[0]);
  int bk = graph.color(b[0], a[0]);
  for (int u : a) {
    for (int v : b) {
      if (graph.color(u, v) != fwd) fwd = -1;
      if (graph.color(v, u) != bk) bk = -1;
      if (fwd < 0 && bk < 0) return SimVerdict::NotSim;
    }
  }
  if (fwd < 0 || bk < 0) return SimVerdict::NotSim;
  if (fwd == 0 && bk == 0) return SimVerdict::Empty;
  if (fwd != 0 && bk == 0) return SimVerdict::OnlyForward;
  if (fwd == 0 && bk != 0) return SimVerdict::OnlyBackward;
  return SimVerdict::Undirected;
}

namespace {

void check_partition(const ColoredDigraph& graph, const BlockSystem& blocks) {
  if (blocks.degree() != graph.n()) throw std::invalid_argument("block system does not match graph");
}

}  // namespace

ColoredDigraph gamma0(const ColoredDigraph& graph, const BlockSystem& blocks) {
  check_partition(graph, blocks);
  int m = blocks.block_count();
  ColoredDigraph g0(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (relation_sim(graph, blocks.blocks[i], blocks.blocks[j]) == SimVerdict::NotSim) {
        g0.set_color(i, j, 1);
        g0.set_color(j, i, 1);
      }
    }
  }
  return g0;
}

std::vector<std::vector<int>> equivalence_classes(const ColoredDigraph& g0) {
  if (!g0.symmetric()) throw std::invalid_argument("equivalence_classes expects an undirected graph");
  int m = g0.n();
  std::vector<int> root(m, -1);
  std::vector<std::vector<int>> classes;
  for (int s = 0; s < m; ++s) {
    if (root[s] >= 0) continue;
    std::vector<int> comp{s};
    root[s] = s;
    for (std::size_t qi = 0; qi < comp.size(); ++qi) {
      for (int v = 0; v < m; ++v) {
        if (root[v] < 0 && comp[qi] != v && g0.color(comp[qi], v) != 0) {
          root[v] = s;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    classes.push_back(std::move(comp));
  }
  return classes;
}

std::string graph_to_json(const ColoredDigraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto& colors = j["colors"] = nlohmann::ordered_json::array();
  for (int u = 0; u < g.n(); ++u) {
    auto& row = colors.emplace_back(nlohmann::ordered_json::array());
    for (int v = 0; v < g.n(); ++v) row.push_back(g.color(u, v));
  }
  return j.dump(2) + "\n";
}

std::string graph_to_edge_json(const ColoredDigraph& g) {
  if (g.max_color() > 1) throw std::invalid_argument("edge-list form is only for plain digraphs");
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (int u = 0; u < g.n(); ++u) {
    for (int v = 0; v < g.n(); ++v) {
      if (u != v && g.color(u, v) != 0) edges.push_back({u, v});
    }
  }
  return j.dump(2) + "\n";
}

ColoredDigraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw std::invalid_argument("graph JSON needs an integer field \"n\"");
  }
  int n = j["n"].get<int>();
  if (n < 1) throw std::invalid_argument("graph JSON: n must be positive");
  ColoredDigraph g(n);
  if (j.contains("colors")) {
    const auto& colors = j["colors"];
    if (!colors.is_array() || static_cast<int>(colors.size()) != n) {
      throw std::invalid_argument("graph JSON: \"colors\" must be an n-by-n matrix");
    }
    for (int u = 0; u < n; ++u) {
      const auto& row = colors[u];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw std::invalid_argument("graph JSON: \"colors\" must be an n-by-n matrix");
      }
      for (int v = 0; v < n; ++v) {
        if (!row[v].is_number_integer()) throw std::invalid_argument("graph JSON: colors must be integers");
        g.set_color(u, v, row[v].get<int>());
      }
    }
    if (!g.colors_contiguous()) {
      throw std::invalid_argument("graph JSON: colors must form a contiguous range starting at 0");
    }
  } else if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw std::invalid_argument("graph JSON: edges must be [u,v] pairs");
      }
      int u = e[0].get<int>(), v = e[1].get<int>();
      if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("graph JSON: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("graph JSON: loops are not allowed in edge-list form");
      g.set_color(u, v, 1);
    }
  } else {
    throw std::invalid_argument("graph JSON needs \"colors\" or \"edges\"");
  }
  return g;
}

}  // namespace cayleyci
