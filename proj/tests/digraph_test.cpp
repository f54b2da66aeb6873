#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "cayleyci/digraph.hpp"
#include "cayleyci/finite_group.hpp"
#include "cayleyci/perm_group.hpp"

using cayleyci::BlockSystem;
using cayleyci::ColoredDigraph;
using cayleyci::FiniteGroup;
using cayleyci::GroupSpec;
using cayleyci::Perm;
using cayleyci::PermGroup;
using cayleyci::SimVerdict;

namespace {

FiniteGroup make(const char* spec) { return build_group(GroupSpec::parse(spec)); }

std::vector<int> conn_of(const FiniteGroup& g, const std::vector<const char*>& names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(g.index_of(n));
  return out;
}

// the five Z5-coset vertices of one Q8 coordinate in Q8xZ5
std::vector<int> coset(int q) { return {q * 5, q * 5 + 1, q * 5 + 2, q * 5 + 3, q * 5 + 4}; }

ColoredDigraph random_digraph(std::mt19937_64& rng, int n, double density = 0.4) {
  ColoredDigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && (rng() % 100) < 100 * density) g.set_color(u, v, 1);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("cayley construction") {
  FiniteGroup q8 = make("Q8");
  ColoredDigraph empty = cayley(q8, {});
  CHECK(empty.n() == 8);
  CHECK(empty.edge_count() == 0);

  FiniteGroup z5 = make("Z5");
  ColoredDigraph cycle = cayley(z5, {1});
  CHECK(cycle.edge_count() == 5);
  // a -> b iff a - b = 1 (mod 5)
  std::set<std::pair<int, int>> want = {{0, 4}, {1, 0}, {2, 1}, {3, 2}, {4, 3}};
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) {
      CHECK(cycle.color(u, v) == (want.count({u, v}) ? 1 : 0));
    }
  }

  ColoredDigraph six = cayley(q8, conn_of(q8, {"i", "-i", "j", "-j", "k", "-k"}));
  CHECK(six.edge_count() == 48);
  CHECK(six.symmetric());
  for (int u = 0; u < 8; ++u) {
    int out_degree = 0;
    for (int v = 0; v < 8; ++v) out_degree += six.color(u, v) != 0;
    CHECK(out_degree == 6);
  }

  CHECK_THROWS_AS(cayley(q8, {q8.identity}), std::invalid_argument);
  CHECK_THROWS_AS(cayley(q8, {42}), std::invalid_argument);
}

TEST_CASE("undirected means inverse-closed") {
  FiniteGroup q8 = make("Q8");
  FiniteGroup z5 = make("Z5");
  CHECK(is_undirected(q8, conn_of(q8, {"i", "-i"})));
  CHECK(!is_undirected(z5, {1}));
  CHECK(is_undirected(z5, {}));
  CHECK(is_undirected(q8, conn_of(q8, {"-1"})));
  CHECK(!is_undirected(q8, conn_of(q8, {"i", "j"})));

  CHECK(cayley(q8, conn_of(q8, {"i", "-i"})).symmetric());
  CHECK(!cayley(z5, {1}).symmetric());
}

TEST_CASE("color preservation and the regular representation") {
  FiniteGroup q40 = make("Q8xZ5");
  std::vector<int> conn = conn_of(q40, {"i@1", "j@3"});
  ColoredDigraph graph = cayley(q40, conn);

  PermGroup ghat = regular_rep_in_aut(q40, conn);
  CHECK(ghat.order() == 40);
  CHECK(ghat.same_group(right_regular_rep(q40)));
  for (const Perm& t : ghat.elements()) CHECK(preserves_colors(graph, t));

  // some left translation must break a connection set that is not
  // closed under conjugation
  bool found_breaker = false;
  PermGroup lrep = left_regular_rep(q40);
  for (const Perm& l : lrep.elements()) {
    if (!preserves_colors(graph, l)) {
      found_breaker = true;
      break;
    }
  }
  CHECK(found_breaker);

  PermGroup empty_rep = regular_rep_in_aut(q40, {});
  CHECK(empty_rep.order() == 40);
}

TEST_CASE("relation_sim on the matched and banded graphs") {
  FiniteGroup q40 = make("Q8xZ5");

  // S = {i@0, -i@0}: blocks joined by perfect matchings or nothing
  ColoredDigraph matched = cayley(q40, conn_of(q40, {"i@0", "-i@0"}));
  CHECK(relation_sim(matched, coset(0), coset(2)) == SimVerdict::NotSim);
  CHECK(relation_sim(matched, coset(2), coset(0)) == SimVerdict::NotSim);
  CHECK(relation_sim(matched, coset(0), coset(4)) == SimVerdict::Empty);
  CHECK(relation_sim(matched, coset(0), coset(1)) == SimVerdict::Empty);

  // S = {i@t : all t}: complete one-directional bundles
  ColoredDigraph banded = cayley(q40, conn_of(q40, {"i@0", "i@1", "i@2", "i@3", "i@4"}));
  CHECK(relation_sim(banded, coset(2), coset(0)) == SimVerdict::OnlyForward);
  CHECK(relation_sim(banded, coset(0), coset(2)) == SimVerdict::OnlyBackward);
  CHECK(relation_sim(banded, coset(0), coset(4)) == SimVerdict::Empty);

  ColoredDigraph empty(10);
  CHECK(relation_sim(empty, {0, 1}, {2, 3}) == SimVerdict::Empty);

  CHECK_THROWS_AS(relation_sim(matched, {}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(relation_sim(matched, {0, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(relation_sim(matched, {0, 0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(relation_sim(matched, {0}, {99}), std::invalid_argument);
}

TEST_CASE("relation_sim degenerate singletons never report NotSim") {
  std::mt19937_64 rng(41);
  ColoredDigraph g = random_digraph(rng, 7);
  for (int u = 0; u < 7; ++u) {
    for (int v = 0; v < 7; ++v) {
      if (u == v) continue;
      SimVerdict verdict = relation_sim(g, {u}, {v});
      CHECK(verdict != SimVerdict::NotSim);
      bool fwd = g.color(u, v) != 0;
      bool bwd = g.color(v, u) != 0;
      SimVerdict want = fwd ? (bwd ? SimVerdict::Undirected : SimVerdict::OnlyForward)
                            : (bwd ? SimVerdict::OnlyBackward : SimVerdict::Empty);
      CHECK(verdict == want);
    }
  }
}

TEST_CASE("relation_sim is symmetric up to orientation swap") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 6 + static_cast<int>(rng() % 4);
    ColoredDigraph g = random_digraph(rng, n, 0.3 + (trial % 5) * 0.15);
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) {
      int pick = static_cast<int>(rng() % 3);
      if (pick == 0 && a.size() < 3) a.push_back(v);
      if (pick == 1 && b.size() < 3) b.push_back(v);
    }
    if (a.empty() || b.empty()) continue;
    SimVerdict ab = relation_sim(g, a, b);
    SimVerdict ba = relation_sim(g, b, a);
    switch (ab) {
      case SimVerdict::OnlyForward:
        CHECK(ba == SimVerdict::OnlyBackward);
        break;
      case SimVerdict::OnlyBackward:
        CHECK(ba == SimVerdict::OnlyForward);
        break;
      default:
        CHECK(ba == ab);
    }
  }
}

TEST_CASE("gamma0 and equivalence classes") {
  FiniteGroup q40 = make("Q8xZ5");
  PermGroup rep = right_regular_rep(q40);
  BlockSystem blocks = minimal_block_system(rep, 0, 1);
  REQUIRE(blocks.block_count() == 8);

  ColoredDigraph matched = cayley(q40, conn_of(q40, {"i@0", "-i@0"}));
  ColoredDigraph g0 = gamma0(matched, blocks);
  CHECK(g0.n() == 8);
  CHECK(g0.symmetric());
  CHECK(g0.edge_count() == 16);  // two undirected 4-cycles
  CHECK(g0.color(0, 2) == 1);    // the 1-block meets the i-block
  CHECK(g0.color(0, 4) == 0);

  auto classes = equivalence_classes(g0);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(classes[1] == std::vector<int>{4, 5, 6, 7});

  // gamma0 is invariant under the induced quotient action
  PermGroup quotient = induced_action(rep, blocks);
  for (const Perm& q : quotient.generators()) CHECK(preserves_colors(g0, q));

  ColoredDigraph empty_graph = cayley(q40, {});
  ColoredDigraph empty_g0 = gamma0(empty_graph, blocks);
  CHECK(empty_g0.edge_count() == 0);
  auto singleton_classes = equivalence_classes(empty_g0);
  CHECK(singleton_classes.size() == 8);

  ColoredDigraph directed(3);
  directed.set_color(0, 1, 1);
  CHECK_THROWS_AS(equivalence_classes(directed), std::invalid_argument);
  CHECK_THROWS_AS(gamma0(matched, BlockSystem::from_block_of({0, 1})), std::invalid_argument);
}

TEST_CASE("gamma1 block-pair colors") {
  FiniteGroup q40 = make("Q8xZ5");
  PermGroup rep = right_regular_rep(q40);
  BlockSystem blocks = minimal_block_system(rep, 0, 1);

  // full symmetry: every ordered pair looks alike
  ColoredDigraph empty_graph = cayley(q40, {});
  ColoredDigraph g1_empty = gamma1(empty_graph, blocks);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      CHECK(g1_empty.color(a, b) == (a == b ? 0 : 1));
    }
  }

  // pair colors are constant on orbits of the induced group action
  ColoredDigraph graph = cayley(q40, conn_of(q40, {"i@1"}));
  ColoredDigraph g1 = gamma1(graph, blocks);
  CHECK(g1.colors_contiguous());
  PermGroup quotient = with_elements(induced_action(rep, blocks));
  for (const Perm& q : quotient.elements()) {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        if (a == b) continue;
        CHECK(g1.color(a, b) == g1.color(q[a], q[b]));
      }
    }
  }
}

TEST_CASE("graph JSON round trips") {
  std::mt19937_64 rng(47);
  ColoredDigraph g = random_digraph(rng, 6);
  g.set_color(2, 2, 1);  // a vertex color survives the matrix form
  ColoredDigraph back = cayleyci::graph_from_json(cayleyci::graph_to_json(g));
  CHECK(back == g);

  ColoredDigraph plain = random_digraph(rng, 9);
  ColoredDigraph back2 = cayleyci::graph_from_json(cayleyci::graph_to_edge_json(plain));
  CHECK(back2 == plain);

  ColoredDigraph colored(3);
  colored.set_color(0, 1, 1);
  colored.set_color(1, 2, 2);
  CHECK_THROWS_AS(cayleyci::graph_to_edge_json(colored), std::invalid_argument);
  CHECK(cayleyci::graph_from_json(cayleyci::graph_to_json(colored)) == colored);
}

TEST_CASE("graph JSON rejects malformed input") {
  using cayleyci::graph_from_json;
  CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 0, "edges": []})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "colors": [[0, 1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "colors": [[0, 1], [1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "colors": [[0, "x"], [1, 0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "colors": [[0, 2], [2, 0]]})"),
                  std::invalid_argument);  // colors must be contiguous
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "edges": [[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "edges": [[0, 5]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "edges": [[1, 1]]})"), std::invalid_argument);

  ColoredDigraph ok = graph_from_json(R"({"n": 3, "edges": [[0, 1], [2, 0]]})");
  CHECK(ok.n() == 3);
  CHECK(ok.color(0, 1) == 1);
  CHECK(ok.color(2, 0) == 1);
  CHECK(ok.edge_count() == 2);
}
