#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "cayleyci/finite_group.hpp"
#include "cayleyci/perm_group.hpp"

using cayleyci::BlockSystem;
using cayleyci::CapExceededError;
using cayleyci::FiniteGroup;
using cayleyci::GroupSpec;
using cayleyci::Perm;
using cayleyci::PermGroup;

namespace {

Perm cyc(const char* text, int degree = 8) { return Perm::from_cycles(text, degree); }

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Perm random_perm(std::mt19937_64& rng, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (int i = degree - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
  return Perm(img);
}

// All partitions of {0..n-1} as dense block_of arrays (restricted growth).
void all_partitions(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> assign(n, 0);
  while (true) {
    out.push_back(assign);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(assign.begin(), assign.begin() + i) + 1;
      if (assign[i] < cap) {
        ++assign[i];
        std::fill(assign.begin() + i + 1, assign.end(), 0);
        break;
      }
      assign[i] = 0;
    }
    if (i == 0) break;
  }
}

bool partition_invariant(const std::vector<int>& block_of, const PermGroup& g) {
  for (const Perm& gen : g.generators()) {
    // cells must map onto cells: block_of[gen[x]] determined by block_of[x]
    std::vector<int> image(*std::max_element(block_of.begin(), block_of.end()) + 1, -1);
    for (int x = 0; x < g.degree(); ++x) {
      int from = block_of[x];
      int to = block_of[gen[x]];
      if (image[from] < 0) {
        image[from] = to;
      } else if (image[from] != to) {
        return false;
      }
    }
  }
  return true;
}

// True when every cell of fine lies inside one cell of coarse.
bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  std::vector<int> target(fine.size(), -1);
  for (std::size_t x = 0; x < fine.size(); ++x) {
    int f = fine[x];
    if (target[f] < 0) {
      target[f] = coarse[x];
    } else if (target[f] != coarse[x]) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closure basics") {
  PermGroup trivial = PermGroup::closure(5, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements() == std::vector<Perm>{Perm(5)});

  PermGroup ql = PermGroup::closure(8, {cyc("(1324)(5768)"), cyc("(1526)(3847)")});
  CHECK(ql.order() == 8);

  PermGroup g1 = PermGroup::closure(8, {cyc("(1324)(5768)"), cyc("(1526)(3847)"),
                                        cyc("(1324)(5867)"), cyc("(1526)(3748)")});
  CHECK(g1.order() == 32);

  CHECK_THROWS_AS(PermGroup(3, {cyc("(12)", 4)}), std::invalid_argument);
}

TEST_CASE("closure is closed and Lagrange holds") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int degree = 2 + static_cast<int>(rng() % 6);
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(random_perm(rng, degree));
    PermGroup g = PermGroup::closure(degree, gens);
    const auto& elems = g.elements();
    CHECK(factorial(degree) % g.order() == 0);
    for (int k = 0; k < 20; ++k) {
      const Perm& a = elems[rng() % elems.size()];
      const Perm& b = elems[rng() % elems.size()];
      CHECK(g.contains(a * b));
      CHECK(g.contains(a.inverse()));
    }
  }
}

TEST_CASE("caps") {
  std::vector<Perm> s8 = {cyc("(12)"), cyc("(12345678)")};
  PermGroup capped = PermGroup::closure(8, s8, 100);
  CHECK(capped.cap_exceeded());
  CHECK(!capped.has_elements());
  CHECK_THROWS_AS(capped.elements(), CapExceededError);
  CHECK_THROWS_AS(capped.order(), CapExceededError);
  CHECK(capped.generators().size() == 2);  // generators survive a capped run

  PermGroup full = with_elements(capped);
  CHECK(full.order() == 40320);
  CHECK_THROWS_AS(with_elements(capped, 100), CapExceededError);
}

TEST_CASE("same_group") {
  PermGroup a = PermGroup::closure(4, {cyc("(1234)", 4)});
  PermGroup b = PermGroup::closure(4, {cyc("(1432)", 4)});
  PermGroup c = PermGroup::closure(4, {cyc("(12)(34)", 4)});
  CHECK(a.same_group(b));
  CHECK(!a.same_group(c));
}

TEST_CASE("orbits and transitivity") {
  PermGroup g = PermGroup::closure(5, {cyc("(123)", 5)});
  auto orbs = cayleyci::orbits(g);
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<int>{0, 1, 2});
  CHECK(orbs[1] == std::vector<int>{3});
  CHECK(orbs[2] == std::vector<int>{4});
  CHECK(!is_transitive(g));

  PermGroup ql = PermGroup::closure(8, {cyc("(1324)(5768)"), cyc("(1526)(3847)")});
  CHECK(cayleyci::orbits(ql).size() == 1);
  CHECK(is_transitive(ql));

  PermGroup trivial = PermGroup::closure(6, {});
  CHECK(cayleyci::orbits(trivial).size() == 6);
}

TEST_CASE("regularity") {
  PermGroup ql = PermGroup::closure(8, {cyc("(1324)(5768)"), cyc("(1526)(3847)")});
  CHECK(is_regular(ql));
  CHECK(is_transitive(ql));
  CHECK(ql.order() == 8);

  CHECK(!is_regular(PermGroup::closure(3, {cyc("(12)", 3)})));           // not transitive
  CHECK(!is_regular(PermGroup::closure(3, {cyc("(12)", 3), cyc("(123)", 3)})));  // order 6
}

TEST_CASE("block system construction and validation") {
  BlockSystem sys = BlockSystem::from_block_of({0, 1, 0, 1});
  REQUIRE(sys.block_count() == 2);
  CHECK(sys.blocks[0] == std::vector<int>{0, 2});
  CHECK(sys.blocks[1] == std::vector<int>{1, 3});
  CHECK(sys.degree() == 4);

  CHECK_THROWS_AS(BlockSystem::from_block_of({0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(BlockSystem::from_block_of({0, 2}), std::invalid_argument);  // id 1 unused
}

TEST_CASE("minimal block system, small cases") {
  PermGroup z4 = PermGroup::closure(4, {cyc("(1234)", 4)});
  BlockSystem sys = minimal_block_system(z4, 0, 2);  // paper-style seed {1,3}
  REQUIRE(sys.block_count() == 2);
  CHECK(sys.blocks[0] == std::vector<int>{0, 2});
  CHECK(sys.blocks[1] == std::vector<int>{1, 3});

  BlockSystem singletons = minimal_block_system(z4, 1, 1);
  CHECK(singletons.block_count() == 4);

  CHECK_THROWS_AS(minimal_block_system(PermGroup::closure(4, {cyc("(12)", 4)}), 0, 1),
                  std::invalid_argument);  // intransitive
  CHECK_THROWS_AS(minimal_block_system(z4, 0, 7), std::invalid_argument);
}

TEST_CASE("minimal block system matches the brute-force lattice") {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 12) {
    int degree = 4 + static_cast<int>(rng() % 3);  // 4..6
    std::vector<Perm> gens = {random_perm(rng, degree), random_perm(rng, degree)};
    PermGroup g = PermGroup::closure(degree, gens);
    if (!is_transitive(g)) continue;
    ++tested;

    std::vector<std::vector<int>> partitions;
    all_partitions(degree, partitions);

    int a = static_cast<int>(rng() % degree);
    int b = static_cast<int>(rng() % degree);
    if (a == b) b = (b + 1) % degree;
    BlockSystem sys = minimal_block_system(g, a, b);

    CHECK(sys.block_of[a] == sys.block_of[b]);
    CHECK(partition_invariant(sys.block_of, g));
    // Finest: refines every invariant partition that joins a and b.
    for (const auto& p : partitions) {
      if (p[a] != p[b] || !partition_invariant(p, g)) continue;
      CHECK(refines(sys.block_of, p));
    }
  }
}

TEST_CASE("coset blocks at degree 40") {
  FiniteGroup q40 = build_group(GroupSpec::parse("Q8xZ5"));
  PermGroup rep = right_regular_rep(q40);
  int a = q40.index_of("1@0");
  int b = q40.index_of("1@1");
  BlockSystem sys = minimal_block_system(rep, a, b);
  REQUIRE(sys.block_count() == 8);
  for (const auto& blk : sys.blocks) CHECK(blk.size() == 5);
  // Cells are the Z5 cosets: same block iff same order-8 coordinate.
  CHECK(sys.block_of[q40.index_of("i@0")] == sys.block_of[q40.index_of("i@4")]);
  CHECK(sys.block_of[q40.index_of("i@0")] != sys.block_of[q40.index_of("j@0")]);
}

TEST_CASE("induced action") {
  FiniteGroup q40 = build_group(GroupSpec::parse("Q8xZ5"));
  PermGroup rep = right_regular_rep(q40);
  BlockSystem sys = minimal_block_system(rep, q40.index_of("1@0"), q40.index_of("1@1"));

  PermGroup quotient = with_elements(induced_action(rep, sys));
  CHECK(quotient.degree() == 8);
  CHECK(quotient.order() == 8);
  CHECK(is_regular(quotient));
  FiniteGroup q8 = build_group(GroupSpec::parse("Q8"));
  CHECK(abstract_isomorphic(quotient, q8).has_value());

  // The Z5 factor fixes every coset, so its quotient action is trivial.
  std::vector<Perm> shift;
  for (const Perm& p : rep.elements()) {
    // translation by 1@1 moves 1@0 (index of "1@0") to 1@1
    if (p[q40.index_of("1@0")] == q40.index_of("1@1")) shift.push_back(p);
  }
  REQUIRE(shift.size() == 1);
  PermGroup zsub = PermGroup::closure(40, shift);
  CHECK(zsub.order() == 5);
  PermGroup ztriv = with_elements(induced_action(zsub, sys));
  CHECK(ztriv.order() == 1);
  CHECK(ztriv.degree() == 8);

  // Singleton blocks give back an isomorphic copy.
  PermGroup z4 = PermGroup::closure(4, {cyc("(1234)", 4)});
  BlockSystem singles = BlockSystem::from_block_of({0, 1, 2, 3});
  CHECK(with_elements(induced_action(z4, singles)).same_group(z4));

  // Non-invariant partition is rejected.
  BlockSystem bad = BlockSystem::from_block_of({0, 0, 1, 1});
  PermGroup g = PermGroup::closure(4, {cyc("(123)", 4)});
  CHECK_THROWS_AS(induced_action(g, bad), std::invalid_argument);
  CHECK_THROWS_AS(induced_action(z4, BlockSystem::from_block_of({0, 1, 0, 1, 2, 2})),
                  std::invalid_argument);  // degree mismatch
}

TEST_CASE("induced action is a homomorphism on random words") {
  std::mt19937_64 rng(29);
  FiniteGroup q40 = build_group(GroupSpec::parse("Q8xZ5"));
  PermGroup rep = right_regular_rep(q40);
  BlockSystem sys = minimal_block_system(rep, 0, 1);
  PermGroup quotient = induced_action(rep, sys);
  REQUIRE(quotient.generators().size() == rep.generators().size());

  for (int trial = 0; trial < 50; ++trial) {
    Perm word(40);
    Perm image(8);
    for (int step = 0; step < 6; ++step) {
      std::size_t pick = rng() % rep.generators().size();
      word = word * rep.generators()[pick];
      image = image * quotient.generators()[pick];
    }
    // the quotient of the product equals the product of the quotients
    for (int blk = 0; blk < 8; ++blk) {
      CHECK(sys.block_of[word[sys.blocks[blk][0]]] == image[blk]);
    }
  }
}
