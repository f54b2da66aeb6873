#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayleyci/finite_group.hpp"
#include "cayleyci/perm_group.hpp"

using cayleyci::FiniteGroup;
using cayleyci::GroupSpec;
using cayleyci::Perm;
using cayleyci::PermGroup;

namespace {

FiniteGroup make(const char* spec) { return build_group(GroupSpec::parse(spec)); }

int idx(const FiniteGroup& g, const char* name) { return g.index_of(name); }

}  // namespace

TEST_CASE("group spec grammar") {
  CHECK(GroupSpec::parse("Q8").str() == "Q8");
  CHECK(GroupSpec::parse("E8").str() == "E8");
  CHECK(GroupSpec::parse("Z5").str() == "Z5");
  CHECK(GroupSpec::parse("Q8xZ5").str() == "Q8xZ5");
  CHECK(GroupSpec::parse("E8xZ7").str() == "E8xZ7");
  CHECK(GroupSpec::parse("Z2xZ2xZ2").str() == "Z2xZ2xZ2");

  CHECK(GroupSpec::parse("Q8").order() == 8);
  CHECK(GroupSpec::parse("Q8xZ5").order() == 40);
  CHECK(GroupSpec::parse("E8xZ7").order() == 56);
  CHECK(GroupSpec::parse("Z12").order() == 12);

  CHECK_THROWS_AS(GroupSpec::parse("F4"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("Z0"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("Zx"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(build_group(GroupSpec::parse("Z10001")), std::invalid_argument);
}

TEST_CASE("quaternion table") {
  FiniteGroup q8 = make("Q8");
  REQUIRE(q8.order() == 8);
  std::vector<std::string> expected = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  CHECK(q8.names == expected);
  CHECK(q8.identity == 0);

  CHECK(q8.times(idx(q8, "i"), idx(q8, "j")) == idx(q8, "k"));
  CHECK(q8.times(idx(q8, "j"), idx(q8, "i")) == idx(q8, "-k"));
  CHECK(q8.times(idx(q8, "i"), idx(q8, "i")) == idx(q8, "-1"));
  CHECK(q8.times(idx(q8, "j"), idx(q8, "j")) == idx(q8, "-1"));
  CHECK(q8.times(idx(q8, "k"), idx(q8, "k")) == idx(q8, "-1"));
  CHECK(q8.times(idx(q8, "j"), idx(q8, "k")) == idx(q8, "i"));
  CHECK(q8.times(idx(q8, "-1"), idx(q8, "-1")) == idx(q8, "1"));
  CHECK(q8.inv(idx(q8, "i")) == idx(q8, "-i"));
  CHECK(q8.inv(idx(q8, "-1")) == idx(q8, "-1"));

  CHECK(q8.element_order(idx(q8, "1")) == 1);
  CHECK(q8.element_order(idx(q8, "-1")) == 2);
  CHECK(q8.element_order(idx(q8, "i")) == 4);

  auto profile = q8.order_profile();
  std::vector<std::pair<std::uint64_t, int>> want = {{1, 1}, {2, 1}, {4, 6}};
  CHECK(profile == want);

  CHECK_THROWS_AS(q8.index_of("q"), std::invalid_argument);
}

TEST_CASE("cyclic and elementary abelian tables") {
  FiniteGroup z5 = make("Z5");
  REQUIRE(z5.order() == 5);
  CHECK(z5.names == std::vector<std::string>{"0", "1", "2", "3", "4"});
  for (int a = 1; a < 5; ++a) CHECK(z5.element_order(a) == 5);
  CHECK(z5.times(3, 4) == 2);
  CHECK(z5.inv(2) == 3);

  FiniteGroup e8 = make("E8");
  REQUIRE(e8.order() == 8);
  CHECK(e8.names[0] == "000");
  CHECK(e8.names[7] == "111");
  CHECK(e8.times(idx(e8, "011"), idx(e8, "110")) == idx(e8, "101"));
  for (int a = 1; a < 8; ++a) CHECK(e8.element_order(a) == 2);
}

TEST_CASE("direct products") {
  FiniteGroup q40 = make("Q8xZ5");
  REQUIRE(q40.order() == 40);
  CHECK(q40.names[0] == "1@0");
  int a = idx(q40, "i@2");
  int b = idx(q40, "j@4");
  CHECK(q40.names[q40.times(a, b)] == "k@1");
  CHECK(q40.element_order(idx(q40, "i@1")) == 20);
  CHECK(q40.element_order(idx(q40, "-1@0")) == 2);

  // center of Q8 x Z5 is {1,-1} x Z5
  int central = 0;
  for (int x = 0; x < q40.order(); ++x) {
    bool c = true;
    for (int y = 0; y < q40.order() && c; ++y) c = q40.times(x, y) == q40.times(y, x);
    central += c;
  }
  CHECK(central == 10);

  FiniteGroup e56 = make("E8xZ7");
  CHECK(e56.order() == 56);
  CHECK(e56.names[0] == "000@0");
}

TEST_CASE("regular representations") {
  FiniteGroup q8 = make("Q8");
  PermGroup right = right_regular_rep(q8);
  PermGroup left = left_regular_rep(q8);
  CHECK(is_regular(right));
  CHECK(is_regular(left));
  CHECK(right.degree() == 8);

  // right translation by g sends x to x*g; left sends x to g*x;
  // generators are produced per group element in index order
  for (int g = 0; g < 8; ++g) {
    const Perm& rg = right.generators()[g];
    const Perm& lg = left.generators()[g];
    for (int x = 0; x < 8; ++x) {
      CHECK(rg[x] == q8.times(x, g));
      CHECK(lg[x] == q8.times(g, x));
    }
  }

  // the two actions centralize each other
  for (const Perm& r : right.elements()) {
    for (const Perm& l : left.elements()) CHECK(r * l == l * r);
  }

  // right is a homomorphic image, left an antihomomorphic one; both share
  // the same element set as groups
  FiniteGroup z5 = make("Z5");
  PermGroup z5r = right_regular_rep(z5);
  CHECK(z5r.contains(Perm::from_cycles("(12345)", 5)));
  CHECK(z5r.same_group(left_regular_rep(z5)));  // abelian: identical elements

  FiniteGroup z1 = make("Z1");
  CHECK(right_regular_rep(z1).order() == 1);
  CHECK(right_regular_rep(z1).degree() == 1);
}

TEST_CASE("greedy generators") {
  FiniteGroup q8 = make("Q8");
  auto gens = greedy_generators(q8);
  CHECK(gens == std::vector<int>{idx(q8, "i"), idx(q8, "j")});

  CHECK(greedy_generators(make("Z1")).empty());

  for (const char* spec : {"Q8", "E8", "Z8", "Q8xZ5", "Z2xZ4"}) {
    FiniteGroup g = make(spec);
    auto picked = greedy_generators(g);
    PermGroup rep = right_regular_rep(g);
    std::vector<Perm> perm_gens;
    for (int x : picked) perm_gens.push_back(rep.generators()[x]);
    CHECK(PermGroup::closure(g.order(), perm_gens).order() ==
          static_cast<std::uint64_t>(g.order()));
  }
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(make("Q8")).size() == 24);
  CHECK(automorphisms(make("Z5")).size() == 4);
  CHECK(automorphisms(make("E8")).size() == 168);  // |GL(3,2)|
  CHECK(automorphisms(make("Z8")).size() == 4);
  CHECK(automorphisms(make("Z2xZ4")).size() == 8);
  CHECK(automorphisms(make("Z1")).size() == 1);
}

TEST_CASE("automorphisms form a group and preserve element order") {
  FiniteGroup q8 = make("Q8");
  auto autos = automorphisms(q8);
  std::set<std::vector<int>> group(autos.begin(), autos.end());

  for (std::size_t a = 0; a < autos.size(); a += 5) {
    for (std::size_t b = 0; b < autos.size(); b += 7) {
      std::vector<int> prod(8);
      for (int x = 0; x < 8; ++x) prod[x] = autos[b][autos[a][x]];
      CHECK(group.count(prod) == 1);
    }
    std::vector<int> inv(8);
    for (int x = 0; x < 8; ++x) inv[autos[a][x]] = x;
    CHECK(group.count(inv) == 1);
    for (int x = 0; x < 8; ++x) CHECK(q8.element_order(x) == q8.element_order(autos[a][x]));
  }
}

TEST_CASE("automorphism orbit of a generator set") {
  FiniteGroup q8 = make("Q8");
  std::set<std::vector<int>> orbit;
  for (const auto& mu : automorphisms(q8)) {
    orbit.insert(apply_automorphism(q8, mu, {idx(q8, "i")}));
  }
  // {i} can be carried to any of the six order-4 elements
  CHECK(orbit.size() == 6);
}

TEST_CASE("apply_automorphism") {
  FiniteGroup q8 = make("Q8");
  std::vector<int> identity = {0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<int> s = {idx(q8, "i"), idx(q8, "k")};
  CHECK(apply_automorphism(q8, identity, s) == s);

  // conjugation by i: x -> i x i^-1 sends j to -j
  std::vector<int> conj_i(8);
  int i = idx(q8, "i");
  for (int x = 0; x < 8; ++x) conj_i[x] = q8.times(q8.times(i, x), q8.inv(i));
  auto image = apply_automorphism(q8, conj_i, {idx(q8, "j")});
  CHECK(image == std::vector<int>{idx(q8, "-j")});

  for (const auto& mu : automorphisms(q8)) {
    CHECK(apply_automorphism(q8, mu, s).size() == s.size());
  }

  std::vector<int> swap01 = {1, 0, 2, 3, 4, 5, 6, 7};  // moves the identity
  CHECK_THROWS_AS(apply_automorphism(q8, swap01, s), std::invalid_argument);
  CHECK_THROWS_AS(apply_automorphism(q8, {0, 1, 2}, s), std::invalid_argument);
  CHECK_THROWS_AS(apply_automorphism(q8, identity, {99}), std::invalid_argument);
}

TEST_CASE("abstract isomorphism") {
  FiniteGroup q8 = make("Q8");
  FiniteGroup e8 = make("E8");

  PermGroup ql = PermGroup::closure(
      8, {Perm::from_cycles("(1324)(5768)", 8), Perm::from_cycles("(1526)(3847)", 8)});
  auto iso = abstract_isomorphic(ql, q8);
  REQUIRE(iso.has_value());
  // the returned map phi satisfies phi[a*b] = phi[a]*phi[b]
  const auto& phi = *iso;
  REQUIRE(phi.size() == 8);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      CHECK(phi[q8.times(a, b)] == phi[a] * phi[b]);
    }
  }

  PermGroup a1 = PermGroup::closure(8, {Perm::from_cycles("(12)(34)(56)(78)", 8),
                                        Perm::from_cycles("(13)(24)(57)(68)", 8),
                                        Perm::from_cycles("(15)(26)(37)(48)", 8)});
  CHECK(abstract_isomorphic(a1, e8).has_value());

  CHECK(!abstract_isomorphic(ql, e8).has_value());   // order profiles differ
  CHECK(!abstract_isomorphic(a1, q8).has_value());
  CHECK(!abstract_isomorphic(ql, make("Z8")).has_value());

  PermGroup z4 = PermGroup::closure(4, {Perm::from_cycles("(1234)", 4)});
  CHECK(!abstract_isomorphic(z4, q8).has_value());  // size mismatch
}

TEST_CASE("table invariants on every buildable spec") {
  for (const char* spec : {"Q8", "E8", "Z5", "Z8", "Z2xZ4", "Q8xZ5", "E8xZ7"}) {
    FiniteGroup g = make(spec);
    int n = g.order();
    // Latin square
    for (int a = 0; a < n; ++a) {
      std::vector<char> row(n, 0), col(n, 0);
      for (int b = 0; b < n; ++b) {
        row[g.times(a, b)] = 1;
        col[g.times(b, a)] = 1;
      }
      CHECK(std::count(row.begin(), row.end(), 1) == n);
      CHECK(std::count(col.begin(), col.end(), 1) == n);
      CHECK(g.times(g.identity, a) == a);
      CHECK(g.times(a, g.identity) == a);
      CHECK(g.times(a, g.inv(a)) == g.identity);
    }
  }
}
