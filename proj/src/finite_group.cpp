#include "cayleyci/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cayleyci {

namespace {

constexpr std::uint64_t kMaxBuildOrder = 10'000;

void validate(const FiniteGroup& g) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("group must have at least one element");
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = g.times(a, b);
      if (v < 0 || v >= n || seen[v]) throw std::logic_error("multiplication table is not a Latin square");
      seen[v] = 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[g.times(b, a)] = 1;
    for (int b = 0; b < n; ++b) {
      if (!seen[b]) throw std::logic_error("multiplication table is not a Latin square");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.times(g.identity, a) != a || g.times(a, g.identity) != a) {
      throw std::logic_error("identity element is wrong");
    }
    if (g.times(a, g.inv(a)) != g.identity || g.times(g.inv(a), a) != g.identity) {
      throw std::logic_error("inverse table is wrong");
    }
  }
  if (n <= 64) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c))) {
            throw std::logic_error("multiplication table is not associative");
          }
        }
      }
    }
  }
}

void fill_inverses(FiniteGroup& g) {
  int n = g.order();
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.times(a, b) == g.identity) {
        g.inverse[a] = b;
        break;
      }
    }
  }
}

// Quaternion group; rows are the left factor. Index order:
// 1, -1, i, -i, j, -j, k, -k with i*j = k, j*i = -k.
constexpr int kQ8Table[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 1, 0, 6, 7, 5, 4},
    {3, 2, 0, 1, 7, 6, 4, 5},
    {4, 5, 7, 6, 1, 0, 2, 3},
    {5, 4, 6, 7, 0, 1, 3, 2},
    {6, 7, 4, 5, 3, 2, 1, 0},
    {7, 6, 5, 4, 2, 3, 0, 1},
};

FiniteGroup build_q8() {
  FiniteGroup g;
  g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  g.mul.resize(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) g.mul[a * 8 + b] = static_cast<std::uint16_t>(kQ8Table[a][b]);
  }
  g.identity = 0;
  return g;
}

FiniteGroup build_e8() {
  FiniteGroup g;
  g.names.resize(8);
  g.mul.resize(64);
  for (int v = 0; v < 8; ++v) {
    g.names[v] = {static_cast<char>('0' + ((v >> 2) & 1)), static_cast<char>('0' + ((v >> 1) & 1)),
                  static_cast<char>('0' + (v & 1))};
    for (int w = 0; w < 8; ++w) g.mul[v * 8 + w] = static_cast<std::uint16_t>(v ^ w);
  }
  g.identity = 0;
  return g;
}

FiniteGroup build_cyclic(int n) {
  FiniteGroup g;
  g.names.resize(n);
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    g.names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) g.mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
  }
  g.identity = 0;
  return g;
}

FiniteGroup build_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  int na = a.order(), nb = b.order();
  int n = na * nb;
  g.names.resize(n);
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) g.names[x] = a.names[x / nb] + "@" + b.names[x % nb];
  for (int x = 0; x < n; ++x) {
    int xa = x / nb, xb = x % nb;
    for (int y = 0; y < n; ++y) {
      g.mul[static_cast<std::size_t>(x) * n + y] =
          static_cast<std::uint16_t>(a.times(xa, y / nb) * nb + b.times(xb, y % nb));
    }
  }
  g.identity = a.identity * nb + b.identity;
  return g;
}

}  // namespace

int FiniteGroup::index_of(std::string_view token) const {
  for (int i = 0; i < order(); ++i) {
    if (names[i] == token) return i;
  }
  throw std::invalid_argument("unknown element token: " + std::string(token));
}

std::uint64_t FiniteGroup::element_order(int a) const {
  std::uint64_t ord = 1;
  int x = a;
  while (x != identity) {
    x = times(x, a);
    ++ord;
  }
  return ord;
}

std::vector<std::pair<std::uint64_t, int>> FiniteGroup::order_profile() const {
  std::map<std::uint64_t, int> acc;
  for (int a = 0; a < order(); ++a) ++acc[element_order(a)];
  return {acc.begin(), acc.end()};
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<GroupSpec> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t cut = text.find('x', pos);
    std::string_view tok = text.substr(pos, cut == std::string_view::npos ? cut : cut - pos);
    GroupSpec part;
    if (tok == "Q8") {
      part.kind = Kind::q8;
    } else if (tok == "E8") {
      part.kind = Kind::e8;
    } else if (tok.size() >= 2 && tok[0] == 'Z') {
      int n = 0;
      for (char c : tok.substr(1)) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad group spec token: " + std::string(tok));
        n = n * 10 + (c - '0');
        if (n > static_cast<int>(kMaxBuildOrder)) break;
      }
      if (n < 1 || n > static_cast<int>(kMaxBuildOrder)) {
        throw std::invalid_argument("cyclic order out of range: " + std::string(tok));
      }
      part.kind = Kind::cyclic;
      part.n = n;
    } else {
      throw std::invalid_argument("bad group spec token: " + std::string(tok));
    }
    parts.push_back(std::move(part));
    if (cut == std::string_view::npos) break;
    pos = cut + 1;
  }
  if (parts.size() == 1) return parts[0];
  GroupSpec prod;
  prod.kind = Kind::product;
  prod.factors = std::move(parts);
  return prod;
}

std::string GroupSpec::str() const {
  switch (kind) {
    case Kind::q8:
      return "Q8";
    case Kind::e8:
      return "E8";
    case Kind::cyclic:
      return "Z" + std::to_string(n);
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += 'x';
        out += factors[i].str();
      }
      return out;
    }
  }
  return {};
}

std::uint64_t GroupSpec::order() const {
  switch (kind) {
    case Kind::q8:
    case Kind::e8:
      return 8;
    case Kind::cyclic:
      return static_cast<std::uint64_t>(n);
    case Kind::product: {
      std::uint64_t o = 1;
      for (const auto& f : factors) o *= f.order();
      return o;
    }
  }
  return 1;
}

FiniteGroup build_group(const GroupSpec& spec) {
  if (spec.order() > kMaxBuildOrder) throw std::invalid_argument("group order exceeds build limit");
  FiniteGroup g;
  switch (spec.kind) {
    case GroupSpec::Kind::q8:
      g = build_q8();
      break;
    case GroupSpec::Kind::e8:
      g = build_e8();
      break;
    case GroupSpec::Kind::cyclic:
      g = build_cyclic(spec.n);
      break;
    case GroupSpec::Kind::product: {
      g = build_group(spec.factors[0]);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        FiniteGroup rhs = build_group(spec.factors[i]);
        g = build_product(g, rhs);
      }
      break;
    }
  }
  fill_inverses(g);
  validate(g);
  return g;
}

namespace {

PermGroup regular_rep(const FiniteGroup& g, bool right) {
  int n = g.order();
  std::vector<Perm> perms;
  perms.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = right ? g.times(x, a) : g.times(a, x);
    perms.emplace_back(std::move(img));
  }
  // The full element set doubles as the generator list; it is already
  // closed, so enumerate cheaply for set comparisons.
  return PermGroup::closure(n, std::move(perms), static_cast<std::uint64_t>(n) + 1);
}

}  // namespace

std::vector<int> greedy_generators(const FiniteGroup& g) {
  int n = g.order();
  auto close = [&](const std::vector<int>& gens) {
    std::vector<char> in(n, 0);
    std::vector<int> got{g.identity};
    in[g.identity] = 1;
    for (std::size_t qi = 0; qi < got.size(); ++qi) {
      for (int x : gens) {
        int y = g.times(got[qi], x);
        if (!in[y]) {
          in[y] = 1;
          got.push_back(y);
        }
      }
    }
    return got;
  };
  std::vector<int> gens;
  std::size_t have = 1;
  while (have < static_cast<std::size_t>(n)) {
    int best = -1;
    std::size_t best_size = have;
    for (int x = 0; x < n; ++x) {
      std::vector<int> trial = gens;
      trial.push_back(x);
      std::size_t s = close(trial).size();
      if (s > best_size) {
        best = x;
        best_size = s;
      }
    }
    gens.push_back(best);
    have = best_size;
  }
  return gens;
}

namespace {

// Element expressions over a generating sequence: each element is the
// identity, a generator, or prev*generator. Used to extend candidate
// generator images to a full map.
struct WordTable {
  std::vector<int> elems;            // BFS order, elems[0] = identity
  std::vector<std::pair<int, int>> expr;  // (position of prev, generator slot); (-1, slot) for generators
};

WordTable word_table(const FiniteGroup& g, const std::vector<int>& gens) {
  int n = g.order();
  WordTable t;
  std::vector<int> pos(n, -1);
  t.elems.push_back(g.identity);
  t.expr.emplace_back(-1, -1);
  pos[g.identity] = 0;
  for (std::size_t qi = 0; qi < t.elems.size(); ++qi) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int y = g.times(t.elems[qi], gens[s]);
      if (pos[y] < 0) {
        pos[y] = static_cast<int>(t.elems.size());
        t.elems.push_back(y);
        t.expr.emplace_back(static_cast<int>(qi), static_cast<int>(s));
      }
    }
  }
  if (t.elems.size() != static_cast<std::size_t>(n)) throw std::logic_error("generators do not generate");
  return t;
}

}  // namespace

PermGroup right_regular_rep(const FiniteGroup& g) { return regular_rep(g, true); }
PermGroup left_regular_rep(const FiniteGroup& g) { return regular_rep(g, false); }

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  int n = g.order();
  if (n > 64) throw std::invalid_argument("automorphism enumeration is limited to order 64");
  std::vector<int> gens = greedy_generators(g);
  WordTable words = word_table(g, gens);
  std::vector<std::uint64_t> ord(n);
  for (int a = 0; a < n; ++a) ord[a] = g.element_order(a);

  std::vector<std::vector<int>> found;
  std::vector<int> imgs(gens.size());
  auto leaf = [&]() {
    // Extend generator images along the word table, then verify.
    std::vector<int> phi(n, -1);
    phi[g.identity] = g.identity;
    for (std::size_t p = 1; p < words.elems.size(); ++p) {
      auto [prev, slot] = words.expr[p];
      int value = prev < 0 ? imgs[slot] : g.times(phi[words.elems[prev]], imgs[slot]);
      phi[words.elems[p]] = value;
    }
    std::vector<char> hit(n, 0);
    for (int v : phi) {
      if (v < 0 || hit[v]) return;
      hit[v] = 1;
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (phi[g.times(a, b)] != g.times(phi[a], phi[b])) return;
      }
    }
    found.push_back(phi);
  };
  auto rec = [&](auto&& self, std::size_t slot) -> void {
    if (slot == gens.size()) {
      leaf();
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (ord[cand] != ord[gens[slot]]) continue;
      imgs[slot] = cand;
      self(self, slot + 1);
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<std::vector<Perm>> abstract_isomorphic(const PermGroup& h, const FiniteGroup& g) {
  int n = g.order();
  const auto& elems = h.elements();
  if (elems.size() != static_cast<std::size_t>(n)) return std::nullopt;

  std::vector<int> gens = greedy_generators(g);
  WordTable words = word_table(g, gens);
  std::vector<std::uint64_t> gen_ord(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) gen_ord[s] = g.element_order(gens[s]);
  std::vector<std::uint64_t> elem_ord(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) elem_ord[i] = elems[i].order();

  std::vector<int> imgs(gens.size());
  std::optional<std::vector<Perm>> result;
  auto leaf = [&]() -> bool {
    std::vector<Perm> phi(n, Perm(h.degree()));
    for (std::size_t p = 1; p < words.elems.size(); ++p) {
      auto [prev, slot] = words.expr[p];
      const Perm& right = elems[imgs[slot]];
      phi[words.elems[p]] = prev < 0 ? right : phi[words.elems[prev]] * right;
    }
    std::vector<Perm> image = phi;
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    if (image != elems) return false;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (phi[g.times(a, b)] != phi[a] * phi[b]) return false;
      }
    }
    result = std::move(phi);
    return true;
  };
  auto rec = [&](auto&& self, std::size_t slot) -> bool {
    if (slot == gens.size()) return leaf();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elem_ord[i] != gen_ord[slot]) continue;
      imgs[slot] = static_cast<int>(i);
      if (self(self, slot + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

std::vector<int> apply_automorphism(const FiniteGroup& g, const std::vector<int>& mu,
                                    const std::vector<int>& s) {
  int n = g.order();
  if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("automorphism has wrong size");
  std::vector<char> hit(n, 0);
  for (int v : mu) {
    if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("map is not a bijection");
    hit[v] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mu[g.times(a, b)] != g.times(mu[a], mu[b])) {
        throw std::invalid_argument("map is not an automorphism");
      }
    }
  }
  std::vector<int> out;
  out.reserve(s.size());
  for (int x : s) {
    if (x < 0 || x >= n) throw std::invalid_argument("subset element out of range");
    out.push_back(mu[x]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cayleyci
