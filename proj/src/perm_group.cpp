#include "cayleyci/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace cayleyci {

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree < 1) throw std::invalid_argument("group degree must be at least 1");
  for (const Perm& g : gens_) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  }
}

PermGroup PermGroup::closure(int degree, std::vector<Perm> generators, std::uint64_t cap) {
  PermGroup g(degree, std::move(generators));
  std::unordered_set<Perm> seen;
  std::vector<Perm> order_found;
  Perm id(degree);
  seen.insert(id);
  order_found.push_back(id);
  bool capped = false;
  for (std::size_t qi = 0; qi < order_found.size() && !capped; ++qi) {
    for (const Perm& gen : g.gens_) {
      Perm nx = order_found[qi] * gen;
      if (seen.insert(nx).second) {
        if (seen.size() > cap) {
          capped = true;
          break;
        }
        order_found.push_back(std::move(nx));
      }
    }
  }
  if (capped) {
    g.capped_ = true;
    return g;
  }
  std::sort(order_found.begin(), order_found.end());
  g.elements_ = std::move(order_found);
  g.enumerated_ = true;
  return g;
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!enumerated_) throw CapExceededError("group has no element list (enumeration capped or skipped)");
  return elements_;
}

std::uint64_t PermGroup::order() const { return elements().size(); }

bool PermGroup::contains(const Perm& p) const {
  const auto& e = elements();
  return std::binary_search(e.begin(), e.end(), p);
}

bool PermGroup::same_group(const PermGroup& other) const {
  return degree_ == other.degree_ && elements() == other.elements();
}

PermGroup with_elements(const PermGroup& g, std::uint64_t cap) {
  if (g.has_elements()) return g;
  PermGroup out = PermGroup::closure(g.degree(), g.generators(), cap);
  if (!out.has_elements()) throw CapExceededError("group enumeration exceeded cap");
  return out;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  int n = g.degree();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (owner[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> orbit{s};
    owner[s] = id;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (const Perm& gen : g.generators()) {
        int y = gen[orbit[qi]];
        if (owner[y] < 0) {
          owner[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

bool is_regular(const PermGroup& g) {
  return is_transitive(g) && g.order() == static_cast<std::uint64_t>(g.degree());
}

BlockSystem BlockSystem::from_block_of(std::vector<int> block_of) {
  BlockSystem b;
  b.block_of = std::move(block_of);
  int count = 0;
  for (int id : b.block_of) count = std::max(count, id + 1);
  b.blocks.assign(count, {});
  for (int x = 0; x < static_cast<int>(b.block_of.size()); ++x) {
    int id = b.block_of[x];
    if (id < 0) throw std::invalid_argument("negative block id");
    b.blocks[id].push_back(x);
  }
  for (const auto& cell : b.blocks) {
    if (cell.empty()) throw std::invalid_argument("empty block in block system");
  }
  // Renumber cells by smallest point and rebuild the map.
  std::sort(b.blocks.begin(), b.blocks.end());
  for (int i = 0; i < b.block_count(); ++i) {
    for (int x : b.blocks[i]) b.block_of[x] = i;
  }
  return b;
}

namespace {

struct UnionFind {
  std::vector<int> parent, size;
  explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns the root that lost leadership, or -1 when already joined.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return b;
  }
};

}  // namespace

BlockSystem minimal_block_system(const PermGroup& g, int a, int b) {
  int n = g.degree();
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("seed point out of range");
  if (!is_transitive(g)) throw std::invalid_argument("block systems require a transitive group");

  std::vector<int> block_of(n);
  if (a == b) {
    std::iota(block_of.begin(), block_of.end(), 0);
    return BlockSystem::from_block_of(block_of);
  }

  UnionFind uf(n);
  std::queue<int> pending;
  pending.push(uf.unite(a, b));
  while (!pending.empty()) {
    int c = pending.front();
    pending.pop();
    int r = uf.find(c);
    for (const Perm& gen : g.generators()) {
      int lost = uf.unite(gen[c], gen[r]);
      if (lost >= 0) pending.push(lost);
    }
  }
  std::vector<int> root_label(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (root_label[r] < 0) root_label[r] = next++;
    block_of[x] = root_label[r];
  }
  auto sys = BlockSystem::from_block_of(std::move(block_of));
  std::size_t cell = sys.blocks.front().size();
  for (const auto& blk : sys.blocks) {
    if (blk.size() != cell) throw std::logic_error("blocks of a transitive group must share a size");
  }
  return sys;
}

PermGroup induced_action(const PermGroup& g, const BlockSystem& blocks) {
  if (blocks.degree() != g.degree()) throw std::invalid_argument("block system degree mismatch");
  std::vector<Perm> quot;
  quot.reserve(g.generators().size());
  for (const Perm& gen : g.generators()) {
    std::vector<int> img(blocks.block_count());
    for (int i = 0; i < blocks.block_count(); ++i) {
      int target = blocks.block_of[gen[blocks.blocks[i][0]]];
      for (int x : blocks.blocks[i]) {
        if (blocks.block_of[gen[x]] != target) {
          throw std::invalid_argument("partition is not invariant under the group");
        }
      }
      img[i] = target;
    }
    quot.emplace_back(std::move(img));
  }
  if (quot.empty()) return PermGroup(blocks.block_count(), {});
  return PermGroup(blocks.block_count(), std::move(quot));
}

}  // namespace cayleyci
