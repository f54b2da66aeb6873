#include "cayleyci/closure_ci.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace cayleyci {

ColoredDigraph orbital_coloring(const PermGroup& h) {
  int n = h.degree();
  ColoredDigraph g(n);
  std::vector<char> done(static_cast<std::size_t>(n) * n, 0);
  int next_color = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (done[static_cast<std::size_t>(a) * n + b]) continue;
      int color = next_color++;
      std::vector<std::pair<int, int>> queue{{a, b}};
      done[static_cast<std::size_t>(a) * n + b] = 1;
      g.set_color(a, b, color);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [u, v] = queue[qi];
        for (const Perm& p : h.generators()) {
          int pu = p[u], pv = p[v];
          if (!done[static_cast<std::size_t>(pu) * n + pv]) {
            done[static_cast<std::size_t>(pu) * n + pv] = 1;
            g.set_color(pu, pv, color);
            queue.emplace_back(pu, pv);
          }
        }
      }
    }
  }
  return g;
}

PermGroup two_closure(const PermGroup& h, std::uint64_t cap) {
  ColoredDigraph orbitals = orbital_coloring(h);
  AutResult aut = automorphism_group(orbitals, cap, h.generators());
  if (aut.capped) throw CapExceededError("2-closure exceeds the enumeration cap");
  return PermGroup::closure(h.degree(), aut.generators, aut.order);
}

namespace {

std::string conn_tokens(const FiniteGroup& g, const std::vector<int>& conn) {
  std::string out;
  for (std::size_t i = 0; i < conn.size(); ++i) {
    if (i > 0) out += ',';
    out += g.names[conn[i]];
  }
  return out;
}

std::vector<int> normalized_conn(const FiniteGroup& g, const std::vector<int>& conn) {
  std::vector<int> s = conn;
  for (int x : s) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("connection set element out of range");
    if (x == g.identity) throw std::invalid_argument("identity is not allowed in a connection set");
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Perm> translation_seeds(const FiniteGroup& g) {
  std::vector<Perm> seeds;
  for (int gi : greedy_generators(g)) {
    std::vector<int> img(g.order());
    for (int x = 0; x < g.order(); ++x) img[x] = g.times(x, gi);
    seeds.emplace_back(std::move(img));
  }
  return seeds;
}

}  // namespace

CiVerdict is_ci_graph_babai(const FiniteGroup& g, const std::vector<int>& conn,
                            std::uint64_t cap) {
  std::vector<int> s = normalized_conn(g, conn);
  int n = g.order();
  CiVerdict verdict;
  if (s.empty() || static_cast<int>(s.size()) == n - 1) {
    // Empty and complete graphs: the automorphism group is all of
    // Sym(n), where any two isomorphic regular subgroups are conjugate.
    verdict.is_ci = true;
    return verdict;
  }

  ColoredDigraph graph = cayley(g, s);
  AutResult aut = automorphism_group(graph, cap, translation_seeds(g));
  if (aut.capped) {
    verdict.skipped = "automorphism group too large" +
                      (aut.order ? " (order " + std::to_string(aut.order) + ")" : std::string());
    return verdict;
  }
  PermGroup a = PermGroup::closure(n, aut.generators, aut.order);
  PermGroup ghat = right_regular_rep(g);

  std::vector<PermGroup> subgroups;
  try {
    subgroups = regular_subgroups_isomorphic_to(a, g);
  } catch (const CapExceededError& e) {
    verdict.skipped = e.what();
    return verdict;
  }
  verdict.regular_subgroups_found = static_cast<int>(subgroups.size());
  bool ghat_listed = std::any_of(subgroups.begin(), subgroups.end(), [&](const PermGroup& h) {
    return h.elements() == ghat.elements();
  });
  if (!ghat_listed) {
    throw std::logic_error("regular subgroup search missed the right regular representation");
  }

  for (const PermGroup& h : subgroups) {
    std::optional<Perm> alpha = conjugating_element(a, h, ghat);
    if (!alpha) {
      verdict.is_ci = false;
      verdict.failing_subgroup = h;
      return verdict;
    }
    verdict.conjugator_witnesses.emplace_back(h, *alpha);
  }
  verdict.is_ci = true;
  return verdict;
}

bool is_ci_graph_definitional(const FiniteGroup& g, const std::vector<int>& conn) {
  int n = g.order();
  if (n > 16) throw std::invalid_argument("definitional CI oracle is limited to order 16");
  std::vector<int> s = normalized_conn(g, conn);

  ColoredDigraph s_graph = cayley(g, s);
  std::vector<std::vector<int>> auts = automorphisms(g);
  std::set<std::vector<int>> s_orbit;
  for (const auto& mu : auts) s_orbit.insert(apply_automorphism(g, mu, s));

  std::vector<int> non_identity;
  for (int x = 0; x < n; ++x) {
    if (x != g.identity) non_identity.push_back(x);
  }
  for (std::uint64_t mask = 0; mask < (1ULL << non_identity.size()); ++mask) {
    std::vector<int> t;
    for (std::size_t r = 0; r < non_identity.size(); ++r) {
      if (mask >> r & 1) t.push_back(non_identity[r]);
    }
    if (t.size() != s.size()) continue;  // edge counts differ, never isomorphic
    bool in_orbit = s_orbit.count(t) > 0;
    bool isomorphic = are_isomorphic(s_graph, cayley(g, t)).has_value();
    if (isomorphic && !in_orbit) return false;
    if (in_orbit && !isomorphic) {
      throw std::logic_error("automorphic image of a connection set must give an isomorphic graph");
    }
  }
  return true;
}

std::optional<Perm> is_dci2_pair(const PermGroup& h1, const PermGroup& h2, std::uint64_t cap) {
  if (h1.degree() != h2.degree()) throw std::invalid_argument("groups act on different point counts");
  PermGroup h1e = with_elements(h1);
  PermGroup h2e = with_elements(h2);
  if (!is_regular(h1e) || !is_regular(h2e)) throw std::invalid_argument("both groups must be regular");

  std::vector<Perm> gens = h1e.generators();
  gens.insert(gens.end(), h2e.generators().begin(), h2e.generators().end());
  PermGroup m = PermGroup::closure(h1.degree(), gens, cap);
  if (m.cap_exceeded()) throw CapExceededError("generated group exceeds the enumeration cap");

  PermGroup closure2 = two_closure(m, cap);
  const std::vector<Perm>& h2elems = h2e.elements();
  for (const Perm& sigma : closure2.elements()) {
    bool ok = true;
    for (const Perm& gen : h1e.generators()) {
      if (!std::binary_search(h2elems.begin(), h2elems.end(), conjugate(gen, sigma))) {
        ok = false;
        break;
      }
    }
    if (ok) return sigma;
  }
  return std::nullopt;
}

namespace {

ScanReport run_scan(const FiniteGroup& g, const GroupSpec& spec, const std::string& mode,
                    std::optional<std::uint64_t> seed, const std::vector<std::uint64_t>& masks,
                    std::uint64_t cap) {
  auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.group = spec.str();
  report.mode = mode;
  report.seed = seed;
  report.total = static_cast<int>(masks.size());

  std::vector<int> non_identity;
  for (int x = 0; x < g.order(); ++x) {
    if (x != g.identity) non_identity.push_back(x);
  }
  for (std::uint64_t mask : masks) {
    std::vector<int> conn;
    for (std::size_t r = 0; r < non_identity.size(); ++r) {
      if (mask >> r & 1) conn.push_back(non_identity[r]);
    }
    CiVerdict verdict = is_ci_graph_babai(g, conn, cap);
    if (verdict.skipped) {
      report.skipped.emplace_back(conn_tokens(g, conn), *verdict.skipped);
    } else if (verdict.is_ci) {
      ++report.ci;
    } else {
      report.failures.push_back(conn_tokens(g, conn));
    }
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace

ScanReport dci_scan_exhaustive(const FiniteGroup& g, const GroupSpec& spec, std::uint64_t cap) {
  if (g.order() > 8) throw std::invalid_argument("exhaustive scans are limited to order 8");
  std::vector<std::uint64_t> masks(1ULL << (g.order() - 1));
  std::iota(masks.begin(), masks.end(), 0);
  return run_scan(g, spec, "exhaustive", std::nullopt, masks, cap);
}

ScanReport dci_scan_sample(const FiniteGroup& g, const GroupSpec& spec, int count,
                           std::uint64_t seed, std::uint64_t cap) {
  if (count < 0) throw std::invalid_argument("sample count must be nonnegative");
  std::mt19937_64 engine(seed);
  std::vector<std::uint64_t> masks;
  masks.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::uint64_t mask = 0;
    for (int r = 0; r < g.order() - 1; ++r) {
      if (engine() & 1) mask |= 1ULL << r;
    }
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  return run_scan(g, spec, "sample", seed, masks, cap);
}

std::string ScanReport::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["mode"] = mode;
  if (seed) {
    j["seed"] = *seed;
  } else {
    j["seed"] = nullptr;
  }
  j["total"] = total;
  j["ci"] = ci;
  auto& sk = j["skipped"] = nlohmann::ordered_json::array();
  for (const auto& [conn, reason] : skipped) {
    sk.push_back({{"conn", conn}, {"reason", reason}});
  }
  j["failures"] = failures;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

std::string ScanReport::to_text() const {
  std::string out = "group " + group + ", mode " + mode;
  if (seed) out += ", seed " + std::to_string(*seed);
  out += ": " + std::to_string(ci) + "/" + std::to_string(total) + " CI, " +
         std::to_string(skipped.size()) + " skipped, " + std::to_string(failures.size()) +
         " failures (" + std::to_string(elapsed_ms) + " ms)\n";
  for (const auto& [conn, reason] : skipped) out += "  skipped {" + conn + "}: " + reason + "\n";
  for (const auto& conn : failures) out += "  FAILURE {" + conn + "}\n";
  return out;
}

namespace {

Perm random_perm(std::mt19937_64& engine, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = degree - 1; i > 0; --i) {
    int j = static_cast<int>(engine() % static_cast<std::uint64_t>(i + 1));
    std::swap(img[i], img[j]);
  }
  return Perm(std::move(img));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<PropertyFailure> two_closure_property_suite(int samples, std::uint64_t seed,
                                                        int max_degree) {
  if (max_degree < 2 || max_degree > 8) {
    throw std::invalid_argument("property suite supports degrees 2 to 8");
  }
  std::vector<PropertyFailure> failures;
  std::mt19937_64 engine(seed);
  for (int sample = 0; sample < samples; ++sample) {
    int degree = 2 + static_cast<int>(engine() % static_cast<std::uint64_t>(max_degree - 1));
    int gen_count = 1 + static_cast<int>(engine() % 3);
    std::vector<Perm> gens;
    for (int i = 0; i < gen_count; ++i) gens.push_back(random_perm(engine, degree));
    PermGroup h = PermGroup::closure(degree, gens, factorial(degree));
    std::string tag = "sample " + std::to_string(sample) + " (degree " + std::to_string(degree) + ")";
    auto fail = [&](const std::string& property, const std::string& detail) {
      failures.push_back({property, tag + ": " + detail});
    };

    ColoredDigraph orbitals = orbital_coloring(h);
    PermGroup closure2 = two_closure(h);

    for (const Perm& x : h.elements()) {
      if (!closure2.contains(x)) {
        fail("containment", "group element " + x.cycle_string() + " missing from the 2-closure");
        break;
      }
    }

    PermGroup closure4 = two_closure(closure2);
    if (!closure2.same_group(closure4)) {
      fail("idempotence", "closing twice changed the group order from " +
                              std::to_string(closure2.order()) + " to " +
                              std::to_string(closure4.order()));
    }

    for (const Perm& x : closure2.elements()) {
      if (!preserves_colors(orbitals, x)) {
        fail("orbital preservation", x.cycle_string() + " breaks an orbital");
        break;
      }
    }

    // Any subgroup of a graph's automorphism group keeps its 2-closure
    // inside that automorphism group; here the graph is the orbital
    // coloring of a subgroup of h.
    std::vector<Perm> sub_gens;
    for (const Perm& p : h.generators()) {
      if (engine() & 1) sub_gens.push_back(p);
    }
    PermGroup sub = PermGroup::closure(degree, sub_gens, factorial(degree));
    PermGroup sub_closure = two_closure(sub);
    for (const Perm& x : sub_closure.elements()) {
      if (!preserves_colors(orbitals, x)) {
        fail("graph closure", "2-closure of a subgroup of the graph's automorphisms left it");
        break;
      }
    }
    for (const Perm& x : sub_closure.elements()) {
      if (!closure2.contains(x)) {
        fail("monotonicity", "2-closure of a subgroup escaped the larger 2-closure");
        break;
      }
    }

    if (degree <= 6) {
      // The literal definition: keep exactly those permutations that
      // agree with some group element on every ordered pair, i.e. that
      // preserve every orbital.
      std::vector<int> img(degree);
      std::iota(img.begin(), img.end(), 0);
      std::uint64_t literal_count = 0;
      do {
        bool keeps = true;
        for (int a = 0; a < degree && keeps; ++a) {
          for (int b = 0; b < degree && keeps; ++b) {
            keeps = orbitals.color(img[a], img[b]) == orbitals.color(a, b);
          }
        }
        if (keeps) {
          ++literal_count;
          if (!closure2.contains(Perm(img))) {
            fail("literal definition", "pairwise-compatible permutation missing from the 2-closure");
          }
        }
      } while (std::next_permutation(img.begin(), img.end()));
      if (literal_count != closure2.order()) {
        fail("literal definition", "2-closure order " + std::to_string(closure2.order()) +
                                       " differs from literal count " +
                                       std::to_string(literal_count));
      }
    }
  }
  return failures;
}

}  // namespace cayleyci
