#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayleyci/aut_search.hpp"
#include "cayleyci/closure_ci.hpp"
#include "cayleyci/digraph.hpp"
#include "cayleyci/finite_group.hpp"
#include "cayleyci/paper_suite.hpp"
#include "cayleyci/perm.hpp"
#include "cayleyci/perm_group.hpp"

// Exit codes: 0 success/pass, 1 check failure, 2 usage error, 3 the
// computation was skipped or capped.
namespace {

using cayleyci::Perm;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSkipped = 3;

// Largest degree the automorphism search accepts.
constexpr int kAutDegreeBound = 64;
// Practical bound for commands that only build structures.
constexpr int kStructureBound = 4096;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_cap() {
  const char* text = std::getenv("CAYLEY_CI_CAP");
  if (text == nullptr || *text == '\0') return cayleyci::kDefaultAutCap;
  char* end = nullptr;
  unsigned long long value = std::strtoull(text, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) {
    throw UsageError("CAYLEY_CI_CAP must be a positive integer");
  }
  return value;
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    std::size_t first = current.find_first_not_of(" \t");
    if (first == std::string::npos) {
      current.clear();
      return;
    }
    std::size_t last = current.find_last_not_of(" \t");
    parts.push_back(current.substr(first, last - first + 1));
    current.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      flush();
    } else {
      current += ch;
    }
  }
  flush();
  return parts;
}

std::vector<Perm> parse_gens(const std::string& text, int degree) {
  std::vector<Perm> gens;
  for (const std::string& token : split_top_level(text)) {
    gens.push_back(Perm::from_cycles(token, degree));
  }
  return gens;
}

std::vector<int> parse_conn(const cayleyci::FiniteGroup& g, const std::string& text) {
  std::vector<int> conn;
  for (const std::string& token : split_top_level(text)) {
    conn.push_back(g.index_of(token));
  }
  return conn;
}

std::string conn_string(const cayleyci::FiniteGroup& g, std::vector<int> conn) {
  std::sort(conn.begin(), conn.end());
  conn.erase(std::unique(conn.begin(), conn.end()), conn.end());
  std::string out;
  for (std::size_t i = 0; i < conn.size(); ++i) {
    if (i) out += ',';
    out += g.names[conn[i]];
  }
  return out;
}

ordered_json perm_json(const Perm& p) { return ordered_json(p.images()); }

ordered_json perm_list_json(const std::vector<Perm>& perms) {
  ordered_json arr = ordered_json::array();
  for (const Perm& p : perms) arr.push_back(perm_json(p));
  return arr;
}

cayleyci::FiniteGroup group_for(const std::string& spec_text, int degree_bound) {
  cayleyci::GroupSpec spec = cayleyci::GroupSpec::parse(spec_text);
  if (spec.order() > static_cast<std::uint64_t>(degree_bound)) {
    throw UsageError("group order " + std::to_string(spec.order()) + " exceeds the bound " +
                     std::to_string(degree_bound) + " for this command");
  }
  return cayleyci::build_group(spec);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file " + out_path);
  out << text;
}

int cmd_verify_paper(bool json) {
  std::vector<cayleyci::LemmaCheck> checks = cayleyci::run_all();
  bool all = true;
  for (const cayleyci::LemmaCheck& c : checks) all = all && c.passed;
  std::cout << (json ? cayleyci::report_json(checks) : cayleyci::report_text(checks));
  return all ? kExitOk : kExitFail;
}

int cmd_aut(const std::string& file, std::uint64_t cap, bool json) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw UsageError("cannot open graph file " + file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  cayleyci::ColoredDigraph graph = cayleyci::graph_from_json(buffer.str());
  cayleyci::AutResult aut = cayleyci::automorphism_group(graph, cap);
  if (json) {
    ordered_json j;
    j["order"] = aut.order;
    j["capped"] = aut.capped;
    j["generators"] = perm_list_json(aut.generators);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order " << aut.order << "\n";
    std::cout << "capped " << (aut.capped ? "true" : "false") << "\n";
    std::cout << "generators:\n";
    for (const Perm& p : aut.generators) std::cout << "  " << p.cycle_string() << "\n";
  }
  return aut.capped ? kExitSkipped : kExitOk;
}

int cmd_cayley(const std::string& group, const std::string& conn_text, bool edges,
               const std::string& out_path) {
  cayleyci::FiniteGroup g = group_for(group, kStructureBound);
  std::vector<int> conn = parse_conn(g, conn_text);
  cayleyci::ColoredDigraph graph = cayleyci::cayley(g, conn);
  emit(edges ? cayleyci::graph_to_edge_json(graph) : cayleyci::graph_to_json(graph), out_path);
  return kExitOk;
}

int cmd_ci_check(const std::string& group, const std::string& conn_text, std::uint64_t cap,
                 bool json) {
  cayleyci::FiniteGroup g = group_for(group, kAutDegreeBound);
  std::vector<int> conn = parse_conn(g, conn_text);
  cayleyci::CiVerdict verdict = cayleyci::is_ci_graph_babai(g, conn, cap);

  std::string verdict_word = verdict.skipped ? "skipped" : (verdict.is_ci ? "ci" : "not-ci");
  if (json) {
    ordered_json j;
    j["group"] = group;
    j["conn"] = conn_string(g, conn);
    j["verdict"] = verdict_word;
    j["regular_subgroups"] = verdict.regular_subgroups_found;
    if (verdict.skipped) j["reason"] = *verdict.skipped;
    if (verdict.failing_subgroup) {
      j["failing_subgroup"] = perm_list_json(verdict.failing_subgroup->generators());
    }
    ordered_json witnesses = ordered_json::array();
    for (const auto& [sub, alpha] : verdict.conjugator_witnesses) {
      witnesses.push_back(
          {{"subgroup", perm_list_json(sub.generators())}, {"conjugator", perm_json(alpha)}});
    }
    j["witnesses"] = witnesses;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group " << group << "\n";
    std::cout << "conn {" << conn_string(g, conn) << "}\n";
    std::cout << "verdict " << verdict_word << "\n";
    if (verdict.skipped) std::cout << "reason " << *verdict.skipped << "\n";
    if (!verdict.skipped) {
      std::cout << "regular subgroups " << verdict.regular_subgroups_found << "\n";
    }
    int index = 0;
    for (const auto& [sub, alpha] : verdict.conjugator_witnesses) {
      std::cout << "subgroup " << ++index << " generated by";
      for (const Perm& p : sub.generators()) std::cout << " " << p.cycle_string();
      std::cout << ", conjugator " << alpha.cycle_string() << "\n";
    }
    if (verdict.failing_subgroup) {
      std::cout << "failing subgroup generated by";
      for (const Perm& p : verdict.failing_subgroup->generators()) {
        std::cout << " " << p.cycle_string();
      }
      std::cout << "\n";
    }
  }
  if (verdict.skipped) return kExitSkipped;
  return verdict.is_ci ? kExitOk : kExitFail;
}

int cmd_dci_scan(const std::string& group, bool all, int sample, std::uint64_t seed,
                 std::uint64_t cap, bool json) {
  if (all == (sample >= 0)) {
    throw UsageError("pass exactly one of --all and --sample");
  }
  cayleyci::GroupSpec spec = cayleyci::GroupSpec::parse(group);
  if (spec.order() > kAutDegreeBound) {
    throw UsageError("group order " + std::to_string(spec.order()) +
                     " exceeds the automorphism search bound of 64");
  }
  if (all && spec.order() > 8) {
    throw UsageError("--all scans every connection set and is limited to groups of order 8");
  }
  cayleyci::FiniteGroup g = cayleyci::build_group(spec);
  cayleyci::ScanReport report = all ? cayleyci::dci_scan_exhaustive(g, spec, cap)
                                    : cayleyci::dci_scan_sample(g, spec, sample, seed, cap);
  std::cout << (json ? report.to_json() : report.to_text());
  return report.failures.empty() ? kExitOk : kExitFail;
}

int cmd_two_closure(int degree, const std::string& gens_text, std::uint64_t cap, bool json) {
  if (degree < 1 || degree > kAutDegreeBound) {
    throw UsageError("degree must be between 1 and 64");
  }
  std::vector<Perm> gens = parse_gens(gens_text, degree);
  cayleyci::PermGroup h(degree, gens);
  std::optional<cayleyci::PermGroup> result;
  try {
    result = cayleyci::two_closure(h, cap);
  } catch (const cayleyci::CapExceededError& e) {
    std::cout << "skipped: " << e.what() << "\n";
    return kExitSkipped;
  }
  const cayleyci::PermGroup& closure2 = *result;
  bool list_elements = closure2.order() <= 1000;
  if (json) {
    ordered_json j;
    j["degree"] = degree;
    j["order"] = closure2.order();
    j["generators"] = perm_list_json(closure2.generators());
    if (list_elements) j["elements"] = perm_list_json(closure2.elements());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order " << closure2.order() << "\n";
    if (list_elements) {
      std::cout << "elements:\n";
      for (const Perm& p : closure2.elements()) std::cout << "  " << p.cycle_string() << "\n";
    } else {
      std::cout << "generators:\n";
      for (const Perm& p : closure2.generators()) std::cout << "  " << p.cycle_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_blocks(const std::string& group, int degree, const std::string& gens_text, int a, int b,
               bool json) {
  cayleyci::PermGroup h(1, {});
  if (!group.empty()) {
    if (degree > 0 || !gens_text.empty()) {
      throw UsageError("pass either --group or --degree/--gens, not both");
    }
    h = cayleyci::right_regular_rep(group_for(group, kStructureBound));
  } else {
    if (degree < 1) throw UsageError("pass --group, or --degree with --gens");
    h = cayleyci::PermGroup(degree, parse_gens(gens_text, degree));
  }
  if (a < 0 || b < 0 || a >= h.degree() || b >= h.degree()) {
    throw UsageError("seed points must be inside 0..degree-1");
  }
  cayleyci::BlockSystem blocks = cayleyci::minimal_block_system(h, a, b);
  if (json) {
    ordered_json j;
    j["degree"] = h.degree();
    j["count"] = blocks.block_count();
    j["blocks"] = ordered_json(blocks.blocks);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "blocks " << blocks.block_count() << "\n";
    for (const std::vector<int>& block : blocks.blocks) {
      std::cout << " ";
      for (int x : block) std::cout << " " << x + 1;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graph isomorphism toolkit"};
  app.require_subcommand(1);

  bool vp_json = false;
  CLI::App* verify = app.add_subcommand("verify-paper", "run the full lemma check suite");
  verify->add_flag("--json", vp_json, "emit the JSON report");

  std::string aut_file;
  std::uint64_t aut_cap = 0;
  bool aut_json = false;
  CLI::App* aut = app.add_subcommand("aut", "automorphism group of a graph JSON file");
  aut->add_option("--file", aut_file, "graph in matrix or edge-list JSON")->required();
  aut->add_option("--cap", aut_cap, "override the enumeration cap");
  aut->add_flag("--json", aut_json, "emit JSON");

  std::string cay_group, cay_conn, cay_out;
  bool cay_edges = false;
  CLI::App* cay = app.add_subcommand("cayley", "build a Cayley digraph");
  cay->add_option("--group", cay_group, "group spec, e.g. Q8, E8, Z5, Q8xZ5")->required();
  cay->add_option("--conn", cay_conn, "comma-separated connection set tokens");
  cay->add_option("--out", cay_out, "output file (default stdout)");
  cay->add_flag("--edges", cay_edges, "emit edge-list JSON instead of the matrix form");

  std::string ci_group, ci_conn;
  std::uint64_t ci_cap = 0;
  bool ci_json = false;
  CLI::App* ci = app.add_subcommand("ci-check", "decide whether one Cayley graph is CI");
  ci->add_option("--group", ci_group, "group spec")->required();
  ci->add_option("--conn", ci_conn, "comma-separated connection set tokens");
  ci->add_option("--cap", ci_cap, "override the enumeration cap");
  ci->add_flag("--json", ci_json, "emit JSON");

  std::string scan_group;
  bool scan_all = false;
  int scan_sample = -1;
  std::uint64_t scan_seed = 0, scan_cap = 0;
  bool scan_json = false;
  CLI::App* scan = app.add_subcommand("dci-scan", "CI-check many connection sets");
  scan->add_option("--group", scan_group, "group spec")->required();
  scan->add_flag("--all", scan_all, "every connection set (order 8 groups only)");
  scan->add_option("--sample", scan_sample, "number of seeded random connection sets");
  scan->add_option("--seed", scan_seed, "sample seed (default 0)");
  scan->add_option("--cap", scan_cap, "override the enumeration cap");
  scan->add_flag("--json", scan_json, "emit JSON");

  int tc_degree = 0;
  std::string tc_gens;
  std::uint64_t tc_cap = 0;
  bool tc_json = false;
  CLI::App* tc = app.add_subcommand("two-closure", "2-closure of a generated group");
  tc->add_option("--degree", tc_degree, "number of points")->required();
  tc->add_option("--gens", tc_gens, "comma-separated cycle-notation generators");
  tc->add_option("--cap", tc_cap, "override the enumeration cap");
  tc->add_flag("--json", tc_json, "emit JSON");

  std::string bl_group, bl_gens;
  int bl_degree = 0, bl_a = 0, bl_b = 1;
  bool bl_json = false;
  CLI::App* bl = app.add_subcommand("blocks", "minimal block system through two points");
  bl->add_option("--group", bl_group, "group spec (uses the right regular action)");
  bl->add_option("--degree", bl_degree, "number of points (with --gens)");
  bl->add_option("--gens", bl_gens, "comma-separated cycle-notation generators");
  bl->add_option("--a", bl_a, "first seed point, 0-based (default 0)");
  bl->add_option("--b", bl_b, "second seed point, 0-based (default 1)");
  bl->add_flag("--json", bl_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::uint64_t cap = default_cap();
    if (verify->parsed()) return cmd_verify_paper(vp_json);
    if (aut->parsed()) return cmd_aut(aut_file, aut_cap ? aut_cap : cap, aut_json);
    if (cay->parsed()) return cmd_cayley(cay_group, cay_conn, cay_edges, cay_out);
    if (ci->parsed()) return cmd_ci_check(ci_group, ci_conn, ci_cap ? ci_cap : cap, ci_json);
    if (scan->parsed()) {
      return cmd_dci_scan(scan_group, scan_all, scan_sample, scan_seed,
                          scan_cap ? scan_cap : cap, scan_json);
    }
    if (tc->parsed()) return cmd_two_closure(tc_degree, tc_gens, tc_cap ? tc_cap : cap, tc_json);
    if (bl->parsed()) return cmd_blocks(bl_group, bl_degree, bl_gens, bl_a, bl_b, bl_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cayleyci::CapExceededError& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return kExitSkipped;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
