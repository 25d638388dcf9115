// reslab: command-line front end for the residue / Maxine / MDI library.
//
// Exit codes: 0 success, 1 counterexample found or property violated,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reslab/reslab.hpp"

namespace {

using namespace reslab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string first_record(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line != kGraph6Header) return line;
  }
  throw UsageError("no graph6 record found");
}

/// graph6 text, "@path" for the first record of a file, or "-" for stdin.
Graph read_graph(const std::string& arg) {
  if (arg == "-") return from_graph6(first_record(std::cin));
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    return from_graph6(first_record(in));
  }
  return from_graph6(arg);
}

int enumeration_cap() {
  const char* env = std::getenv("RESLAB_MAX_N");
  if (env == nullptr || *env == '\0') return 7;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0) throw UsageError("RESLAB_MAX_N must be a non-negative integer");
  return static_cast<int>(std::min<long>(value, kEnumerationCap));
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join(const std::vector<Vertex>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

// --- subcommands ------------------------------------------------------------

int cmd_residue(const std::string& graph_arg, const std::string& degseq) {
  if (graph_arg.empty() == degseq.empty()) {
    throw UsageError("residue takes exactly one of <graph6> or --degseq");
  }
  if (!degseq.empty()) {
    const DegreeSequence d = DegreeSequence::parse(degseq);
    if (!is_graphic(d)) throw UsageError(d.to_string() + " is not graphic");
    std::cout << "R = " << residue_seq(d) << "\n";
  } else {
    const Graph g = read_graph(graph_arg);
    std::cout << "R = " << residue(g) << "\n";
  }
  return kExitOk;
}

int cmd_hh_trace(const std::string& degseq) {
  DegreeSequence current = DegreeSequence::parse(degseq);
  std::cout << "step 0: " << current.to_string() << "\n";
  for (int step = 1; !current.all_zero(); ++step) {
    try {
      current = hh_step(current);
    } catch (const NonGraphic& e) {
      std::cout << "not graphic: " << e.what() << "\n";
      return kExitViolation;
    }
    std::cout << "step " << step << ": " << current.to_string() << "\n";
  }
  std::cout << "terminal zeros = " << current.zero_count() << "\n";
  return kExitOk;
}

int cmd_maxine(const std::string& graph_arg, bool all, const std::string& policy,
               std::uint64_t seed) {
  const Graph g = read_graph(graph_arg);
  if (all) {
    const MaxineSummary s = maxine_all(g);
    std::cout << "achievable M: {" << join(s.achievable_sizes) << "}\n";
    std::cout << "min M = " << s.min_size << ", max M = " << s.max_size << "\n";
    return kExitOk;
  }
  TieBreakPolicy p;
  p.seed = seed;
  if (policy == "low") {
    p.rule = TieBreak::lowest;
  } else if (policy == "high") {
    p.rule = TieBreak::highest;
  } else {
    p.rule = TieBreak::random;
  }
  const MaxineOutcome out = maxine_run(g, p);
  std::cout << "deleted: [" << join(out.deletions, ",") << "]\n";
  std::cout << "survivors: " << to_string(out.survivors) << "\n";
  std::cout << "M = " << out.size << "\n";
  return kExitOk;
}

int cmd_alpha(const std::string& graph_arg, bool enumerate) {
  const Graph g = read_graph(graph_arg);
  if (!enumerate) {
    std::cout << "alpha = " << alpha(g) << "\n";
    return kExitOk;
  }
  const MISReport r = all_mis(g);
  std::cout << "alpha = " << r.alpha << "\n";
  std::cout << "maximum independent sets (" << r.all_mis.size() << "):\n";
  for (VertexSet s : r.all_mis) std::cout << "  " << to_string(s) << "\n";
  return kExitOk;
}

int cmd_mdi(const std::string& graph_arg) {
  const Graph g = read_graph(graph_arg);
  std::cout << "MDI vertices: " << to_string(mdi_vertices(g).mdi_vertices) << "\n";
  return kExitOk;
}

int cmd_detect(const std::string& graph_arg, const std::string& pattern_list) {
  const Graph g = read_graph(graph_arg);
  std::stringstream list(pattern_list);
  std::string item;
  auto report = [](const std::string& label, const std::optional<Embedding>& e) {
    std::cout << label << ": ";
    if (e) {
      std::cout << "found [" << join(e->map, ",") << "]\n";
    } else {
      std::cout << "none\n";
    }
  };
  while (std::getline(list, item, ',')) {
    if (item == "c4") {
      report("c4", find_induced(g, cycle(4)));
    } else if (item == "p5") {
      report("p5", find_induced(g, path(5)));
    } else if (item == "p5star") {
      std::optional<Embedding> hit;
      if (g.order() >= 5) {
        for (Vertex c : mdi_vertices(g).mdi_vertices) {
          if ((hit = find_induced(g, path(5), {{2, c}}))) break;
        }
      }
      report("p5star", hit);
    } else if (item == "f" || item.starts_with("f:")) {
      int max_n = g.order();
      if (item.size() > 2) {
        try {
          max_n = std::stoi(item.substr(2));
        } catch (const std::exception&) {
          throw UsageError("bad pattern size in '" + item + "'");
        }
      }
      std::cout << "f: ";
      bool found = false;
      if (max_n >= 6) {
        for (const FMember& m : f_catalog(std::min(max_n, g.order()), true)) {
          if (auto e = find_induced(g, m.graph)) {
            std::cout << m.name() << " " << m.role_string(&e->map) << "\n";
            found = true;
            break;
          }
        }
      }
      if (!found) std::cout << "none\n";
    } else {
      throw UsageError("unknown pattern '" + item + "' (expected c4, p5, p5star, f[:maxn])");
    }
  }
  return kExitOk;
}

Attachment parse_variant(FKind kind, const std::string& variant) {
  if (kind == FKind::A) {
    if (!variant.empty()) throw UsageError("case A takes no --variant");
    return Attachment::none;
  }
  if (kind == FKind::B) {
    if (!variant.empty() && variant != "u") throw UsageError("case B side is fixed to u");
    return Attachment::u_side;
  }
  if (variant == "same") return Attachment::same_side;
  if (variant == "opposite" || variant.empty()) return Attachment::opposite_side;
  throw UsageError("--variant must be same or opposite");
}

int cmd_gen_f(const std::string& kind_arg, int n, const std::string& variant, bool raw,
              int catalog) {
  if (catalog > 0) {
    for (const FMember& m : f_catalog(catalog, !raw)) {
      std::cout << to_graph6(m.graph) << "\n";
    }
    return kExitOk;
  }
  if (kind_arg.empty() || n <= 0) throw UsageError("gen-f needs --case and --n (or --catalog)");
  const FKind kind = kind_arg == "A" ? FKind::A : kind_arg == "B" ? FKind::B : FKind::C;
  const FMember m = gen_f_member(kind, n, parse_variant(kind, variant));
  if (!m.mdi_verified && !raw) {
    std::cout << m.name() << " is not MDI (v misses a maximum independent set or maximum degree); "
              << "pass --raw to emit it anyway\n";
    return kExitViolation;
  }
  std::cout << to_graph6(m.graph) << " " << m.role_string() << "\n";
  std::cout << "member " << m.name() << ", " << m.graph.order() << " vertices, mdi_verified="
            << (m.mdi_verified ? "true" : "false") << "\n";
  return kExitOk;
}

std::vector<CheckId> parse_checks(const std::string& arg) {
  std::vector<CheckId> out;
  if (arg == "all") return {kAllChecks.begin(), kAllChecks.end()};
  std::stringstream list(arg);
  std::string item;
  while (std::getline(list, item, ',')) {
    const auto id = parse_check(item);
    if (!id) throw UsageError("unknown check '" + item + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw UsageError("--check is empty");
  return out;
}

int cmd_verify(const std::string& check_arg, int enum_n, const std::string& corpus, int shards,
               const std::string& json_out, long stop_after) {
  if (check_arg == "list") {
    for (CheckId id : kAllChecks) std::cout << check_name(id) << "\n";
    return kExitOk;
  }
  const std::vector<CheckId> checks = parse_checks(check_arg);
  if ((enum_n >= 0) == !corpus.empty()) {
    throw UsageError("verify takes exactly one of --enum-n or --corpus");
  }
  Source source = CorpusSource{corpus};
  if (enum_n >= 0) {
    const int cap = enumeration_cap();
    if (enum_n > cap) {
      throw UsageError("--enum-n " + std::to_string(enum_n) + " exceeds the cap of " +
                       std::to_string(cap) + " (raise with RESLAB_MAX_N, at most 8)");
    }
    if (enum_n == 8) {
      std::cerr << "warning: n = 8 scans 268,435,456 labeled graphs\n";
    }
    source = EnumerationSource{enum_n};
  }

  SuiteOptions options;
  options.shards = shards > 0 ? shards : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (stop_after >= 0) options.stop_after = static_cast<std::size_t>(stop_after);
  SuiteDiagnostics diag;
  const std::vector<VerifyReport> reports = run_suite(source, checks, options, &diag);

  for (const std::string& e : diag.parse_errors) std::cerr << "skipped " << e << "\n";
  for (const std::string& e : diag.oversized) std::cerr << "skipped " << e << "\n";

  std::cout << std::left << std::setw(32) << "check" << std::setw(12) << "scanned"
            << std::setw(12) << "applicable" << std::setw(10) << "skipped"
            << "counterexamples\n";
  bool any_failure = false;
  for (const VerifyReport& r : reports) {
    std::cout << std::left << std::setw(32) << check_name(r.check) << std::setw(12) << r.scanned
              << std::setw(12) << r.applicable << std::setw(10) << r.skipped_records
              << r.counterexamples.size() << "\n";
    any_failure = any_failure || !r.counterexamples.empty();
  }
  std::cout << "source: " << reports.front().source << "\n";
  for (const VerifyReport& r : reports) {
    for (const std::string& g6 : r.counterexamples) {
      std::cout << "counterexample " << check_name(r.check) << " " << g6 << "\n";
    }
    std::cerr << check_name(r.check) << ": " << r.elapsed.count() << " ms\n";
  }

  if (!json_out.empty()) {
    nlohmann::ordered_json doc;
    if (reports.size() == 1) {
      doc = to_json(reports.front());
    } else {
      doc = nlohmann::ordered_json::array();
      for (const VerifyReport& r : reports) doc.push_back(to_json(r));
    }
    if (json_out == "-") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream out(json_out);
      if (!out) throw UsageError("cannot write " + json_out);
      out << doc.dump(2) << "\n";
    }
  }
  return any_failure ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Havel-Hakimi residue, Maxine heuristic and MDI structure toolkit"};
  app.set_version_flag("--version", std::string(reslab::kToolVersion));
  app.require_subcommand(1);

  std::string graph_arg;
  std::string degseq;

  auto* residue_cmd = app.add_subcommand("residue", "Havel-Hakimi residue of a graph or sequence");
  residue_cmd->add_option("graph", graph_arg, "graph6 string, @file or -");
  residue_cmd->add_option("--degseq", degseq, "degree sequence, e.g. 3,2,2,1");

  auto* trace_cmd = app.add_subcommand("hh-trace", "print every Havel-Hakimi step");
  trace_cmd->add_option("--degseq", degseq, "degree sequence")->required();

  bool all = false;
  std::string policy = "low";
  std::uint64_t seed = 0;
  auto* maxine_cmd = app.add_subcommand("maxine", "run the Maxine heuristic");
  maxine_cmd->add_option("graph", graph_arg, "graph6 string, @file or -")->required();
  auto* all_flag = maxine_cmd->add_flag("--all", all, "every achievable M over all tie-breaks");
  maxine_cmd->add_option("--policy", policy, "tie-break rule")
      ->check(CLI::IsMember({"low", "high", "random"}))
      ->excludes(all_flag);
  maxine_cmd->add_option("--seed", seed, "seed for --policy random");

  bool enumerate = false;
  auto* alpha_cmd = app.add_subcommand("alpha", "independence number");
  alpha_cmd->add_option("graph", graph_arg, "graph6 string, @file or -")->required();
  alpha_cmd->add_flag("--enumerate", enumerate, "list every maximum independent set");

  auto* mdi_cmd = app.add_subcommand("mdi", "vertices with MDI conditions");
  mdi_cmd->add_option("graph", graph_arg, "graph6 string, @file or -")->required();

  std::string patterns = "c4,p5,p5star,f";
  auto* detect_cmd = app.add_subcommand("detect", "search for induced patterns");
  detect_cmd->add_option("graph", graph_arg, "graph6 string, @file or -")->required();
  detect_cmd->add_option("--patterns", patterns, "comma list of c4, p5, p5star, f[:maxn]");

  std::string kind;
  int core_n = 0;
  std::string variant;
  bool raw = false;
  int catalog = 0;
  auto* genf_cmd = app.add_subcommand("gen-f", "build a structure-family member");
  genf_cmd->add_option("--case", kind, "A, B or C")->check(CLI::IsMember({"A", "B", "C"}));
  genf_cmd->add_option("--n", core_n, "core size (>= 3)");
  genf_cmd->add_option("--variant", variant, "case C: same or opposite");
  genf_cmd->add_flag("--raw", raw, "do not filter out members without MDI conditions");
  genf_cmd->add_option("--catalog", catalog, "emit every member up to this many vertices");

  std::string check_arg;
  int enum_n = -1;
  std::string corpus;
  int shards = 0;
  std::string json_out;
  long stop_after = -1;
  auto* verify_cmd = app.add_subcommand("verify", "scan graphs and evaluate checks");
  verify_cmd->add_option("--check", check_arg, "check id, comma list, all, or list")->required();
  verify_cmd->add_option("--enum-n", enum_n, "all labeled graphs on N vertices");
  verify_cmd->add_option("--corpus", corpus, "graph6 file, one record per line");
  verify_cmd->add_option("--shards", shards, "worker threads (default: hardware concurrency)");
  verify_cmd->add_option("--json", json_out, "write the report document here ('-' for stdout)");
  verify_cmd->add_option("--stop-after", stop_after, "hunt mode: stop after M counterexamples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*residue_cmd) return cmd_residue(graph_arg, degseq);
    if (*trace_cmd) return cmd_hh_trace(degseq);
    if (*maxine_cmd) return cmd_maxine(graph_arg, all, policy, seed);
    if (*alpha_cmd) return cmd_alpha(graph_arg, enumerate);
    if (*mdi_cmd) return cmd_mdi(graph_arg);
    if (*detect_cmd) return cmd_detect(graph_arg, patterns);
    if (*genf_cmd) return cmd_gen_f(kind, core_n, variant, raw, catalog);
    if (*verify_cmd) return cmd_verify(check_arg, enum_n, corpus, shards, json_out, stop_after);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const reslab::Graph6Error& e) {
    std::cerr << "error: graph6: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
