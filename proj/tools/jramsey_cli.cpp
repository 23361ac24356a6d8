// jramsey: batch front end for the extractors, the lower-bound checks and the
// small-order Ramsey oracle.
//
// Exit codes: 0 ok, 1 a check ran and failed, 2 usage or precondition,
// 3 maximality violation, 4 budget exhausted, 5 value not reached below cap.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jramsey/errors.hpp"
#include "jramsey/report.hpp"
#include "jramsey/suite.hpp"

using namespace jramsey;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kMaximality = 3, kBudget = 4, kCap = 5 };

struct Output {
  std::string path;
  std::ostringstream buf;

  void flush() {
    if (path.empty() || path == "-") {
      std::cout << buf.str();
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open output file " + path);
    out << buf.str();
  }
};

std::vector<Graph> read_graphs(const std::string& input, const std::string& inline_g6) {
  std::vector<Graph> out;
  if (!inline_g6.empty()) {
    out.push_back(from_graph6(inline_g6));
    return out;
  }
  if (input.empty()) throw InvalidArgument("no input graph: give --input FILE, --input - or --g6 STRING");
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) throw InvalidArgument("cannot open input file " + input);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  if (out.empty()) throw InvalidArgument("input contains no graph6 lines");
  return out;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "order " << g.order() << ", " << g.edge_count() << " edges\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

std::string human(const DichotomyWitness& w) {
  std::ostringstream os;
  os << "case " << w.trace.case_id << (w.trace.forced ? " (forced)" : "") << "\n";
  if (const auto* p = std::get_if<PathsInF>(&w.outcome)) {
    os << p->paths.size() << " path(s) in F\n";
    for (const auto& path : p->paths) {
      for (std::size_t i = 0; i < path.vertices.size(); ++i) os << (i ? " " : "") << path.vertices[i];
      os << "\n";
    }
  } else {
    const auto& emb = std::get<JahangirInComplement>(w.outcome).embedding;
    os << to_string(emb.pattern) << " in the complement, map:";
    for (int v : emb.map) os << " " << v;
    os << "\n";
  }
  os << "verified " << (w.verified ? "yes" : "no") << "\n";
  return os.str();
}

TheoremCase theorem_case(int theorem, int n, int s, int m, int t) {
  switch (theorem) {
    case 1: return Thm1Case{n, s, m};
    case 2: return m % 2 == 0 ? TheoremCase{Thm2EvenMCase{n, s, m}} : TheoremCase{Thm2OddMCase{n, s, m}};
    case 3: return Thm3Case{t, n, s, m};
    default: throw InvalidArgument("theorem must be 1, 2 or 3");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path versus generalized Jahangir Ramsey toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format;
  std::uint64_t budget = kDefaultBudget;
  std::vector<std::pair<CLI::App*, std::string>> default_formats;
  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--out", out_path, "Write the report to FILE instead of standard output");
    sub->add_option("--format", format, "Output format (default " + default_format + ")")
        ->check(CLI::IsMember({"json", "graph6", "human"}));
    default_formats.emplace_back(sub, default_format);
  };

  // build
  std::string build_spec;
  auto* build_cmd = app.add_subcommand("build", "Print the graph6 line of a family member");
  build_cmd->add_option("spec", build_spec, "Pattern such as P23, C6, W6, J2,3, 2P23, K5, K3+K1")->required();
  add_common(build_cmd, "graph6");

  // witness
  int theorem = 1, n = 0, s = 0, m = 0, t = 1;
  std::string input, inline_g6;
  bool force = false;
  auto* witness_cmd = app.add_subcommand("witness", "Extract paths in F or a Jahangir graph in its complement");
  witness_cmd->add_option("--theorem", theorem, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  witness_cmd->add_option("-n", n, "Path order")->required();
  witness_cmd->add_option("-s", s, "Jahangir s")->required();
  witness_cmd->add_option("-m", m, "Jahangir m")->required();
  witness_cmd->add_option("-t", t, "Number of paths (theorem 3)");
  witness_cmd->add_option("--input", input, "File of graph6 lines, or - for standard input");
  witness_cmd->add_option("--g6", inline_g6, "Inline graph6 string");
  witness_cmd->add_option("--budget", budget, "Search budget in node expansions");
  witness_cmd->add_flag("--force", force, "Run outside the theorem's parameter range");
  add_common(witness_cmd, "json");

  // extremal
  auto* extremal_cmd = app.add_subcommand("extremal", "Build and verify a lower-bound graph");
  extremal_cmd->add_option("--theorem", theorem, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  extremal_cmd->add_option("-n", n, "Path order")->required();
  extremal_cmd->add_option("-s", s, "Jahangir s")->required();
  extremal_cmd->add_option("-m", m, "Jahangir m")->required();
  extremal_cmd->add_option("-t", t, "Number of paths (theorem 3)");
  extremal_cmd->add_option("--input", input, "Verify this graph instead of the built one");
  extremal_cmd->add_option("--g6", inline_g6, "Inline graph6 string to verify");
  add_common(extremal_cmd, "json");

  // ramsey
  std::string g_spec, h_spec;
  int cap = 8;
  bool verify_cert = false;
  auto* ramsey_cmd = app.add_subcommand("ramsey", "Exact R(G, H) by exhaustive enumeration");
  ramsey_cmd->add_option("G", g_spec, "Pattern looked for in F")->required();
  ramsey_cmd->add_option("H", h_spec, "Pattern looked for in the complement")->required();
  ramsey_cmd->add_option("--cap", cap, "Check orders below this value")->capture_default_str();
  ramsey_cmd->add_flag("--verify", verify_cert, "Re-verify the certificate before printing it");
  add_common(ramsey_cmd, "json");

  // certificate
  std::string cert_path;
  auto* cert_cmd = app.add_subcommand("check-certificate", "Re-verify a certificate JSON file");
  cert_cmd->add_option("file", cert_path, "Certificate file, or - for standard input")->required();

  // enumerate
  int enum_order = 0;
  bool allow_large = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "One graph6 line per isomorphism class");
  enum_cmd->add_option("order", enum_order, "Graph order")->required();
  enum_cmd->add_flag("--allow-large", allow_large, "Lift the order cap of " + std::to_string(kEnumerationCap));
  add_common(enum_cmd, "graph6");

  // suite
  std::string suite_name, traces_path;
  std::uint64_t seed = 0;
  int count = 100, jobs = 1;
  std::optional<int> suite_n, suite_t;
  auto* suite_cmd = app.add_subcommand("suite", "Run a seeded random extraction suite");
  suite_cmd->add_option("name", suite_name, "thm1-sXmY, thm2-sXmY, thm3-sXmY or thm3paths-sXmY")->required();
  suite_cmd->add_option("--seed", seed, "Generator seed")->required();
  suite_cmd->add_option("--count", count, "Number of cases")->capture_default_str()->check(CLI::NonNegativeNumber);
  suite_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  suite_cmd->add_option("-n", suite_n, "Override the path order");
  suite_cmd->add_option("-t", suite_t, "Override the number of paths");
  suite_cmd->add_option("--traces", traces_path, "Write one trace JSON line per case to FILE");
  suite_cmd->add_option("--budget", budget, "Search budget per case");
  add_common(suite_cmd, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (const auto& [sub, fallback] : default_formats) {
    if (*sub && format.empty()) format = fallback;
  }

  Output out{out_path, {}};
  int code = kOk;
  try {
    if (*build_cmd) {
      const Graph g = build(parse_pattern(build_spec));
      if (format == "graph6") {
        out.buf << to_graph6(g) << "\n";
      } else if (format == "human") {
        out.buf << describe(g);
      } else {
        Json j{{"spec", build_spec}, {"order", g.order()}, {"graph6", to_graph6(g)}};
        Json edges = Json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        j["edges"] = edges;
        out.buf << j.dump(2) << "\n";
      }
    } else if (*witness_cmd) {
      const auto graphs = read_graphs(input, inline_g6);
      const ExtractorOptions opts{budget, force};
      for (const auto& f : graphs) {
        DichotomyWitness w;
        int graph_code = kOk;
        try {
          switch (theorem) {
            case 1: w = extract_theorem1(f, n, s, m, opts); break;
            case 2: w = extract_theorem2(f, n, s, m, opts); break;
            default: w = extract_t_paths(f, t, n, s, m, opts); break;
          }
        } catch (const MaximalityViolation& e) {
          std::cerr << "maximality violation: " << e.what() << "\n";
          Json j = to_json(e.trace());
          j["error"] = e.what();
          out.buf << (graphs.size() == 1 ? j.dump(2) : j.dump()) << "\n";
          code = std::max(code, static_cast<int>(kMaximality));
          continue;
        } catch (const WheelNotFound& e) {
          std::cerr << "wheel not found: " << e.what() << "\n";
          code = std::max(code, static_cast<int>(e.exhausted() ? kBudget : kMaximality));
          continue;
        }
        if (!w.verified) graph_code = kFailed;
        code = std::max(code, graph_code);
        if (format == "human") {
          out.buf << human(w);
        } else if (format == "graph6") {
          out.buf << to_graph6(f) << "\n";
        } else {
          out.buf << (graphs.size() == 1 ? to_json(w).dump(2) : to_json(w).dump()) << "\n";
        }
      }
    } else if (*extremal_cmd) {
      const TheoremCase tc = theorem_case(theorem, n, s, m, t);
      validate(tc);
      const bool supplied = !input.empty() || !inline_g6.empty();
      const Graph g = supplied ? read_graphs(input, inline_g6).front() : extremal_graph(tc);
      const Verdict v = verify_extremal_graph(tc, g);
      if (format == "graph6") {
        out.buf << to_graph6(g) << "\n";
      } else if (format == "human") {
        out.buf << to_string(tc) << ": " << (v.ok ? "verified" : "FAILED: " + v.reason) << "\n";
      } else {
        Json j{{"case", to_string(tc)}, {"graph6", to_graph6(g)}, {"order", g.order()}, {"verified", v.ok}};
        if (!v.ok) j["reason"] = v.reason;
        out.buf << j.dump(2) << "\n";
      }
      if (!v.ok) code = kFailed;
    } else if (*ramsey_cmd) {
      const auto result = ramsey_number(parse_pattern(g_spec), parse_pattern(h_spec), cap);
      if (const auto* cert = std::get_if<RamseyCertificate>(&result)) {
        if (verify_cert) {
          if (auto v = verify_certificate(*cert); !v) throw std::logic_error("certificate failed re-verification: " + v.reason);
        }
        if (format == "human") {
          out.buf << "R(" << g_spec << ", " << h_spec << ") = " << cert->value << "\n";
        } else {
          out.buf << to_json(*cert).dump(2) << "\n";
        }
      } else {
        const auto& bound = std::get<RamseyBound>(result);
        if (format == "human") {
          out.buf << "R(" << g_spec << ", " << h_spec << ") >= " << bound.at_least << "\n";
        } else {
          out.buf << to_json(bound).dump(2) << "\n";
        }
        code = kCap;
      }
    } else if (*cert_cmd) {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (cert_path != "-") {
        file.open(cert_path);
        if (!file) throw InvalidArgument("cannot open certificate " + cert_path);
        in = &file;
      }
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(*in);
      } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("certificate is not JSON: ") + e.what());
      }
      const auto cert = certificate_from_json(j);
      const Verdict v = verify_certificate(cert);
      out.buf << (v.ok ? "certificate verified" : "certificate FAILED: " + v.reason) << "\n";
      if (!v.ok) code = kFailed;
    } else if (*enum_cmd) {
      const auto classes = enumerate_graphs(enum_order, allow_large);
      if (format == "human") {
        out.buf << classes.size() << " classes of order " << enum_order << "\n";
      } else {
        for (const auto& g : classes) out.buf << to_graph6(g) << "\n";
      }
    } else if (*suite_cmd) {
      const SuiteSpec spec = parse_suite(suite_name, suite_n, suite_t);
      const SuiteReport report = run_suite(spec, seed, count, jobs, budget);
      if (!traces_path.empty()) {
        std::ofstream traces(traces_path, std::ios::binary);
        if (!traces) throw InvalidArgument("cannot open trace file " + traces_path);
        for (const auto& c : report.cases) traces << c.trace << "\n";
      }
      if (format == "human") {
        out.buf << spec.name << ": " << report.passed() << "/" << report.cases.size() << " verified\n";
      } else {
        out.buf << summary_json(report) << "\n";
      }
      if (report.passed() != static_cast<int>(report.cases.size())) code = kFailed;
    }
    out.flush();
    return code;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
}
