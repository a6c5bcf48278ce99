// rdegree: R degrees, R indices and classical degree-based indices from the
// command line.
//
//   rdegree compute  <file> [--format F] [--indices LIST] [--json]
//   rdegree rdegrees <file> [--format F]
//   rdegree generate <family> <n> [--out PATH] [--format F]
//   rdegree verify   <family|all> [--n-range A..B] [--out PATH]
//   rdegree batch    <file.g6> [--out PATH] [--jobs K] [--indices LIST]
//
// Exit codes: 0 success, 1 a corrected closed form failed verification,
// 2 usage/parse/IO error, 3 input outside the index domain (disconnected or
// fewer than two vertices).

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdegree/batch.hpp"
#include "rdegree/error.hpp"
#include "rdegree/family.hpp"
#include "rdegree/format.hpp"
#include "rdegree/indices.hpp"
#include "rdegree/io.hpp"
#include "rdegree/verifier.hpp"

namespace {

using namespace rdegree;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Thrown by command bodies to leave with a specific status.
struct Exit {
  int code;
  std::string message;
};

enum class Format { EdgeList, Graph6 };

Format resolve_format(const std::string& flag, const std::string& path) {
  if (flag == "graph6") return Format::Graph6;
  if (flag == "edgelist") return Format::EdgeList;
  if (!flag.empty()) throw Exit{kExitUsage, "unknown format '" + flag + "'"};
  return path.ends_with(".g6") ? Format::Graph6 : Format::EdgeList;
}

// Graph plus the vertex labels to use in messages.
struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;
};

LoadedGraph load_graph(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw Exit{kExitUsage, "cannot open '" + path + "'"};
  try {
    if (format == Format::EdgeList) {
      auto parsed = parse_edge_list(in);
      return {std::move(parsed.graph), std::move(parsed.labels)};
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line == kGraph6Header) continue;
      LoadedGraph loaded{parse_graph6(line), {}};
      for (std::size_t v = 0; v < loaded.graph.order(); ++v) loaded.labels.push_back(v);
      return loaded;
    }
    throw Exit{kExitUsage, "'" + path + "' contains no graph"};
  } catch (const Error& e) {
    throw Exit{kExitUsage, "parse error in '" + path + "': " + e.what()};
  }
}

void require_domain(const LoadedGraph& g) {
  if (g.graph.order() < 2) {
    throw Exit{kExitDomain, "graph has " + std::to_string(g.graph.order()) +
                                " vertices; indices need at least 2"};
  }
  if (auto v = first_unreachable_vertex(g.graph)) {
    throw Exit{kExitDomain, "graph is disconnected: vertex " + std::to_string(g.labels[*v]) +
                                " is unreachable from vertex " + std::to_string(g.labels[0])};
  }
}

std::vector<IndexColumn> selection(const std::string& list) {
  try {
    return parse_index_selection(list);
  } catch (const Error& e) {
    throw Exit{kExitUsage, e.what()};
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw Exit{kExitUsage, "cannot write '" + path + "'"};
  return file;
}

int cmd_compute(const std::string& path, const std::string& format_flag,
                const std::string& indices, bool json) {
  const auto loaded = load_graph(path, resolve_format(format_flag, path));
  const auto columns = selection(indices);
  require_domain(loaded);
  const IndexReport report = full_report(loaded.graph);
  if (json) {
    nlohmann::ordered_json doc;
    doc["n"] = report.n;
    doc["m"] = report.m;
    for (IndexColumn c : columns) {
      const std::string name(column_name(c));
      switch (c) {
        case IndexColumn::R1:
        case IndexColumn::R2:
        case IndexColumn::R3: doc[name] = render_column(report, c); break;
        case IndexColumn::ABC: doc[name] = report.abc; break;
        case IndexColumn::GA: doc[name] = report.ga; break;
        case IndexColumn::H: doc[name] = report.h; break;
        case IndexColumn::Chi: doc[name] = report.chi; break;
        case IndexColumn::Zagreb1: doc[name] = report.zagreb1; break;
        case IndexColumn::Zagreb2: doc[name] = report.zagreb2; break;
        case IndexColumn::Randic: doc[name] = report.randic; break;
      }
    }
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "n=" << report.n << "\nm=" << report.m << '\n';
    for (IndexColumn c : columns) std::cout << column_name(c) << '=' << render_column(report, c) << '\n';
  }
  return kExitOk;
}

int cmd_rdegrees(const std::string& path, const std::string& format_flag) {
  const auto loaded = load_graph(path, resolve_format(format_flag, path));
  require_domain(loaded);
  const auto table = r_degree_table(loaded.graph);
  std::cout << "# id deg S M r\n";
  for (VertexId v = 0; v < table.size(); ++v) {
    const auto& row = table[v];
    std::cout << loaded.labels[v] << ' ' << loaded.graph.degree(v) << ' '
              << format_integer(row.sum) << ' ' << format_integer(row.mult) << ' '
              << format_integer(row.r) << '\n';
  }
  return kExitOk;
}

int cmd_generate(const std::string& family_name_arg, std::size_t n, const std::string& out_path,
                 const std::string& format_flag) {
  const auto family = parse_family(family_name_arg);
  if (!family) throw Exit{kExitUsage, "unknown family '" + family_name_arg + "'"};
  Graph g;
  try {
    g = generate_family({*family, n});
  } catch (const Error& e) {
    throw Exit{kExitUsage, e.what()};
  }
  const Format format = resolve_format(format_flag, out_path);
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  if (format == Format::Graph6) {
    try {
      out << write_graph6(g) << '\n';
    } catch (const Error& e) {
      throw Exit{kExitUsage, e.what()};
    }
  } else {
    write_edge_list(g, out);
  }
  return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto bad = Exit{kExitUsage, "malformed --n-range '" + text + "' (expected A..B)"};
  if (dots == std::string::npos) throw bad;
  auto number = [&](std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw bad;
    return value;
  };
  const std::size_t a = number(std::string_view(text).substr(0, dots));
  const std::size_t b = number(std::string_view(text).substr(dots + 2));
  if (a < 2 || a > b) throw Exit{kExitUsage, "--n-range needs 2 <= A <= B, got '" + text + "'"};
  if (b > 2000) throw Exit{kExitUsage, "--n-range upper bound is limited to 2000"};
  return {a, b};
}

int cmd_verify(const std::string& target, const std::string& range, const std::string& out_path) {
  const auto [first, last] = parse_range(range);
  DiscrepancyReport report;
  if (target == "all") {
    report = verify_all(first, last);
  } else if (auto family = parse_family(target)) {
    report = verify_family(*family, first, last);
  } else {
    throw Exit{kExitUsage, "unknown family '" + target + "'"};
  }
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  write_csv(report, out);
  write_summary(report, (&out == &std::cout) ? std::cerr : std::cout);
  return report.corrected_all_match() ? kExitOk : kExitVerifyFailed;
}

int cmd_batch(const std::string& path, const std::string& out_path, unsigned jobs,
              const std::string& indices) {
  const auto columns = selection(indices);
  std::ifstream in(path);
  if (!in) throw Exit{kExitUsage, "cannot open '" + path + "'"};
  const auto lines = read_graph6_corpus(in);
  const auto rows = run_batch(lines, jobs);
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  write_batch_csv(rows, columns, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"R degrees, R indices and degree-based topological indices"};
  app.require_subcommand(1);

  std::string path, format, indices = "all", out, family, range = "3..30";
  std::size_t order = 0;
  unsigned jobs = 1;
  bool json = false;

  auto* compute = app.add_subcommand("compute", "Compute indices of one graph");
  compute->add_option("path", path, "Input file")->required();
  compute->add_option("--format", format, "edgelist or graph6 (default: by extension)");
  compute->add_option("--indices", indices, "Comma list of indices, or 'all'");
  compute->add_flag("--json", json, "Emit JSON");

  auto* rdegrees = app.add_subcommand("rdegrees", "Dump deg, S_v, M_v and r(v) per vertex");
  rdegrees->add_option("path", path, "Input file")->required();
  rdegrees->add_option("--format", format, "edgelist or graph6 (default: by extension)");

  auto* generate = app.add_subcommand("generate", "Write a path, cycle, complete graph or star");
  generate->add_option("family", family, "path, cycle, complete or star")->required();
  generate->add_option("n", order, "Order")->required();
  generate->add_option("--out", out, "Output path (default: stdout)");
  generate->add_option("--format", format, "edgelist or graph6 (default: by extension)");

  auto* verify = app.add_subcommand("verify", "Check closed forms against direct computation");
  verify->add_option("family", family, "path, cycle, complete, star or all")->required();
  verify->add_option("--n-range", range, "Orders to check, A..B")->capture_default_str();
  verify->add_option("--out", out, "CSV output path (default: stdout)");

  auto* batch = app.add_subcommand("batch", "Compute indices for every line of a graph6 file");
  batch->add_option("path", path, "graph6 input, one graph per line")->required();
  batch->add_option("--out", out, "CSV output path (default: stdout)");
  batch->add_option("--jobs", jobs, "Worker threads (0: all cores)")->capture_default_str();
  batch->add_option("--indices", indices, "Comma list of indices, or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(path, format, indices, json);
    if (*rdegrees) return cmd_rdegrees(path, format);
    if (*generate) return cmd_generate(family, order, out, format);
    if (*verify) return cmd_verify(family, range, out);
    if (*batch) return cmd_batch(path, out, jobs, indices);
  } catch (const Exit& e) {
    std::cerr << "rdegree: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "rdegree: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
