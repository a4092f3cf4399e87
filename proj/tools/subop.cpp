#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "subop/export.hpp"
#include "subop/morphisms.hpp"
#include "subop/oracle.hpp"
#include "subop/parser.hpp"
#include "subop/relation.hpp"

namespace {

// Thrown after diagnostics have been printed; carries the process exit code.
struct CommandFailure {
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw CommandFailure{2};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

subop::ClassTable load_table(const std::string& path) {
  std::string source = read_file(path);
  try {
    return subop::parse_program(source);
  } catch (const subop::ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: "
              << e.message() << "\n";
    throw CommandFailure{2};
  }
}

subop::GroundType load_type(const std::string& expr, const subop::ClassTable& table) {
  try {
    return subop::parse_type(expr, table);
  } catch (const subop::ParseError& e) {
    std::cerr << "error in type '" << expr << "': " << e.message() << "\n";
    throw CommandFailure{2};
  } catch (const subop::TypeError& e) {
    std::cerr << "error in type '" << expr << "': " << e.what() << "\n";
    throw CommandFailure{2};
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw CommandFailure{2};
  }
  out << text;
}

int run_build(const std::string& input, int n, const std::string& format,
              const std::string& output, std::size_t budget) {
  subop::ClassTable table = load_table(input);
  subop::SubtypingRelation r = subop::iterate(table, n, budget);
  write_output(format == "json" ? subop::to_json(r) : subop::to_dot(r), output);
  return 0;
}

int run_check(const std::string& input, const std::string& left,
              const std::string& right) {
  subop::ClassTable table = load_table(input);
  subop::GroundType sub = load_type(left, table);
  subop::GroundType sup = load_type(right, table);
  bool verdict = subop::oracle_subtype(table, sub, sup);
  std::cout << (verdict ? "true" : "false") << "\n";
  return verdict ? 0 : 1;
}

int run_stats(const std::string& input, int n, bool as_json) {
  subop::ClassTable table = load_table(input);

  struct Row {
    int k;
    std::size_t types;
    std::size_t fresh;
    std::size_t edges;
  };
  std::vector<Row> rows;
  std::size_t previous = 0;
  for (int k = 0; k <= n; ++k) {
    subop::SubtypingRelation r = subop::iterate(table, k);
    rows.push_back({k, r.size(), r.size() - previous, r.hasse().size()});
    previous = r.size();
  }

  if (as_json) {
    std::cout << "{\"iterations\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0) std::cout << ",";
      std::cout << "{\"k\":" << rows[i].k << ",\"types\":" << rows[i].types
                << ",\"new\":" << rows[i].fresh
                << ",\"hasse_edges\":" << rows[i].edges << "}";
    }
    std::cout << "]}\n";
  } else {
    std::cout << std::setw(4) << "k" << std::setw(8) << "types" << std::setw(8)
              << "new" << std::setw(14) << "hasse_edges" << "\n";
    for (const Row& row : rows)
      std::cout << std::setw(4) << row.k << std::setw(8) << row.types
                << std::setw(8) << row.fresh << std::setw(14) << row.edges << "\n";
  }
  return 0;
}

int run_verify(const std::string& input, int n) {
  subop::ClassTable table = load_table(input);
  for (int k = 0; k <= n; ++k) {
    subop::SubtypingRelation constructed = subop::iterate(table, k);
    subop::SubtypingRelation reference = subop::oracle_relation(table, k);
    auto diff = subop::first_difference(constructed, reference);
    if (diff) {
      using Kind = subop::RelationDifference::Kind;
      std::cout << "mismatch at iteration " << k << ": ";
      switch (diff->kind) {
        case Kind::OnlyInFirst:
          std::cout << "type " << subop::display(diff->sub)
                    << " only in the constructed relation\n";
          break;
        case Kind::OnlyInSecond:
          std::cout << "type " << subop::display(diff->sub)
                    << " only in the oracle relation\n";
          break;
        case Kind::EdgeDisagreement:
          std::cout << subop::display(diff->sub) << " <= " << subop::display(diff->sup)
                    << ": constructed=" << (diff->edge_in_first ? "true" : "false")
                    << " oracle=" << (diff->edge_in_first ? "false" : "true") << "\n";
          break;
      }
      return 1;
    }
    std::cout << "iteration " << k << ": ok (" << constructed.size() << " types, "
              << constructed.hasse().size() << " edges)\n";
  }
  return 0;
}

int run_demo(int selector, const std::string& outdir) {
  const std::string source = selector == 1
                                 ? "class C<T> extends Object {}\n"
                                 : "class C<T> extends Object {}\n"
                                   "class D<T> extends Object {}\n";
  const int n = selector == 1 ? 2 : 1;

  subop::ClassTable table = subop::parse_program(source);
  subop::SubtypingRelation r = subop::iterate(table, n);
  std::string dot = subop::to_dot(r);
  std::string json = subop::to_json(r);

  if (outdir.empty()) {
    std::cout << dot << json;
    return 0;
  }
  std::filesystem::create_directories(outdir);
  std::string stem = "demo" + std::to_string(selector);
  write_output(dot, (std::filesystem::path(outdir) / (stem + ".dot")).string());
  write_output(json, (std::filesystem::path(outdir) / (stem + ".json")).string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subop - iterative construction and checking of a wildcard subtyping relation"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "dot";
  std::string output;
  std::string left, right;
  std::string outdir;
  int n = 1;
  int selector = 0;
  std::size_t budget = subop::kDefaultCarrierBudget;
  bool stats_json = false;

  CLI::App* build = app.add_subcommand("build", "Construct the relation and export it");
  build->add_option("-i,--input", input, "Class declaration file")->required();
  build->add_option("-n,--iterations", n, "Construction iterations")
      ->check(CLI::NonNegativeNumber);
  build->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"dot", "json"}));
  build->add_option("-o,--output", output, "Output path (default: stdout)");
  build->add_option("--budget", budget, "Carrier budget (number of types)");

  CLI::App* check = app.add_subcommand("check", "Decide subtyping between two types");
  check->add_option("-i,--input", input, "Class declaration file")->required();
  check->add_option("left", left, "Candidate subtype")->required();
  check->add_option("right", right, "Candidate supertype")->required();

  CLI::App* stats = app.add_subcommand("stats", "Per-iteration carrier and edge counts");
  stats->add_option("-i,--input", input, "Class declaration file")->required();
  stats->add_option("-n,--iterations", n, "Construction iterations")
      ->check(CLI::NonNegativeNumber);
  stats->add_flag("--json", stats_json, "Machine-readable output");

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the construction against the containment oracle");
  verify->add_option("-i,--input", input, "Class declaration file")->required();
  verify->add_option("-n,--iterations", n, "Construction iterations")
      ->check(CLI::NonNegativeNumber);

  CLI::App* demo = app.add_subcommand("demo", "Run a built-in example");
  demo->add_option("selector", selector, "Example number (1 or 2)")
      ->required()
      ->check(CLI::Range(1, 2));
  demo->add_option("-o,--outdir", outdir, "Directory for demoN.dot / demoN.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return run_build(input, n, format, output, budget);
    if (check->parsed()) return run_check(input, left, right);
    if (stats->parsed()) return run_stats(input, n, stats_json);
    if (verify->parsed()) return run_verify(input, n);
    if (demo->parsed()) return run_demo(selector, outdir);
  } catch (const CommandFailure& f) {
    return f.code;
  } catch (const subop::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const subop::ParseError& e) {
    std::cerr << input << ":" << e.line() << ":" << e.column() << ": error: "
              << e.message() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
