// Checks a recorded history file for linearizability.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cgraph/lincheck/checker.hpp"

int main(int argc, char** argv) {
  using namespace cgraph;
  CLI::App app{"Linearizability checker for recorded histories"};
  std::string path;
  std::string spec = "graph";
  lin::CheckOptions options;
  app.add_option("--history", path, "History file")->required();
  app.add_option("--spec", spec, "graph|acyclic|set")->capture_default_str();
  app.add_option("--budget", options.budget, "Maximum search states")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  OracleKind kind;
  if (spec == "graph") {
    kind = OracleKind::Graph;
  } else if (spec == "acyclic") {
    kind = OracleKind::AcyclicGraph;
  } else if (spec == "set") {
    kind = OracleKind::Set;
  } else {
    std::cerr << "error: unknown spec '" << spec << "'\n";
    return 3;
  }

  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 3;
  }
  try {
    const lin::History h = lin::read_history(in);
    const auto ops = lin::completed_ops(h);
    const lin::CheckResult r = lin::check_linearizable(h, kind, options);
    std::cout << lin::to_string(r.verdict) << " (" << ops.size() << " ops, " << r.states
              << " states)\n";
    if (r.linearizable()) {
      for (std::size_t i : r.witness) std::cout << "  " << to_string(ops[i].op) << " -> "
                                                << (ops[i].result ? "true" : "false") << "\n";
      return 0;
    }
    return r.verdict == lin::Verdict::NotLinearizable ? 1 : 2;
  } catch (const lin::HistoryParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
