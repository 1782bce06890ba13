#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szx/enumeration.hpp"
#include "szx/report.hpp"
#include "szx/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void write_out(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << text;
}

int run_compute(const std::string& input, const std::string& format,
                const std::string& output_path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "cannot open input file: " << input << '\n';
      return kExitUsage;
    }
    in = &file;
  }

  std::vector<szx::ReportRecord> records;
  bool any_error = false;
  std::string line;
  for (int lineno = 1; std::getline(*in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      szx::Graph g = szx::from_graph6(line);
      records.push_back(szx::analyze_graph(g, line));
    } catch (const std::exception& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      any_error = true;
    }
  }
  write_out(szx::render_records(records, szx::parse_output_format(format)),
            output_path);
  return any_error ? kExitUsage : kExitPass;
}

int run_construct(const std::string& family, const std::vector<int>& params,
                  const std::string& output_path) {
  szx::Graph g;
  if (family == "bn") {
    if (params.size() != 1)
      throw std::invalid_argument("usage: construct bn N");
    g = szx::build_bn(params[0]);
  } else if (family == "theta") {
    if (params.size() != 3)
      throw std::invalid_argument("usage: construct theta A B C  (1 <= A <= B <= C, B >= 2)");
    g = szx::build_theta(params[0], params[1], params[2]);
  } else if (family == "dumbbell") {
    if (params.size() != 3)
      throw std::invalid_argument("usage: construct dumbbell P Q T  (3 <= P <= Q, T >= 0)");
    g = szx::build_dumbbell(params[0], params[1], params[2]);
  } else {
    throw std::invalid_argument("unknown family '" + family +
                                "': expected bn, theta or dumbbell");
  }
  write_out(szx::to_graph6(g) + "\n", output_path);
  return kExitPass;
}

int run_enumerate(int n, const std::string& method, int jobs,
                  const std::string& output_path) {
  auto classes =
      szx::enumerate_bicyclic(n, szx::parse_enum_method(method), jobs);
  std::ostringstream out;
  for (const std::string& form : classes.forms) out << form << '\n';
  write_out(out.str(), output_path);
  return kExitPass;
}

int run_verify(const std::string& what, const std::vector<int>& params,
               const std::string& method_name, int jobs,
               const std::string& format_name, const std::string& output_path,
               const std::string& plot_path) {
  auto method = szx::parse_enum_method(method_name);
  auto format = szx::parse_output_format(format_name);

  if (what == "conjecture" || what == "inequalities") {
    if (params.empty() || params.size() > 2)
      throw std::invalid_argument("usage: verify " + what + " N_LO [N_HI]");
    int lo = params[0];
    int hi = params.size() == 2 ? params[1] : lo;
    if (hi < lo) throw std::invalid_argument("N_HI must be >= N_LO");

    bool all_pass = true;
    if (what == "conjecture") {
      std::vector<szx::ConjectureReport> reports;
      for (int n = lo; n <= hi; ++n) {
        reports.push_back(szx::verify_conjecture(n, method, jobs));
        if (reports.back().counterexample)
          std::cerr << "COUNTEREXAMPLE FOUND at n=" << n
                    << ": see report table\n";
        all_pass = all_pass && reports.back().passes();
      }
      write_out(szx::render_conjecture(reports, format), output_path);
      if (!plot_path.empty()) write_out(szx::plot_csv(reports), plot_path);
    } else {
      std::vector<szx::InequalityReport> reports;
      for (int n = lo; n <= hi; ++n) {
        reports.push_back(szx::verify_case_inequalities(n, method, jobs));
        all_pass = all_pass && reports.back().passes();
      }
      write_out(szx::render_inequalities(reports, format), output_path);
    }
    return all_pass ? kExitPass : kExitAssertionFailure;
  }

  if (what == "lemma3") {
    if (params.size() != 3)
      throw std::invalid_argument("usage: verify lemma3 A B C");
    auto report = szx::verify_lemma3(params[0], params[1], params[2]);
    write_out(szx::render_lemma3(report, format), output_path);
    return report.passes() ? kExitPass : kExitAssertionFailure;
  }

  throw std::invalid_argument("unknown verification '" + what +
                              "': expected conjecture, lemma3 or inequalities");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "szx: exact Wiener / Szeged / revised Szeged indices, bicyclic graph "
      "enumeration, and extremal verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "szx 0.1.0");

  std::string input = "-";
  std::string family, what;
  std::vector<int> params;
  std::string method = "naive", format = "table";
  std::string output_path, plot_path;
  int n = 0, jobs = 1;

  auto* compute = app.add_subcommand(
      "compute", "Compute indices for newline-delimited graph6 input");
  compute->add_option("input", input, "input file, or - for stdin");
  compute->add_option("--format", format, "table, csv or json");
  compute->add_option("--output", output_path, "write to file instead of stdout");

  auto* construct =
      app.add_subcommand("construct", "Emit a named graph family member as graph6");
  construct->add_option("family", family, "bn, theta or dumbbell")->required();
  construct->add_option("params", params, "family parameters");
  construct->add_option("--output", output_path);

  auto* enumerate = app.add_subcommand(
      "enumerate", "List all connected bicyclic graphs of order N up to isomorphism");
  enumerate->add_option("n", n, "graph order")->required();
  enumerate->add_option("--method", method, "naive or structural");
  enumerate->add_option("--jobs", jobs, "worker count");
  enumerate->add_option("--output", output_path);

  auto* verify = app.add_subcommand(
      "verify", "Check the extremal results over enumerated graphs");
  verify->add_option("what", what, "conjecture, lemma3 or inequalities")->required();
  verify->add_option("params", params, "order range or theta shape");
  verify->add_option("--method", method, "naive or structural");
  verify->add_option("--jobs", jobs, "worker count");
  verify->add_option("--format", format, "table, csv or json");
  verify->add_option("--output", output_path);
  verify->add_option("--plot", plot_path, "also write per-n max/second-max CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (compute->parsed()) return run_compute(input, format, output_path);
    if (construct->parsed()) return run_construct(family, params, output_path);
    if (enumerate->parsed()) return run_enumerate(n, method, jobs, output_path);
    return run_verify(what, params, method, jobs, format, output_path, plot_path);
  } catch (const szx::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
