#ifndef SZX_REPORT_HPP
#define SZX_REPORT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "szx/graph.hpp"
#include "szx/indices.hpp"
#include "szx/verify.hpp"

namespace szx {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_output_format(const std::string& name);

// One line of `compute` output: every index of one input graph.
struct ReportRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::int64_t wiener = 0;
  std::int64_t szeged = 0;
  QuarterValue revised_szeged;
  std::int64_t deviation_sum = 0;
  std::string cls;  // bicyclic class tag, empty when not bicyclic
};

// Computes all indices of a connected graph. `g6` is echoed into the record.
ReportRecord analyze_graph(const Graph& g, std::string g6);

std::string render_records(std::span<const ReportRecord> records,
                           OutputFormat format);

std::string render_conjecture(std::span<const ConjectureReport> reports,
                              OutputFormat format);

std::string render_lemma3(const ThetaSweepReport& report, OutputFormat format);

std::string render_inequalities(std::span<const InequalityReport> reports,
                                OutputFormat format);

// Per-n max / second-max values as CSV, for external plotting.
std::string plot_csv(std::span<const ConjectureReport> reports);

}  // namespace szx

#endif  // SZX_REPORT_HPP
