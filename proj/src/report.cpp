#include "szx/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace szx {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + name);
}

ReportRecord analyze_graph(const Graph& g, std::string g6) {
  if (!is_connected(g))
    throw std::invalid_argument("graph is not connected");
  ReportRecord rec;
  rec.graph6 = std::move(g6);
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  rec.wiener = wiener(g);
  rec.szeged = szeged(g);
  rec.revised_szeged = revised_szeged_x4(g);
  rec.deviation_sum = deviation_sum(g);
  if (rec.m == rec.n + 1) rec.cls = to_string(classify_bicyclic(g).kind);
  return rec;
}

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

json record_json(const ReportRecord& r) {
  return json{{"graph6", r.graph6},
              {"n", r.n},
              {"m", r.m},
              {"wiener", r.wiener},
              {"szeged", r.szeged},
              {"revised_szeged_q4", r.revised_szeged.q},
              {"revised_szeged", r.revised_szeged.to_fraction()},
              {"deviation_sum", r.deviation_sum},
              {"class", r.cls}};
}

json conjecture_json(const ConjectureReport& r) {
  json table = json::array();
  for (const ClassRow& row : r.table) {
    json entry{{"graph6", row.canon},
               {"class", to_string(row.cls.kind)},
               {"deviation_sum", row.deviation_sum},
               {"revised_szeged_q4", row.q4}};
    if (row.cls.kind == BicyclicClass::Kind::Theta)
      entry["theta_paths"] = row.cls.path_lengths;
    table.push_back(std::move(entry));
  }
  return json{{"n", r.n},
              {"method", to_string(r.method)},
              {"classes", r.class_count},
              {"max_q4", r.max_q4},
              {"bound_q4", r.bound_q4},
              {"maximizers", r.maximizers},
              {"maximizer_unique", r.maximizer_unique},
              {"maximizer_is_bn", r.maximizer_is_bn},
              {"second_q4", r.second_q4},
              {"second_place", r.second_place},
              {"second_is_theta_1_2_n2", r.second_is_theta_12},
              {"counterexample", r.counterexample},
              {"pass", r.passes()},
              {"table", std::move(table)}};
}

json lemma3_row_json(const ThetaSweepRow& row) {
  const ThetaEdgeAnalysis& a = row.analysis;
  return json{{"u", a.u},
              {"v", a.v},
              {"case", to_string(a.kind)},
              {"hub_dist_x", a.hub_dist_x},
              {"hub_dist_y", a.hub_dist_y},
              {"cycle_len", a.cycle_len},
              {"predicted", a.predicted},
              {"lower_bound_only", a.predicted_is_lower_bound},
              {"actual", a.actual},
              {"middle_of_odd_path", a.middle_of_odd_path},
              {"ok", row.formula_ok}};
}

json inequality_json(const InequalityReport& r) {
  json rows = json::array();
  for (const InequalityRow& row : r.rows)
    rows.push_back(json{{"graph6", row.canon},
                        {"class", to_string(row.cls.kind)},
                        {"deviation_sum", row.deviation_sum},
                        {"is_bn", row.is_bn},
                        {"required_lb", row.required_lb},
                        {"ok", row.ok}});
  return json{{"n", r.n},
              {"method", to_string(r.method)},
              {"classes", r.class_count},
              {"bn_deviation", r.bn_deviation},
              {"bn_expected", r.bn_expected},
              {"violators", r.violators},
              {"pass", r.passes()},
              {"rows", std::move(rows)}};
}

}  // namespace

std::string render_records(std::span<const ReportRecord> records,
                           OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv: {
      out << "graph6,n,m,wiener,szeged,revised_szeged_q4,deviation_sum,class\n";
      for (const ReportRecord& r : records)
        out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.wiener << ','
            << r.szeged << ',' << r.revised_szeged.q << ',' << r.deviation_sum
            << ',' << r.cls << '\n';
      break;
    }
    case OutputFormat::Json: {
      json arr = json::array();
      for (const ReportRecord& r : records) arr.push_back(record_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table: {
      std::size_t width = 6;
      for (const ReportRecord& r : records)
        width = std::max(width, r.graph6.size());
      out << std::left << std::setw(static_cast<int>(width + 2)) << "graph6"
          << std::right << std::setw(4) << "n" << std::setw(4) << "m"
          << std::setw(8) << "wiener" << std::setw(8) << "szeged"
          << std::setw(16) << "revised_szeged" << std::setw(15)
          << "deviation_sum" << "  class\n";
      for (const ReportRecord& r : records)
        out << std::left << std::setw(static_cast<int>(width + 2)) << r.graph6
            << std::right << std::setw(4) << r.n << std::setw(4) << r.m
            << std::setw(8) << r.wiener << std::setw(8) << r.szeged
            << std::setw(16) << r.revised_szeged.to_decimal() << std::setw(15)
            << r.deviation_sum << "  " << r.cls << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_conjecture(std::span<const ConjectureReport> reports,
                              OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv: {
      out << "n,method,classes,max_q4,bound_q4,maximizers,unique,is_bn,"
             "second_q4,second_place,second_is_theta,counterexample,pass\n";
      for (const ConjectureReport& r : reports)
        out << r.n << ',' << to_string(r.method) << ',' << r.class_count << ','
            << r.max_q4 << ',' << r.bound_q4 << ',' << join(r.maximizers, ';')
            << ',' << r.maximizer_unique << ',' << r.maximizer_is_bn << ','
            << r.second_q4 << ',' << join(r.second_place, ';') << ','
            << r.second_is_theta_12 << ',' << r.counterexample << ','
            << r.passes() << '\n';
      break;
    }
    case OutputFormat::Json: {
      json arr = json::array();
      for (const ConjectureReport& r : reports) arr.push_back(conjecture_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table: {
      for (const ConjectureReport& r : reports) {
        if (r.counterexample)
          out << "COUNTEREXAMPLE FOUND at n=" << r.n << ": max 4*Sz* = "
              << r.max_q4 << " exceeds the conjectured bound " << r.bound_q4
              << "; maximizers: " << join(r.maximizers, ' ') << '\n';
        out << (r.passes() ? "PASS" : "FAIL") << " n=" << r.n
            << " classes=" << r.class_count << " max_q4=" << r.max_q4
            << " bound_q4=" << r.bound_q4
            << " maximizer=" << join(r.maximizers, ';')
            << (r.maximizer_is_bn ? " (= B_n)" : " (NOT B_n)")
            << " second_q4=" << r.second_q4
            << " second=" << join(r.second_place, ';')
            << (r.second_is_theta_12 ? " (= Theta(1,2,n-2))" : "") << '\n';
        if (!r.passes())
          for (const ClassRow& row : r.table)
            out << "  " << row.canon << " " << to_string(row.cls.kind)
                << " dev=" << row.deviation_sum << " q4=" << row.q4 << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string render_lemma3(const ThetaSweepReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv: {
      out << "u,v,case,hub_dist_x,hub_dist_y,cycle_len,predicted,"
             "lower_bound_only,actual,middle_of_odd_path,ok\n";
      for (const ThetaSweepRow& row : report.rows) {
        const ThetaEdgeAnalysis& a = row.analysis;
        out << a.u << ',' << a.v << ',' << to_string(a.kind) << ','
            << a.hub_dist_x << ',' << a.hub_dist_y << ',' << a.cycle_len << ','
            << a.predicted << ',' << a.predicted_is_lower_bound << ','
            << a.actual << ',' << a.middle_of_odd_path << ',' << row.formula_ok
            << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      json rows = json::array();
      for (const ThetaSweepRow& row : report.rows)
        rows.push_back(lemma3_row_json(row));
      json doc{{"a", report.shape.a},
               {"b", report.shape.b},
               {"c", report.shape.c},
               {"n", report.n},
               {"zero_deviation_edges", report.zero_deviation_edges},
               {"zero_iff_middle", report.zero_iff_middle},
               {"case_formulas_ok", report.case_formulas_ok},
               {"pass", report.passes()},
               {"edges", std::move(rows)}};
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table: {
      out << (report.passes() ? "PASS" : "FAIL") << " theta(" << report.shape.a
          << ',' << report.shape.b << ',' << report.shape.c
          << ") n=" << report.n
          << " zero_deviation_edges=" << report.zero_deviation_edges << '\n';
      for (const ThetaSweepRow& row : report.rows) {
        const ThetaEdgeAnalysis& a = row.analysis;
        out << "  edge " << a.u << '-' << a.v << "  " << std::left
            << std::setw(16) << to_string(a.kind) << std::right
            << " predicted" << (a.predicted_is_lower_bound ? ">=" : "=")
            << a.predicted << " actual=" << a.actual
            << (a.middle_of_odd_path ? "  [middle of odd path]" : "")
            << (row.formula_ok ? "" : "  MISMATCH") << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string render_inequalities(std::span<const InequalityReport> reports,
                                OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv: {
      out << "n,method,classes,bn_deviation,bn_expected,violators,pass\n";
      for (const InequalityReport& r : reports)
        out << r.n << ',' << to_string(r.method) << ',' << r.class_count << ','
            << r.bn_deviation << ',' << r.bn_expected << ','
            << join(r.violators, ';') << ',' << r.passes() << '\n';
      break;
    }
    case OutputFormat::Json: {
      json arr = json::array();
      for (const InequalityReport& r : reports) arr.push_back(inequality_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table: {
      for (const InequalityReport& r : reports) {
        out << (r.passes() ? "PASS" : "FAIL") << " n=" << r.n
            << " classes=" << r.class_count
            << " bn_deviation=" << r.bn_deviation << " (expected "
            << r.bn_expected << ") violators=" << r.violators.size() << '\n';
        for (const std::string& v : r.violators) out << "  violator: " << v << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string plot_csv(std::span<const ConjectureReport> reports) {
  std::ostringstream out;
  out << "n,max_q4,second_q4\n";
  for (const ConjectureReport& r : reports)
    out << r.n << ',' << r.max_q4 << ',' << r.second_q4 << '\n';
  return out.str();
}

}  // namespace szx
