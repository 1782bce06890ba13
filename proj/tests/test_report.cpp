#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "szx/report.hpp"

using namespace szx;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, sep)) out.push_back(piece);
  return out;
}

}  // namespace

TEST_CASE("record fields for the reference inputs") {
  Graph b6 = build_bn(6);
  auto rec = analyze_graph(b6, to_graph6(b6));
  CHECK(rec.n == 6);
  CHECK(rec.m == 7);
  CHECK(rec.revised_szeged.q == 246);
  CHECK(rec.revised_szeged.to_decimal() == "61.5");
  CHECK(rec.deviation_sum == 6);
  CHECK(rec.cls == "theta");

  auto edge = analyze_graph(from_graph6("A_"), "A_");
  CHECK(edge.wiener == 1);
  CHECK(edge.szeged == 1);
  CHECK(edge.revised_szeged.q == 4);
  CHECK(edge.revised_szeged.to_decimal() == "1");
  CHECK(edge.cls.empty());

  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  auto rec4 = analyze_graph(c4, to_graph6(c4));
  CHECK(rec4.revised_szeged.to_decimal() == "16");

  CHECK_THROWS_AS(analyze_graph(Graph(3), "B?"), std::invalid_argument);
}

TEST_CASE("csv emitter round-trips the record exactly") {
  Graph b6 = build_bn(6);
  std::vector<ReportRecord> recs{analyze_graph(b6, to_graph6(b6))};
  std::string csv = render_records(recs, OutputFormat::Csv);
  auto lines = split(csv, '\n');
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "graph6,n,m,wiener,szeged,revised_szeged_q4,deviation_sum,class");
  auto cells = split(lines[1], ',');
  REQUIRE(cells.size() == 8);
  CHECK(cells[0] == to_graph6(b6));
  CHECK(std::stoi(cells[1]) == 6);
  CHECK(std::stoi(cells[2]) == 7);
  CHECK(std::stoll(cells[5]) == 246);
  CHECK(std::stoll(cells[6]) == 6);
  CHECK(cells[7] == "theta");
}

TEST_CASE("json and csv emitters agree field for field") {
  std::vector<ReportRecord> recs;
  Graph b6 = build_bn(6);
  recs.push_back(analyze_graph(b6, to_graph6(b6)));
  Graph t = build_theta(1, 2, 5);
  recs.push_back(analyze_graph(t, to_graph6(t)));

  auto doc = json::parse(render_records(recs, OutputFormat::Json));
  auto lines = split(render_records(recs, OutputFormat::Csv), '\n');
  REQUIRE(doc.size() == recs.size());
  REQUIRE(lines.size() == recs.size() + 1);
  auto header = split(lines[0], ',');

  for (std::size_t i = 0; i < recs.size(); ++i) {
    auto cells = split(lines[i + 1], ',');
    const json& obj = doc[i];
    for (std::size_t f = 0; f < header.size(); ++f) {
      const json& v = obj.at(header[f]);
      std::string as_text = v.is_string() ? v.get<std::string>() : v.dump();
      CHECK(as_text == cells[f]);
    }
    // The quarter-integer also carries its explicit /4 marker in JSON.
    CHECK(obj.at("revised_szeged") ==
          std::to_string(obj.at("revised_szeged_q4").get<long long>()) + "/4");
  }
}

TEST_CASE("table output renders exact decimals") {
  Graph b6 = build_bn(6);
  std::vector<ReportRecord> recs{analyze_graph(b6, to_graph6(b6))};
  std::string table = render_records(recs, OutputFormat::Table);
  CHECK(table.find("61.5") != std::string::npos);
  CHECK(table.find("theta") != std::string::npos);
}

TEST_CASE("conjecture report rendering") {
  std::vector<ConjectureReport> reports{verify_conjecture(6)};
  std::string table = render_conjecture(reports, OutputFormat::Table);
  CHECK(table.find("PASS n=6") != std::string::npos);

  std::string csv = render_conjecture(reports, OutputFormat::Csv);
  auto lines = split(csv, '\n');
  REQUIRE(lines.size() == 2);
  CHECK(split(lines[0], ',').size() == split(lines[1], ',').size());

  auto doc = json::parse(render_conjecture(reports, OutputFormat::Json));
  CHECK(doc[0].at("pass") == true);
  CHECK(doc[0].at("max_q4") == 246);
  CHECK(doc[0].at("table").size() == 19);

  std::string plot = plot_csv(reports);
  CHECK(plot == "n,max_q4,second_q4\n6,246,240\n");
}

TEST_CASE("lemma3 and inequality rendering") {
  auto sweep = verify_lemma3(3, 3, 3);
  std::string table = render_lemma3(sweep, OutputFormat::Table);
  CHECK(table.find("PASS") != std::string::npos);
  CHECK(table.find("[middle of odd path]") != std::string::npos);
  auto doc = json::parse(render_lemma3(sweep, OutputFormat::Json));
  CHECK(doc.at("zero_deviation_edges") == 3);
  auto lines = split(render_lemma3(sweep, OutputFormat::Csv), '\n');
  CHECK(lines.size() == 1 + sweep.rows.size());

  std::vector<InequalityReport> ineq{verify_case_inequalities(6)};
  CHECK(render_inequalities(ineq, OutputFormat::Table).find("PASS n=6") !=
        std::string::npos);
  auto idoc = json::parse(render_inequalities(ineq, OutputFormat::Json));
  CHECK(idoc[0].at("pass") == true);
  CHECK(idoc[0].at("rows").size() == 19);
}

TEST_CASE("format parsing") {
  CHECK(parse_output_format("table") == OutputFormat::Table);
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}
