#include <doctest.h>

#include <fstream>
#include <sstream>

#include "spinchain/figures.hpp"
#include "spinchain/io.hpp"
#include "spinchain/selftest.hpp"
#include "test_helpers.hpp"

using namespace spinchain;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("XState JSON round trip is exact") {
  testutil::Rng rng(71);
  for (int i = 0; i < 25; ++i) {
    const XState x = testutil::random_xstate(rng);
    const XState back = xstate_from_json(json::parse(to_json(x).dump()));
    CHECK(back.p1 == x.p1);
    CHECK(back.p2 == x.p2);
    CHECK(back.p3 == x.p3);
    CHECK(back.p4 == x.p4);
    CHECK(back.c14 == x.c14);
    CHECK(back.c23 == x.c23);
  }
}

TEST_CASE("DensityMatrix2Q JSON round trip is exact") {
  testutil::Rng rng(72);
  const DensityMatrix2Q rho = x_to_dense(testutil::random_xstate(rng));
  const DensityMatrix2Q back = dense_from_json(json::parse(to_json(rho).dump()));
  CHECK((back.entries - rho.entries).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(dense_from_json(json{{"entries", json::array()}}), std::domain_error);
  CHECK_THROWS_AS(complex_from_json(json::array({1.0})), std::domain_error);
}

TEST_CASE("malformed states are rejected on parse") {
  json j = to_json(pure_state(0.5));
  j["p1"] = 0.9;  // breaks the trace
  CHECK_THROWS_AS(xstate_from_json(j), std::domain_error);
}

TEST_CASE("report JSON carries every field") {
  const json j = to_json(full_report(mdms_werner(0.5)));
  for (const char* key : {"entropy_total", "entropy_a", "entropy_b", "mutual_info",
                          "classical_ab", "classical_ba", "discord_ab", "discord_ba",
                          "discord_two_way", "concurrence", "eof"})
    CHECK(j.contains(key));
}

TEST_CASE("CSV row column order") {
  CorrelationReport r;
  r.entropy_total = 2;
  r.entropy_a = 98;  // not part of the row
  r.entropy_b = 99;  // not part of the row
  r.mutual_info = 3;
  r.classical_ab = 4;
  r.classical_ba = 5;
  r.discord_ab = 6;
  r.discord_ba = 7;
  r.discord_two_way = 8;
  r.concurrence = 9;
  r.eof = 10;
  CHECK(report_csv_row(1.0, r) == "1,2,3,4,5,6,7,8,9,10");
  CHECK(std::string(kReportCsvHeader) == "t_or_f,S,I,J_ab,J_ba,D_ab,D_ba,D,C,E");
}

TEST_CASE("scan CSV emission is deterministic") {
  const ScanSeries series = scan_time({3, 1.0, 0.0}, pure_state(0.4), 3, {0.0, 1.0, 2.0});
  const std::string a = scan_to_csv(series, {"demo run"});
  const std::string b = scan_to_csv(series, {"demo run"});
  CHECK(a == b);
  CHECK(a.find("# demo run\n") != std::string::npos);
  CHECK(a.find(kReportCsvHeader) != std::string::npos);
  CHECK(std::count(a.begin(), a.end(), '\n') == 6);  // provenance + axis + header + 3 rows

  const json js = scan_to_json(series);
  CHECK(js["points"].size() == 3);
}

TEST_CASE("number formatting is fixed at 12 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-2.5e-7) == "-2.5e-07");
}

TEST_CASE("figure emission: defaults and overrides") {
  FigureOptions opts;
  opts.id = "4";
  opts.steps = 9;
  const FigureOutput fig = emit_figure(opts);
  CHECK(fig.default_filename == "figure4.csv");
  CHECK(fig.csv.find("a,f,D_tilde,E_tilde") != std::string::npos);
  // 3 Werner series of 9 rows each
  const size_t rows = std::count(fig.csv.begin(), fig.csv.end(), '\n');
  CHECK(rows >= 27);

  CHECK_THROWS_AS(emit_figure(FigureOptions{"9"}), std::domain_error);
}

TEST_CASE("figure golden files") {
  FigureOptions fig2;
  fig2.id = "2";
  fig2.steps = 40;
  CHECK(emit_figure(fig2).csv == read_file(std::string(TEST_GOLDEN_DIR) + "/figure2_steps40.csv"));

  FigureOptions fig3;
  fig3.id = "3";
  fig3.steps = 30;
  CHECK(emit_figure(fig3).csv == read_file(std::string(TEST_GOLDEN_DIR) + "/figure3_steps30.csv"));
}

TEST_CASE("acceptance harness: determinism and fault injection") {
  acceptance::Options opts;
  opts.reduced = true;
  const auto once = acceptance::detail::check_pure_d_equals_e(opts);
  const auto twice = acceptance::detail::check_pure_d_equals_e(opts);
  CHECK(once.passed);
  CHECK(once.detail == twice.detail);

  acceptance::Options fault = opts;
  fault.inject_fault = "3-pure-d-equals-e";
  const auto broken = acceptance::detail::check_pure_d_equals_e(fault);
  CHECK_FALSE(broken.passed);
  CHECK(broken.detail.find("fault injected") != std::string::npos);

  const std::string summary = acceptance::summarize({once, broken});
  CHECK(summary.find("[PASS] 3-pure-d-equals-e") != std::string::npos);
  CHECK(summary.find("[FAIL] 3-pure-d-equals-e") != std::string::npos);
  CHECK(acceptance::count_failures({once, broken}) == 1);
}
