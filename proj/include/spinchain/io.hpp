#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinchain/analysis.hpp"
#include "spinchain/correlations.hpp"
#include "spinchain/states.hpp"

namespace spinchain {

using nlohmann::json;

// Complex numbers travel as [re, im] pairs.
inline json complex_to_json(const cxd& z) { return json::array({z.real(), z.imag()}); }

inline cxd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::domain_error("complex_from_json: expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(const XState& x) {
  return json{{"p1", x.p1},          {"p2", x.p2},
              {"p3", x.p3},          {"p4", x.p4},
              {"c14", complex_to_json(x.c14)}, {"c23", complex_to_json(x.c23)}};
}

inline XState xstate_from_json(const json& j) {
  XState x;
  x.p1 = j.at("p1").get<double>();
  x.p2 = j.at("p2").get<double>();
  x.p3 = j.at("p3").get<double>();
  x.p4 = j.at("p4").get<double>();
  x.c14 = complex_from_json(j.at("c14"));
  x.c23 = complex_from_json(j.at("c23"));
  x.validate();
  return x;
}

inline json to_json(const DensityMatrix2Q& rho) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(rho.entries(i, j)));
    rows.push_back(row);
  }
  return json{{"entries", rows}};
}

inline DensityMatrix2Q dense_from_json(const json& j) {
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != 4)
    throw std::domain_error("dense_from_json: expected 4 rows");
  DensityMatrix2Q rho;
  for (int i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4)
      throw std::domain_error("dense_from_json: expected 4 columns");
    for (int k = 0; k < 4; ++k) rho.entries(i, k) = complex_from_json(rows[i][k]);
  }
  rho.validate();
  return rho;
}

inline json to_json(const CorrelationReport& r) {
  return json{{"entropy_total", r.entropy_total},
              {"entropy_a", r.entropy_a},
              {"entropy_b", r.entropy_b},
              {"mutual_info", r.mutual_info},
              {"classical_ab", r.classical_ab},
              {"classical_ba", r.classical_ba},
              {"discord_ab", r.discord_ab},
              {"discord_ba", r.discord_ba},
              {"discord_two_way", r.discord_two_way},
              {"concurrence", r.concurrence},
              {"eof", r.eof}};
}

// Fixed 12-significant-digit formatting so repeated runs emit identical
// bytes.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline constexpr const char* kReportCsvHeader = "t_or_f,S,I,J_ab,J_ba,D_ab,D_ba,D,C,E";

inline std::string report_csv_row(double axis_value, const CorrelationReport& r) {
  std::string row = format_number(axis_value);
  for (double v : {r.entropy_total, r.mutual_info, r.classical_ab, r.classical_ba, r.discord_ab,
                   r.discord_ba, r.discord_two_way, r.concurrence, r.eof}) {
    row += ',';
    row += format_number(v);
  }
  return row;
}

inline std::string scan_to_csv(const ScanSeries& series,
                               const std::vector<std::string>& provenance = {}) {
  std::string out;
  for (const auto& line : provenance) out += "# " + line + "\n";
  out += "# axis: " + series.axis_label + "\n";
  out += kReportCsvHeader;
  out += '\n';
  for (const auto& p : series.points) {
    out += report_csv_row(p.axis_value, p.report);
    out += '\n';
  }
  return out;
}

inline json scan_to_json(const ScanSeries& series) {
  json points = json::array();
  for (const auto& p : series.points)
    points.push_back(json{{"axis_value", p.axis_value}, {"report", to_json(p.report)}});
  return json{{"axis", series.axis_label}, {"points", points}};
}

}  // namespace spinchain
