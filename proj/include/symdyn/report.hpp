// Deterministic report serialization: json (ordered keys), csv, markdown.

#pragma once

#include <fstream>

#include <json.hpp>

#include "harness.hpp"

namespace symdyn {

using ordered_json = nlohmann::ordered_json;

inline ordered_json budget_to_json(const Budget& b) {
  ordered_json j;
  j["horizon"] = b.horizon;
  j["sens_horizon"] = b.sens_horizon;
  j["witness_points"] = b.witness_points;
  auto rats = [](const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
  };
  j["delta_grid"] = rats(b.delta_factors);
  j["delta_extra"] = rats(b.delta_extra);
  j["eps_grid"] = rats(b.eps_factors);
  j["eps_extra"] = rats(b.eps_extra);
  j["m_max"] = b.m_max;
  j["enum_cap"] = b.enum_cap;
  return j;
}

inline ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["version"] = r.version;
  j["budget"] = budget_to_json(r.budget);
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o;
    o["theorem"] = row.theorem;
    o["system"] = row.system;
    o["n"] = row.n;
    ordered_json arrow;
    arrow["premise"] = row.premise;
    arrow["conclusion"] = row.conclusion;
    arrow["premise_level"] = row.premise_level;
    arrow["conclusion_level"] = row.conclusion_level;
    arrow["premise_property"] = row.premise_property;
    arrow["conclusion_property"] = row.conclusion_property;
    o["arrow"] = arrow;
    o["status"] = row_status_name(row.status);
    o["violated"] = row.violated;
    if (!row.witness.empty()) o["witness"] = row.witness;
    ordered_json v;
    for (const char* k : {"base", "product", "suspension"}) {
      auto it = row.verdicts.find(k);
      v[k] = it == row.verdicts.end() ? "n/a" : it->second;
    }
    o["verdicts"] = v;
    rows.push_back(std::move(o));
  }
  j["results"] = rows;
  ordered_json s;
  for (const auto& [k, c] : r.summary) s[k] = c;
  j["summary"] = s;
  return j;
}

inline bool json_to_report(const ordered_json& j, Report& out) {
  try {
    out = Report{};
    out.version = j.at("version").get<std::string>();
    for (const auto& o : j.at("results")) {
      CheckRow row;
      row.theorem = o.at("theorem").get<std::string>();
      row.system = o.at("system").get<std::string>();
      row.n = o.at("n").get<int>();
      row.premise = o.at("arrow").at("premise").get<int>();
      row.conclusion = o.at("arrow").at("conclusion").get<int>();
      row.premise_level = o.at("arrow").at("premise_level").get<std::string>();
      row.conclusion_level = o.at("arrow").at("conclusion_level").get<std::string>();
      row.premise_property = o.at("arrow").at("premise_property").get<std::string>();
      row.conclusion_property = o.at("arrow").at("conclusion_property").get<std::string>();
      std::string st = o.at("status").get<std::string>();
      for (RowStatus s : {RowStatus::Consistent, RowStatus::Counterexample, RowStatus::Inconclusive,
                          RowStatus::HypothesisNotMet})
        if (st == row_status_name(s)) row.status = s;
      row.violated = o.at("violated").get<bool>();
      if (o.contains("witness")) row.witness = o.at("witness").get<std::string>();
      for (const char* k : {"base", "product", "suspension"})
        row.verdicts[k] = o.at("verdicts").at(k).get<std::string>();
      out.rows.push_back(std::move(row));
    }
    for (auto it = j.at("summary").begin(); it != j.at("summary").end(); ++it)
      out.summary[it.key()] = it.value().get<long long>();
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void emit_report(const Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << report_to_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    os << "theorem,system,n,premise,conclusion,premise_level,conclusion_level,premise_property,"
          "conclusion_property,status,violated,witness\n";
    for (const auto& row : r.rows)
      os << row.theorem << ',' << row.system << ',' << row.n << ',' << row.premise << ','
         << row.conclusion << ',' << row.premise_level << ',' << row.conclusion_level << ','
         << row.premise_property << ',' << row.conclusion_property << ','
         << row_status_name(row.status) << ',' << (row.violated ? 1 : 0) << ','
         << csv_escape(row.witness) << "\n";
  } else if (format == "markdown") {
    os << "| theorem | system | n | arrow | status | witness |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& row : r.rows)
      os << "| " << row.theorem << " | " << row.system << " | " << row.n << " | (" << row.premise
         << ")->(" << row.conclusion << ") | " << row_status_name(row.status) << " | " << row.witness
         << " |\n";
    os << "\nSummary:\n";
    for (const auto& [k, c] : r.summary) os << "- " << k << ": " << c << "\n";
  } else {
    throw std::invalid_argument("unknown report format: " + format);
  }
}

inline void emit_report_file(const Report& r, const std::string& format, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot write report to " + path);
  emit_report(r, format, os);
}

} // namespace symdyn
