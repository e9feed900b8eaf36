// System and config file loading.
//
// System files are flat key=value text:
//   backend=finite|grid|shift
//   points=5
//   map=builtin rotation 1        (or: map=table 0:1 1:2 2:1)
//   metric=cycle|path|circle|table   [scale=steps]
//   basis_resolution=4
//   symbols=2 cylinder_len=4         (shift backend)
// Config files use the same syntax with budget and run keys; CLI flags win.

#pragma once

#include "detectors.hpp"
#include "harness.hpp"

namespace symdyn {

inline std::map<std::string, std::string> parse_kv_file(std::istream& in,
                                                        std::vector<std::string>* table_lines = nullptr) {
  std::map<std::string, std::string> kv;
  std::string line;
  bool in_table = false;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos || in_table) {
      if (table_lines) {
        table_lines->push_back(line);
        in_table = true;
        continue;
      }
      throw std::invalid_argument("expected key=value, got '" + line + "'");
    }
    std::string key = detail::trim(line.substr(0, eq));
    std::string val = detail::trim(line.substr(eq + 1));
    kv[key] = val;
    if (key == "metric" && val == "table" && table_lines) in_table = true;
  }
  return kv;
}

inline SystemVariant load_system(std::istream& in, const std::string& name) {
  std::vector<std::string> table_lines;
  auto kv = parse_kv_file(in, &table_lines);
  auto get = [&](const std::string& k, const std::string& dflt = "") {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  };
  std::string backend = get("backend", "finite");
  if (backend == "shift") {
    int symbols = std::stoi(get("symbols", "2"));
    int cyl = std::stoi(get("cylinder_len", "4"));
    ShiftSystem s = full_shift(symbols, cyl);
    s.name = name;
    return s;
  }
  int points = std::stoi(get("points", "0"));
  if (points <= 0) throw std::invalid_argument("system file: missing points=");
  int basis_resolution = std::stoi(get("basis_resolution", "4"));

  std::string metric = get("metric", "cycle");
  std::string scale = get("scale", "normalized");
  MetricSpace space = [&] {
    if (metric == "cycle") return scale == "steps" ? MetricSpace::cycle_steps(points) : MetricSpace::cycle(points);
    if (metric == "path") return scale == "steps" ? MetricSpace::path_steps(points) : MetricSpace::path(points);
    if (metric == "circle") return MetricSpace::circle_grid(points);
    if (metric == "table") {
      std::vector<std::vector<Rational>> rows;
      for (const auto& l : table_lines) {
        std::vector<Rational> row;
        for (const auto& tok : detail::split(l, ' '))
          if (!tok.empty()) row.push_back(Rational::parse(tok));
        rows.push_back(std::move(row));
      }
      return MetricSpace::from_lower_triangle(points, rows);
    }
    throw std::invalid_argument("system file: unknown metric '" + metric + "'");
  }();

  std::string map_spec = get("map");
  if (map_spec.empty()) throw std::invalid_argument("system file: missing map=");
  std::vector<std::string> toks = detail::split(map_spec, ' ');
  std::vector<int> table;
  if (toks[0] == "builtin") {
    if (toks.size() < 2) throw std::invalid_argument("system file: builtin map needs a name");
    const std::string& which = toks[1];
    int param = toks.size() > 2 ? std::stoi(toks[2]) : 1;
    if (which == "rotation") {
      for (int i = 0; i < points; ++i) table.push_back(((i + param) % points + points) % points);
    } else if (which == "doubling") {
      if (points % 2 == 0) throw std::invalid_argument("doubling needs an odd point count");
      for (int i = 0; i < points; ++i) table.push_back(2 * i % points);
    } else if (which == "tent") {
      for (int i = 0; i < points; ++i) table.push_back(std::min(2 * i, 2 * (points - 1) - 2 * i));
    } else if (which == "identity") {
      for (int i = 0; i < points; ++i) table.push_back(i);
    } else if (which == "constant") {
      table.assign(points, param);
    } else {
      throw std::invalid_argument("system file: unknown builtin map '" + which + "'");
    }
  } else if (toks[0] == "table") {
    table.assign(points, -1);
    for (std::size_t i = 1; i < toks.size(); ++i) {
      auto colon = toks[i].find(':');
      if (colon == std::string::npos) throw std::invalid_argument("map table entries look like i:j");
      int from = std::stoi(toks[i].substr(0, colon));
      int to = std::stoi(toks[i].substr(colon + 1));
      if (from < 0 || from >= points || to < 0 || to >= points)
        throw std::invalid_argument("map table entry out of range: " + toks[i]);
      table[from] = to;
    }
    for (int i = 0; i < points; ++i)
      if (table[i] < 0) throw std::invalid_argument("map table leaves " + std::to_string(i) + " unmapped");
  } else {
    throw std::invalid_argument("system file: map must be 'builtin ...' or 'table ...'");
  }
  Backend be = backend == "grid" ? Backend::Grid : Backend::Finite;
  return make_finite_system(name, std::move(space), Endomap(std::move(table)), be, basis_resolution,
                            /*check_axioms=*/points <= 64);
}

inline SystemVariant load_system_file(const std::string& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open system file: " + path);
  return load_system(in, name);
}

struct RunConfig {
  Budget budget;
  std::vector<std::string> theorems = all_theorem_ids();
  std::vector<int> n_values = {2};
  std::string catalog = "default";
  std::string out;
  std::string format = "json";
  std::vector<CatalogEntry> user_systems;
};

inline std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& tok : detail::split(s, ','))
    if (!tok.empty()) out.push_back(Rational::parse(tok));
  return out;
}

inline void apply_config_pair(RunConfig& cfg, const std::string& key, const std::string& val) {
  if (key == "horizon") cfg.budget.horizon = std::stoi(val);
  else if (key == "sens-horizon") cfg.budget.sens_horizon = std::stoi(val);
  else if (key == "witness-points") cfg.budget.witness_points = std::stoi(val);
  else if (key == "m-max") cfg.budget.m_max = std::stoi(val);
  else if (key == "enum-cap") cfg.budget.enum_cap = (std::size_t)std::stoll(val);
  else if (key == "delta-grid") cfg.budget.delta_factors = parse_rational_list(val);
  else if (key == "eps-grid") cfg.budget.eps_factors = parse_rational_list(val);
  else if (key == "delta-abs") cfg.budget.delta_extra = parse_rational_list(val);
  else if (key == "eps-abs") cfg.budget.eps_extra = parse_rational_list(val);
  else if (key == "theorems") {
    if (val == "all") cfg.theorems = all_theorem_ids();
    else cfg.theorems = detail::split(val, ',');
  } else if (key == "n") {
    cfg.n_values.clear();
    for (const auto& tok : detail::split(val, ',')) cfg.n_values.push_back(std::stoi(tok));
  } else if (key == "catalog") cfg.catalog = val;
  else if (key == "out") cfg.out = val;
  else if (key == "format") cfg.format = val;
  else if (key.rfind("system.", 0) == 0) {
    std::string id = key.substr(7);
    cfg.user_systems.push_back({id, load_system_file(val, id)});
  } else
    throw std::invalid_argument("unknown config key: " + key);
}

inline void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  auto kv = parse_kv_file(in);
  for (const auto& [k, v] : kv) apply_config_pair(cfg, k, v);
}

inline std::vector<CatalogEntry> resolve_catalog(const RunConfig& cfg) {
  std::vector<CatalogEntry> out;
  if (cfg.catalog == "default") out = default_catalog();
  else if (cfg.catalog == "none") out = {};
  else {
    // comma-separated subset of the default catalog ids
    std::vector<CatalogEntry> all = default_catalog();
    for (const auto& id : detail::split(cfg.catalog, ',')) {
      bool found = false;
      for (auto& e : all)
        if (e.id == id) {
          out.push_back(e);
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("unknown catalog system: " + id);
    }
  }
  for (const auto& e : cfg.user_systems) out.push_back(e);
  return out;
}

} // namespace symdyn
