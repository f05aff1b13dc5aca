#pragma once

// Command surface shared by the ucoulomb CLI and the tests: run configs,
// deterministic CSV/JSON table emission, and the per-command table builders.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucoulomb/contour.hpp"
#include "ucoulomb/model.hpp"
#include "ucoulomb/oracle.hpp"
#include "ucoulomb/scattering.hpp"

namespace ucoulomb {

struct GridSpec {
  double min = 0.0, max = 0.0;
  int n = 2;
  double at(int i) const {
    if (n == 1) return min;
    return min + (max - min) * double(i) / double(n - 1);
  }
};

/// Parse "min:max:n" (endpoints included) or a single value.
inline GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    g.min = g.max = std::stod(text);
    g.n = 1;
    return g;
  }
  auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw invalid_config("grid must be 'value' or 'min:max:n'");
  g.min = std::stod(text.substr(0, c1));
  g.max = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  g.n = std::stoi(text.substr(c2 + 1));
  if (g.n < 2) throw invalid_config("grid needs n >= 2");
  return g;
}

enum class Command { contour, potential, scan, bound_states, verify };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::scan;
  PhysParams params{};
  GridSpec grid{};
  Format format = Format::csv;
  std::string output = "-";  // "-" = stdout
  double tol = 1e-4;
  int n_max = 5;
  std::optional<Family> family{};  // bound-states filter; empty = both
};

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;
};

namespace detail {

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string cell_str(const Cell& c) {
  if (std::holds_alternative<double>(c)) return fmt_double(std::get<double>(c));
  if (std::holds_alternative<long long>(c))
    return std::to_string(std::get<long long>(c));
  return std::get<std::string>(c);
}

inline int thread_budget() {
  int n = int(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("UCOULOMB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

template <class Fn>
void parallel_for(int count, Fn&& fn) {
  int nthreads = std::min(thread_budget(), count);
  if (nthreads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline void write_csv(const Table& t, std::ostream& os) {
  for (const auto& [key, val] : t.meta) os << "# " << key << " = " << val << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << detail::cell_str(row[i]) << (i + 1 < row.size() ? "," : "\n");
  }
}

inline void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, val] : t.meta) meta[key] = val;
  j["meta"] = meta;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto jr = nlohmann::ordered_json::array();
    for (const auto& c : row) {
      if (std::holds_alternative<double>(c)) jr.push_back(std::get<double>(c));
      else if (std::holds_alternative<long long>(c))
        jr.push_back(std::get<long long>(c));
      else jr.push_back(std::get<std::string>(c));
    }
    rows.push_back(jr);
  }
  j["rows"] = rows;
  os << j.dump(2) << "\n";
}

inline void add_param_meta(Table& t, const RunConfig& cfg, const char* cmd) {
  t.meta.emplace_back("command", cmd);
  t.meta.emplace_back("Z", detail::fmt_double(cfg.params.Z));
  t.meta.emplace_back("L", detail::fmt_double(cfg.params.L));
  t.meta.emplace_back("eps", detail::fmt_double(cfg.params.eps));
}

inline Table contour_table(const RunConfig& cfg) {
  Table t;
  add_param_meta(t, cfg, "contour");
  t.columns = {"s", "re_x", "im_x", "theta"};
  for (int i = 0; i < cfg.grid.n; ++i) {
    double s = cfg.grid.at(i);
    ContourPoint p = contour_point(cfg.params.eps, s);
    t.rows.push_back({s, p.x.real(), p.x.imag(), p.theta});
  }
  return t;
}

inline Table potential_table(const RunConfig& cfg) {
  Table t;
  add_param_meta(t, cfg, "potential");
  t.columns = {"s", "re_v", "im_v"};
  for (int i = 0; i < cfg.grid.n; ++i) {
    double s = cfg.grid.at(i);
    cplx v = potential(cfg.params, contour_point(cfg.params.eps, s));
    t.rows.push_back({s, v.real(), v.imag()});
  }
  return t;
}

inline Table scan_table(const RunConfig& cfg) {
  Table t;
  add_param_meta(t, cfg, "scan");
  t.columns = {"k", "abs_t_lr", "arg_t_lr", "abs_r_lr", "abs_r_rl",
               "near_pole"};
  auto rows = scan(cfg.params, cfg.grid.min, cfg.grid.max, cfg.grid.n);
  for (const auto& r : rows)
    t.rows.push_back({r.k, r.abs_t, r.arg_t, r.abs_r_lr, r.abs_r_rl,
                      (long long)(r.near_pole ? 1 : 0)});
  return t;
}

inline Table bound_states_table(const RunConfig& cfg) {
  Table t;
  add_param_meta(t, cfg, "bound-states");
  t.columns = {"family", "n", "im_k_n", "E_n"};
  std::vector<Family> fams;
  if (cfg.family) fams = {*cfg.family};
  else fams = {Family::q_plus, Family::q_minus};
  for (Family f : fams) {
    std::vector<BoundState> states;
    try {
      states = bound_state_poles(cfg.params, f, cfg.n_max);
    } catch (const empty_family&) {
      continue;
    }
    for (const auto& bs : states)
      t.rows.push_back({std::string(bs.family == Family::q_plus ? "q+" : "q-"),
                        (long long)bs.n, bs.k_n.imag(), bs.E_n});
  }
  return t;
}

/// Analytic-vs-oracle residuals over the k grid; pass = all residuals < tol.
inline Table verify_table(const RunConfig& cfg, bool* all_pass) {
  Table t;
  add_param_meta(t, cfg, "verify");
  t.meta.emplace_back("tol", detail::fmt_double(cfg.tol));
  t.columns = {"k", "res_t_lr", "res_r_lr", "res_t_rl", "res_r_rl",
               "max_residual", "pass"};
  double s_match = std::max(500.0, 1e4 * cfg.params.eps);
  std::vector<std::vector<Cell>> rows(cfg.grid.n);
  detail::parallel_for(cfg.grid.n, [&](int i) {
    double k = cfg.grid.at(i);
    ScatteringAmplitudes ana = scattering_amplitudes(cfg.params, k);
    ScatteringAmplitudes num =
        extract_numeric_amplitudes(cfg.params, k, s_match, 1e-10);
    // Reflections can vanish exactly (2 cos 2 pi L crossing e^{-pi Z/k}),
    // so normalize every residual by the transmission scale.
    double scale = std::abs(ana.t_lr);
    auto rel = [&](cplx a, cplx b) { return std::abs(a - b) / scale; };
    double r1 = rel(num.t_lr, ana.t_lr), r2 = rel(num.r_lr, ana.r_lr);
    double r3 = rel(num.t_rl, ana.t_rl), r4 = rel(num.r_rl, ana.r_rl);
    double mx = std::max({r1, r2, r3, r4});
    rows[i] = {k, r1, r2, r3, r4, mx,
               (long long)(mx < cfg.tol ? 1 : 0)};
  });
  bool ok = true;
  for (auto& row : rows) {
    ok = ok && std::get<long long>(row.back()) == 1;
    t.rows.push_back(std::move(row));
  }
  if (all_pass) *all_pass = ok;
  return t;
}

/// Dispatch a run config; returns the process exit code (0 ok, 1 failed
/// verification, 2 invalid config).
inline int run(const RunConfig& cfg) {
  try {
    validate(cfg.params);
    if (cfg.grid.n < 1 || !(cfg.tol > 0.0))
      throw invalid_config("grid needs n >= 1 and tol > 0");
    bool verify_ok = true;
    Table t;
    switch (cfg.command) {
      case Command::contour: t = contour_table(cfg); break;
      case Command::potential: t = potential_table(cfg); break;
      case Command::scan: t = scan_table(cfg); break;
      case Command::bound_states: t = bound_states_table(cfg); break;
      case Command::verify: t = verify_table(cfg, &verify_ok); break;
    }
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (cfg.output != "-") {
      file.open(cfg.output);
      if (!file) throw invalid_config("cannot open output file " + cfg.output);
      os = &file;
    }
    if (cfg.format == Format::csv) write_csv(t, *os);
    else write_json(t, *os);
    return verify_ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ucoulomb
