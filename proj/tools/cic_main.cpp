#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cic/cic.hpp"
#include "cic/emit.hpp"
#include "cic/kitaev.hpp"
#include "cic/props.hpp"
#include "cic/scan.hpp"
#include "cic/state_io.hpp"
#include "cic/xxz.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct OutputOptions {
  std::string csv_path;
  std::string svg_path;
  std::string json_path;
};

void add_output_options(CLI::App& cmd, OutputOptions& out) {
  cmd.add_option("--out", out.csv_path, "CSV output path");
  cmd.add_option("--svg", out.svg_path, "SVG susceptibility plot path");
  cmd.add_option("--json", out.json_path, "JSON output path");
}

std::string strip_spaces(const std::string& s) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

// Expands `--config file` into long-option tokens. Each non-comment line of
// the file reads `key=value` with keys naming long options of the chosen
// subcommand; explicit command-line flags take precedence over file entries.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw cic::validation_error("--config needs a file path");
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  if (config_path.empty()) return args;

  std::ifstream in(config_path);
  if (!in) throw cic::validation_error("cannot open config file '" + config_path + "'");
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = strip_spaces(line);
    if (text.empty() || text[0] == '#') continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw cic::validation_error("config line " + std::to_string(line_number) +
                                  " is not key=value: '" + text + "'");
    }
    const std::string key = strip_spaces(text.substr(0, eq));
    const std::string value = strip_spaces(text.substr(eq + 1));
    if (key.empty()) {
      throw cic::validation_error("config line " + std::to_string(line_number) +
                                  " has an empty key");
    }
    const std::string flag = "--" + key;
    bool overridden = false;
    for (const std::string& arg : args) {
      if (arg == flag || arg.rfind(flag + "=", 0) == 0) {
        overridden = true;
        break;
      }
    }
    if (!overridden) args.push_back(flag + "=" + value);
  }
  return args;
}

void print_critical_points(const std::vector<cic::scan::CriticalPoint>& points,
                           const std::string& parameter_name) {
  for (const cic::scan::CriticalPoint& point : points) {
    std::printf("critical point at %s = %.6g (score %.3g, %s)\n", parameter_name.c_str(),
                point.location, point.score, point.label.c_str());
  }
  if (points.empty()) std::printf("no critical points detected\n");
}

int run_state(const std::string& in_path, const std::string& side, int starts,
              std::uint64_t seed, int max_iters) {
  const cic::DensityMatrix rho = cic::io::load_state_json(in_path);
  cic::OptimizerOptions opts;
  opts.n_starts = starts;
  opts.seed = seed;
  opts.max_iters = max_iters;
  const cic::CicResult result =
      side == "backward" ? cic::cic_backward(rho, opts) : cic::cic_forward(rho, opts);

  nlohmann::ordered_json payload;
  payload["value"] = result.value;
  nlohmann::ordered_json m = nlohmann::ordered_json::array();
  for (cic::Index k = 0; k < result.argmax_m.size(); ++k) m.push_back(result.argmax_m(k));
  payload["argmax_m"] = std::move(m);
  payload["diagnostics"] = {{"starts", result.diagnostics.starts},
                            {"best_raw", result.diagnostics.best_raw},
                            {"converged", result.diagnostics.converged}};
  std::cout << payload.dump(2) << "\n";
  return kExitOk;
}

int run_xxz(double min, double max, double step, int threads, double z_threshold,
            const OutputOptions& out) {
  const cic::xxz::Scan scan = cic::xxz::scan_range(min, max, step, threads, z_threshold);
  const std::vector<cic::io::Column> columns = {
      {"delta", &scan.delta}, {"eg", &scan.eg},
      {"xx", &scan.xx},       {"zz", &scan.zz},
      {"cic", &scan.value},   {"susceptibility", &scan.susceptibility},
  };
  if (!out.csv_path.empty()) cic::io::write_csv(out.csv_path, columns);
  if (!out.svg_path.empty()) {
    cic::io::write_svg(out.svg_path, scan.delta, scan.susceptibility, scan.critical_points,
                       "delta", "d(cic)/d(delta)", "XXZ chain susceptibility");
  }
  if (!out.json_path.empty()) {
    cic::io::write_text_file(out.json_path,
                             cic::io::scan_json("xxz", columns, scan.critical_points));
  }
  print_critical_points(scan.critical_points, "delta");
  return kExitOk;
}

int run_kitaev(const std::string& line_text, double min, double max, double step,
               const std::string& link_name, double tol, int threads, double z_threshold,
               const OutputOptions& out) {
  const cic::kitaev::LineParameterization line = cic::kitaev::parse_line(line_text);
  cic::kitaev::Link link = cic::kitaev::Link::Z;
  if (link_name == "x") {
    link = cic::kitaev::Link::X;
  } else if (link_name == "y") {
    link = cic::kitaev::Link::Y;
  } else if (link_name != "z") {
    throw cic::validation_error("--link must be one of x, y, z");
  }

  const cic::kitaev::LineScan scan =
      cic::kitaev::line_scan(min, max, step, link, tol, line, threads, z_threshold);
  std::vector<std::string> phase_names;
  phase_names.reserve(scan.phase.size());
  for (cic::kitaev::Phase phase : scan.phase) {
    phase_names.push_back(cic::kitaev::to_string(phase));
  }

  const std::vector<cic::io::Column> columns = {
      {"jz", &scan.jz},
      {"jx", &scan.jx},
      {"jy", &scan.jy},
      {"correlator", &scan.correlator},
      {"cic", &scan.value},
      {"susceptibility", &scan.susceptibility},
  };
  if (!out.csv_path.empty()) {
    cic::io::write_csv(out.csv_path, columns, cic::io::TextColumn{"phase", &phase_names});
  }
  if (!out.svg_path.empty()) {
    cic::io::write_svg(out.svg_path, scan.jz, scan.susceptibility, scan.critical_points, "jz",
                       "d(cic)/d(jz)", "Kitaev honeycomb susceptibility (" + link_name + " link)");
  }
  if (!out.json_path.empty()) {
    cic::io::write_text_file(out.json_path,
                             cic::io::scan_json("kitaev", columns, scan.critical_points));
  }
  print_critical_points(scan.critical_points, "jz");
  return kExitOk;
}

int run_props(const std::string& suite, std::uint64_t seed, int trials, double tol) {
  cic::props::Report report;
  auto append = [&report](const cic::props::Report& part) {
    report.insert(report.end(), part.begin(), part.end());
  };
  if (suite == "all" || suite == "core") append(cic::props::core_suite(seed, trials));
  if (suite == "all" || suite == "cic") append(cic::props::cic_suite(seed, trials));
  if (suite == "all" || suite == "xxz") append(cic::props::xxz_suite(seed));
  if (suite == "all" || suite == "kitaev") append(cic::props::kitaev_suite(seed, tol, 10));
  if (report.empty()) {
    throw cic::validation_error("--suite must be one of all, core, cic, xxz, kitaev");
  }
  for (const cic::props::CheckResult& check : report) {
    std::printf("[%s] %s: %s\n", check.pass ? "PASS" : "FAIL", check.name.c_str(),
                check.detail.c_str());
  }
  const bool ok = cic::props::all_passed(report);
  std::printf("%zu checks, %s\n", report.size(), ok ? "all passed" : "FAILURES present");
  return ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"correlation-induced coherence toolkit"};
  app.require_subcommand(1);
  std::string config_doc;  // consumed before parsing; registered for --help only

  // state
  std::string state_in;
  std::string state_side = "forward";
  int state_starts = 64;
  std::uint64_t state_seed = 0;
  int state_max_iters = 500;
  CLI::App* state_cmd = app.add_subcommand("state", "measure a bipartite state from JSON");
  state_cmd->add_option("--in", state_in, "input density-matrix JSON")->required();
  state_cmd->add_option("--side", state_side, "forward (measure Alice) or backward")
      ->check(CLI::IsMember({"forward", "backward"}));
  state_cmd->add_option("--starts", state_starts, "random optimizer starts");
  state_cmd->add_option("--seed", state_seed, "optimizer seed");
  state_cmd->add_option("--max-iters", state_max_iters, "simplex iteration cap");

  // xxz
  double xxz_min = -2.0, xxz_max = 3.0, xxz_step = 0.01, xxz_z = 8.0;
  int xxz_threads = 1;
  OutputOptions xxz_out;
  CLI::App* xxz_cmd = app.add_subcommand("xxz", "scan the XXZ chain anisotropy");
  xxz_cmd->add_option("--min", xxz_min, "lowest anisotropy");
  xxz_cmd->add_option("--max", xxz_max, "highest anisotropy");
  xxz_cmd->add_option("--step", xxz_step, "grid step");
  xxz_cmd->add_option("--threads", xxz_threads, "scan workers");
  xxz_cmd->add_option("--z-threshold", xxz_z, "kink detection threshold");
  add_output_options(*xxz_cmd, xxz_out);

  // kitaev
  std::string kitaev_line = "jx=jy=(1-jz)/2";
  std::string kitaev_link = "z";
  double kitaev_min = 0.0, kitaev_max = 1.0, kitaev_step = 0.002, kitaev_tol = 1e-6,
         kitaev_z = 8.0;
  int kitaev_threads = 1;
  OutputOptions kitaev_out;
  CLI::App* kitaev_cmd = app.add_subcommand("kitaev", "scan a line in the coupling plane");
  kitaev_cmd->add_option("--line", kitaev_line, "line parameterization, affine in jz");
  kitaev_cmd->add_option("--min", kitaev_min, "lowest jz");
  kitaev_cmd->add_option("--max", kitaev_max, "highest jz");
  kitaev_cmd->add_option("--step", kitaev_step, "grid step");
  kitaev_cmd->add_option("--link", kitaev_link, "link type: x, y or z");
  kitaev_cmd->add_option("--tol", kitaev_tol, "correlator quadrature tolerance");
  kitaev_cmd->add_option("--threads", kitaev_threads, "scan workers");
  kitaev_cmd->add_option("--z-threshold", kitaev_z, "kink detection threshold");
  add_output_options(*kitaev_cmd, kitaev_out);

  // props
  std::string props_suite = "all";
  std::uint64_t props_seed = 0;
  int props_trials = 200;
  double props_tol = 1e-6;
  CLI::App* props_cmd = app.add_subcommand("props", "run the property suites");
  props_cmd->add_option("--suite", props_suite, "all, core, cic, xxz or kitaev");
  props_cmd->add_option("--seed", props_seed, "sampling seed");
  props_cmd->add_option("--trials", props_trials, "random trials per property");
  props_cmd->add_option("--tol", props_tol, "kitaev quadrature tolerance");

  for (CLI::App* cmd : {state_cmd, xxz_cmd, kitaev_cmd, props_cmd}) {
    cmd->add_option("--config", config_doc,
                    "key=value config file mirroring the long options");
  }

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (state_cmd->parsed()) {
      return run_state(state_in, state_side, state_starts, state_seed, state_max_iters);
    }
    if (xxz_cmd->parsed()) {
      return run_xxz(xxz_min, xxz_max, xxz_step, xxz_threads, xxz_z, xxz_out);
    }
    if (kitaev_cmd->parsed()) {
      return run_kitaev(kitaev_line, kitaev_min, kitaev_max, kitaev_step, kitaev_link, kitaev_tol,
                        kitaev_threads, kitaev_z, kitaev_out);
    }
    if (props_cmd->parsed()) {
      return run_props(props_suite, props_seed, props_trials, props_tol);
    }
    std::cerr << app.help();
    return kExitValidation;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  } catch (const cic::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const cic::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
