// Command-line front end: parse polynomial systems, expand Taylor series,
// track paths toward singular endpoints, extrapolate path tails, and emit
// phase-portrait grid data for external plotting.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polypath/errors.hpp"
#include "polypath/extrapolate.hpp"
#include "polypath/homotopy.hpp"
#include "polypath/io.hpp"
#include "polypath/parse.hpp"
#include "polypath/phase.hpp"
#include "polypath/tracker.hpp"

namespace {

using namespace polypath;
using nlohmann::json;

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PolynomialSystem read_system(const std::string& path) {
  if (!std::ifstream(path)) throw UsageError("cannot open '" + path + "'");
  return parse_system_file(path);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write output file '" + path + "'");
  out << contents;
}

// "x=1,y=0.5+0.2*I" -> name/value assignments.
std::map<std::string, Complex> parse_assignments(const std::string& text) {
  std::map<std::string, Complex> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("expected name=value in solution string, got '" + item + "'");
    std::string name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    values[name] = parse_complex(item.substr(eq + 1));
  }
  if (values.empty()) throw UsageError("empty solution string");
  return values;
}

SolutionPoint solution_from_assignments(const std::map<std::string, Complex>& values,
                                        const std::vector<std::string>& unknowns,
                                        const std::string& parameter) {
  SolutionPoint point;
  for (const std::string& name : unknowns) {
    auto it = values.find(name);
    if (it == values.end())
      throw UsageError("solution string does not assign variable '" + name + "'");
    point.coordinates.push_back(it->second);
  }
  if (auto it = values.find(parameter); it != values.end()) point.t = it->second;
  return point;
}

std::vector<double> parse_doubles(const std::string& text, std::size_t count,
                                  const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.size() != count)
    throw UsageError(std::string("expected ") + std::to_string(count) + " values for " + what);
  return out;
}

Complex random_unit_gamma(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  // Fixed mapping instead of a distribution, for cross-platform determinism.
  const double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;  // [0,1)
  const double angle = 2.0 * M_PI * u;
  return Complex(std::cos(angle), std::sin(angle));
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

int cmd_series(const std::string& system_path, const std::string& solution,
               int idx1, int maxdeg, int nit, const std::string& out,
               const std::string& format) {
  const PolynomialSystem sys = read_system(system_path);
  if (sys.variables.size() != sys.polynomials.size() + 1)
    throw UsageError("series expansion needs n polynomials in n+1 variables");
  const int idx = (idx1 > 0 ? idx1 : static_cast<int>(sys.variables.size())) - 1;
  if (idx < 0 || idx >= static_cast<int>(sys.variables.size()))
    throw UsageError("--idx out of range");

  std::vector<std::string> unknowns;
  for (int j = 0; j < static_cast<int>(sys.variables.size()); ++j)
    if (j != idx) unknowns.push_back(sys.variables[j]);
  const SolutionPoint start = solution_from_assignments(
      parse_assignments(solution), unknowns, sys.variables[idx]);

  const SeriesVector series = series_newton_at_point(sys, start, idx, maxdeg, nit);

  // Fabry estimate: nearest singularity over all components, offset to the
  // absolute t-plane.
  json fabry = json::array();
  for (std::size_t k = 0; k < series.components.size(); ++k) {
    const TruncatedSeries& s = series.components[k];
    if (s[s.degree()] == Complex(0.0)) continue;
    const PoleEstimate est = fabry_ratio(s);
    fabry.push_back(json{{"component", unknowns[k]},
                         {"pole_re", start.t.real() + est.location.real()},
                         {"pole_im", start.t.imag() + est.location.imag()},
                         {"modulus", est.modulus}});
  }
  json jout{{"parameter", sys.variables[idx]}, {"fabry", fabry}};
  const std::string csv = series_to_csv(series, unknowns);

  if (!out.empty()) {
    write_file(out + ".series.csv", csv);
    write_file(out + ".fabry.json", jout.dump(2) + "\n");
  }
  if (format == "json") {
    std::cout << jout.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << csv;
  } else {
    for (std::size_t k = 0; k < series.components.size(); ++k)
      std::cout << unknowns[k] << "(" << sys.variables[idx]
                << ") = " << series_to_string(series.components[k], sys.variables[idx])
                << "\n";
    std::cout << "fabry estimates:\n" << fabry.dump(2) << "\n";
  }
  return 0;
}

int cmd_track(const std::string& system_path, const std::string& start_path,
              const std::string& solution, const std::string& gamma_text,
              unsigned long long seed, int idx1, const TrackerConfig& cfg,
              const std::string& out, const std::string& format) {
  Homotopy homotopy;
  if (start_path == "natural") {
    const PolynomialSystem sys = read_system(system_path);
    const int idx = (idx1 > 0 ? idx1 : static_cast<int>(sys.variables.size())) - 1;
    homotopy = make_natural_homotopy(sys, idx);
  } else {
    const PolynomialSystem target = read_system(system_path);
    const PolynomialSystem start = read_system(start_path);
    const Complex gamma = (gamma_text == "random") ? random_unit_gamma(seed)
                                                   : parse_complex(gamma_text);
    homotopy = make_artificial_homotopy(target, start, gamma);
  }

  const std::vector<std::string> unknowns = homotopy.unknown_names();
  const SolutionPoint start_solution = solution_from_assignments(
      parse_assignments(solution), unknowns,
      homotopy.working.variables[homotopy.t_index]);

  TrackResult result;
  try {
    result = track_to_singularity(homotopy, start_solution, cfg);
  } catch (const NotAStartSolution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }

  const json jrecord = record_to_json(result.record, unknowns, result.status);
  if (!out.empty()) {
    write_file(out + ".record.json", jrecord.dump(2) + "\n");
    write_file(out + ".circles.csv", circles_to_csv(prediction_circles(result.record)));
  }
  if (format == "json") {
    std::cout << jrecord.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << record_to_csv(result.record, unknowns);
  } else {
    std::cout << "status : " << to_string(result.status) << "  ("
              << result.record.points.size() << " points)\n"
              << format_solution_block(result.final_point, unknowns);
  }
  if (result.status == TrackStatus::step_underflow ||
      result.status == TrackStatus::corrector_failure) {
    std::cerr << "error: tracker stopped with status " << to_string(result.status)
              << "\n";
    return kExitNumeric;
  }
  return 0;
}

int cmd_extrapolate(const std::string& record_path, int tail,
                    const std::string& method_name, const std::string& reference,
                    const std::string& out, const std::string& format) {
  std::vector<std::string> variables;
  const PathRecord rec = record_from_json(load_json(record_path), &variables);
  if (tail < 3 || static_cast<int>(rec.points.size()) < tail)
    throw UsageError("--tail must be >= 3 and at most the record length (" +
                     std::to_string(rec.points.size()) + ")");
  ExtrapolationMethod method;
  if (method_name == "aitken") {
    method = ExtrapolationMethod::aitken;
  } else if (method_name == "rho") {
    method = ExtrapolationMethod::rho;
  } else {
    throw UsageError("--method must be aitken or rho");
  }
  std::optional<std::vector<Complex>> ref;
  if (!reference.empty()) {
    std::vector<Complex> values;
    std::stringstream ss(reference);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_complex(item));
    ref = std::move(values);
  }

  const EndpointExtrapolation result =
      extrapolate_endpoint_reports(rec, tail, method, ref);

  json jout = json::array();
  for (std::size_t c = 0; c < result.per_coordinate.size(); ++c) {
    json entry = report_to_json(result.per_coordinate[c]);
    entry["coordinate"] = c < variables.size() ? variables[c] : std::to_string(c);
    jout.push_back(entry);
  }
  if (!out.empty()) write_file(out + ".report.json", jout.dump(2) + "\n");
  if (format == "json") {
    std::cout << jout.dump(2) << "\n";
  } else {
    for (std::size_t c = 0; c < result.per_coordinate.size(); ++c) {
      const std::string name = c < variables.size() ? variables[c] : std::to_string(c);
      std::cout << "coordinate " << name << " :\n"
                << report_to_text(result.per_coordinate[c]);
    }
  }
  return 0;
}

int cmd_phase(const std::string& input_path, const std::string& domain,
              const std::string& resolution, const std::string& out,
              const std::string& format) {
  const json j = load_json(input_path);
  std::vector<Complex> poles;
  if (j.is_object() && j.contains("poles") && !j.at("poles").empty() &&
      j.at("poles").front().is_object()) {
    // a PathRecord: take the first twelve poles
    const PathRecord rec = record_from_json(j);
    for (std::size_t i = 0; i < rec.poles.size() && i < 12; ++i)
      poles.push_back(rec.poles[i].location);
  } else {
    const json& arr = j.is_object() ? j.at("poles") : j;
    for (const auto& p : arr) poles.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  }
  const std::vector<double> dom = parse_doubles(domain, 4, "--domain");
  const std::vector<double> res = parse_doubles(resolution, 2, "--resolution");
  const PhaseGrid grid = phase_grid(poles, dom[0], dom[1], dom[2], dom[3],
                                    static_cast<int>(res[0]), static_cast<int>(res[1]));
  const std::string csv = phase_to_csv(grid);
  if (!out.empty()) write_file(out + ".phase.csv", csv);
  if (format == "csv" || format == "text") std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path tracking and extrapolation toward singular endpoints of "
               "polynomial homotopies"};
  app.require_subcommand(1);

  std::string system_path, start_path = "natural", solution, gamma = "random";
  std::string record_path, method = "aitken", reference, domain = "0,1.1,-0.3,0.3";
  std::string resolution = "64,32", out, format = "text";
  unsigned long long seed = 0;
  int maxdeg = 16, nit = 5, idx = 0, tail = 7;
  TrackerConfig cfg;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "output file prefix");
    cmd->add_option("--format", format, "stdout format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* series = app.add_subcommand("series", "Taylor expansion and Fabry estimate");
  series->add_option("--system", system_path, "system file")->required();
  series->add_option("--solution", solution, "start solution, e.g. \"x=1\"")->required();
  series->add_option("--idx", idx, "1-based parameter variable index (default: last)");
  series->add_option("--maxdeg", maxdeg, "truncation degree");
  series->add_option("--nit", nit, "Newton iterations");
  add_out(series);

  CLI::App* track = app.add_subcommand("track", "track one path toward t = 1");
  track->add_option("--system", system_path, "target system file")->required();
  track->add_option("--start", start_path, "start system file, or 'natural'");
  track->add_option("--solution", solution, "start solution, e.g. \"x=1,y=1\"")->required();
  track->add_option("--gamma", gamma, "gamma constant, or 'random'");
  track->add_option("--seed", seed, "seed for random gamma");
  track->add_option("--idx", idx, "1-based parameter index (natural homotopies)");
  track->add_option("--pade-l", cfg.pade_L, "Pade numerator degree");
  track->add_option("--pade-m", cfg.pade_M, "Pade denominator degree");
  track->add_option("--beta", cfg.beta_pole, "step fraction of the pole radius");
  track->add_option("--stop-gap", cfg.stop_pole_gap, "pole distance to t=1 that stops");
  add_out(track);

  CLI::App* extrapolate = app.add_subcommand("extrapolate", "accelerate a path tail");
  extrapolate->add_option("record", record_path, "PathRecord JSON file")->required();
  extrapolate->add_option("--tail", tail, "number of tail points");
  extrapolate->add_option("--method", method, "aitken or rho");
  extrapolate->add_option("--reference", reference, "known endpoint, e.g. \"1,2\"");
  add_out(extrapolate);

  CLI::App* phase = app.add_subcommand("phase", "phase grid of sum 1/(z - pole)");
  phase->add_option("input", record_path, "record JSON or poles JSON")->required();
  phase->add_option("--domain", domain, "re_min,re_max,im_min,im_max");
  phase->add_option("--resolution", resolution, "nx,ny");
  add_out(phase);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (series->parsed())
      return cmd_series(system_path, solution, idx, maxdeg, nit, out, format);
    if (track->parsed())
      return cmd_track(system_path, start_path, solution, gamma, seed, idx, cfg,
                       out, format);
    if (extrapolate->parsed())
      return cmd_extrapolate(record_path, tail, method, reference, out, format);
    if (phase->parsed())
      return cmd_phase(record_path, domain, resolution, out, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndeclaredVariable& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ExponentError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
