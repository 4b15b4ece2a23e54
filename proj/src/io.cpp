#include "polypath/io.hpp"

#include <cmath>
#include <cstdio>

#include "polypath/errors.hpp"
#include "polypath/parse.hpp"

namespace polypath {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

json point_to_json(const SolutionPoint& p) {
  json coords = json::array();
  for (const Complex& c : p.coordinates)
    coords.push_back(json::array({c.real(), c.imag()}));
  return json{{"t_re", p.t.real()},      {"t_im", p.t.imag()},
              {"coordinates", coords},   {"m", p.multiplicity},
              {"err", p.err},            {"rco", p.rco},
              {"res", p.res}};
}

SolutionPoint point_from_json(const json& j) {
  SolutionPoint p;
  p.t = Complex(j.at("t_re").get<double>(), j.at("t_im").get<double>());
  for (const auto& c : j.at("coordinates"))
    p.coordinates.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  p.multiplicity = j.value("m", 1);
  p.err = j.value("err", 0.0);
  p.rco = j.value("rco", 1.0);
  p.res = j.value("res", 0.0);
  return p;
}

double finite_or_large(double v) { return std::isfinite(v) ? v : 1e308; }

}  // namespace

json record_to_json(const PathRecord& rec, const std::vector<std::string>& variables,
                    TrackStatus status) {
  json points = json::array();
  for (const SolutionPoint& p : rec.points) points.push_back(point_to_json(p));
  json predicted = json::array();
  for (const SolutionPoint& p : rec.predicted) predicted.push_back(point_to_json(p));
  json poles = json::array();
  for (const PoleEstimate& p : rec.poles) poles.push_back(pole_to_json(p));
  return json{{"variables", variables}, {"status", to_string(status)},
              {"points", points},       {"predicted", predicted},
              {"poles", poles}};
}

PathRecord record_from_json(const json& j, std::vector<std::string>* variables,
                            std::string* status) {
  PathRecord rec;
  for (const auto& p : j.at("points")) rec.points.push_back(point_from_json(p));
  for (const auto& p : j.at("predicted")) rec.predicted.push_back(point_from_json(p));
  for (const auto& p : j.at("poles")) {
    PoleEstimate pe;
    pe.location = Complex(p.at("pole_re").get<double>(), p.at("pole_im").get<double>());
    pe.modulus = p.value("modulus", std::abs(pe.location));
    rec.poles.push_back(pe);
  }
  if (variables && j.contains("variables"))
    *variables = j.at("variables").get<std::vector<std::string>>();
  if (status && j.contains("status")) *status = j.at("status").get<std::string>();
  return rec;
}

json pole_to_json(const PoleEstimate& pole) {
  return json{{"pole_re", finite_or_large(pole.location.real())},
              {"pole_im", finite_or_large(pole.location.imag())},
              {"modulus", finite_or_large(pole.modulus)}};
}

std::string record_to_csv(const PathRecord& rec,
                          const std::vector<std::string>& variables) {
  std::string out = "t_re,t_im";
  for (const std::string& v : variables) out += "," + v + "_re," + v + "_im";
  out += ",err,rco,res,pole_re,pole_im\n";
  for (std::size_t i = 0; i < rec.points.size(); ++i) {
    const SolutionPoint& p = rec.points[i];
    out += format_double(p.t.real()) + "," + format_double(p.t.imag());
    for (const Complex& c : p.coordinates)
      out += "," + format_double(c.real()) + "," + format_double(c.imag());
    out += "," + format_double(p.err) + "," + format_double(p.rco) + "," +
           format_double(p.res);
    if (i >= 1 && i - 1 < rec.poles.size()) {
      const PoleEstimate& pole = rec.poles[i - 1];
      out += "," + format_double(finite_or_large(pole.location.real())) + "," +
             format_double(finite_or_large(pole.location.imag()));
    } else {
      out += ",,";
    }
    out += "\n";
  }
  return out;
}

json report_to_json(const ExtrapolationReport& report) {
  json stages = json::array();
  for (const ExtrapolationStage& s : report.stages) {
    json st{{"length", s.length},
            {"estimate", json::array({s.estimate.real(), s.estimate.imag()})}};
    if (s.has_error) st["error"] = s.error;
    stages.push_back(st);
  }
  return json{{"stages", stages},
              {"final", json::array({report.final_value.real(), report.final_value.imag()})},
              {"min_denominator", report.min_denominator}};
}

namespace {

std::string complex_repr(const Complex& z) {
  // Python-style complex repr: (re+imj).
  char buf[80];
  std::snprintf(buf, sizeof(buf), "(%.16g%+.16gj)", z.real(), z.imag());
  return buf;
}

}  // namespace

std::string report_to_text(const ExtrapolationReport& report) {
  std::string out;
  for (const ExtrapolationStage& s : report.stages) {
    out += "on " + std::to_string(s.length) + " : " + complex_repr(s.estimate);
    if (s.has_error) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " error : %.2e", s.error);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string series_to_csv(const SeriesVector& series,
                          const std::vector<std::string>& names) {
  std::string out = "order";
  for (std::size_t k = 0; k < series.components.size(); ++k) {
    const std::string name = k < names.size() ? names[k] : "c" + std::to_string(k);
    out += "," + name + "_re," + name + "_im";
  }
  out += "\n";
  for (int n = 0; n <= series.degree(); ++n) {
    out += std::to_string(n);
    for (const TruncatedSeries& s : series.components)
      out += "," + format_double(s[n].real()) + "," + format_double(s[n].imag());
    out += "\n";
  }
  return out;
}

std::string series_to_string(const TruncatedSeries& s, const std::string& parameter) {
  Polynomial p(1);
  for (int n = 0; n <= s.degree(); ++n) p.add_term(s[n], {n});
  return format_polynomial(p, {parameter});
}

std::string phase_to_csv(const PhaseGrid& grid) {
  std::string out = "re,im,phase,magnitude\n";
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const Complex z = grid.cell(ix, iy);
      const std::size_t idx = static_cast<std::size_t>(iy) * grid.nx + ix;
      out += format_double(z.real()) + "," + format_double(z.imag()) + "," +
             format_double(grid.phase[idx]) + ",";
      const double mag = grid.magnitude[idx];
      out += std::isfinite(mag) ? format_double(mag) : "inf";
      out += "\n";
    }
  }
  return out;
}

std::string circles_to_csv(const std::vector<PredictionCircle>& circles) {
  std::string out = "index";
  if (!circles.empty()) {
    for (std::size_t k = 0; k < circles.front().center.size(); ++k)
      out += ",c" + std::to_string(k) + "_re,c" + std::to_string(k) + "_im";
  }
  out += ",radius\n";
  for (std::size_t i = 0; i < circles.size(); ++i) {
    out += std::to_string(i);
    for (const Complex& c : circles[i].center)
      out += "," + format_double(c.real()) + "," + format_double(c.imag());
    out += "," + format_double(circles[i].radius) + "\n";
  }
  return out;
}

}  // namespace polypath
