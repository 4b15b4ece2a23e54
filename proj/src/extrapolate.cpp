#include "polypath/extrapolate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polypath/errors.hpp"

namespace polypath {

namespace {

void note_denominator(double& min_den, const Complex& d) {
  const double m = std::abs(d);
  if (min_den == 0.0 || m < min_den) min_den = m;
}

}  // namespace

ComplexSequence aitken(const ComplexSequence& x) {
  const std::size_t n = x.values.size();
  if (n < 3) throw DimensionMismatch("Aitken needs at least three values");
  ComplexSequence y;
  y.values.resize(n - 2);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const Complex dxk = x.values[k + 1] - x.values[k];
    const Complex ddx = x.values[k + 2] - 2.0 * x.values[k + 1] + x.values[k];
    if (ddx == Complex(0.0))
      throw ZeroSecondDifference("zero second difference at index " + std::to_string(k));
    y.values[k] = x.values[k] - dxk * dxk / ddx;
  }
  if (!x.nodes.empty())
    y.nodes.assign(x.nodes.begin() + 1, x.nodes.end() - 1);
  return y;
}

ExtrapolationReport repeated_aitken(const ComplexSequence& x,
                                    std::optional<Complex> reference) {
  if (x.values.size() < 3) throw DimensionMismatch("repeated Aitken needs length >= 3");
  ExtrapolationReport report;
  ComplexSequence cffs = x;
  int stage = 0;
  while (cffs.values.size() > 2) {
    ComplexSequence a;
    try {
      a = aitken(cffs);
    } catch (const ZeroSecondDifference& e) {
      // An exactly annihilated tail from an earlier stage means the sequence
      // has already converged; only a breakdown on the raw input is an error.
      if (stage == 0)
        throw ZeroSecondDifference(std::string(e.what()) + " in stage " +
                                   std::to_string(stage));
      break;
    }
    for (std::size_t k = 0; k + 2 < cffs.values.size(); ++k) {
      note_denominator(report.min_denominator,
                       cffs.values[k + 2] - 2.0 * cffs.values[k + 1] + cffs.values[k]);
    }
    ExtrapolationStage st;
    st.length = static_cast<int>(cffs.values.size());
    st.estimate = a.values.back();
    if (reference) {
      st.error = std::abs(st.estimate - *reference);
      st.has_error = true;
    }
    report.stages.push_back(st);
    cffs = std::move(a);
    ++stage;
  }
  report.final_value = cffs.values.back();
  return report;
}

ExtrapolationReport rho_table(const ComplexSequence& x) {
  const std::size_t n = x.values.size();
  if (n < 3) throw DimensionMismatch("the rho table needs length >= 3");
  ExtrapolationReport report;

  // rows[k][j] = rho_k with superscript j; row k has n-k entries.
  std::vector<std::vector<Complex>> rows;
  rows.push_back(x.values);
  {
    std::vector<Complex> rho1(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const Complex den = x.values[j + 1] - x.values[j];
      if (den == Complex(0.0))
        throw ZeroRhoDifference("zero difference in rho row 1 at index " + std::to_string(j));
      note_denominator(report.min_denominator, den);
      rho1[j] = (x.node(j + 1) - x.node(j)) / den;
    }
    rows.push_back(std::move(rho1));
  }
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Complex> next(n - k);
    for (std::size_t j = 0; j + k < n; ++j) {
      const Complex den = rows[k - 1][j + 1] - rows[k - 1][j];
      if (den == Complex(0.0))
        throw ZeroRhoDifference("zero difference in rho row " + std::to_string(k) +
                                " at index " + std::to_string(j));
      note_denominator(report.min_denominator, den);
      next[j] = rows[k - 2][j + 1] + (x.node(j + k) - x.node(j)) / den;
    }
    if (k % 2 == 0) {
      ExtrapolationStage st;
      st.length = static_cast<int>(next.size());
      st.estimate = next.back();
      report.stages.push_back(st);
    }
    rows.push_back(std::move(next));
  }
  report.final_value = rows.back().back();
  return report;
}

namespace {

// One depth-2 rho pass: out[j] = v[j+1] + (x(j+2)-x(j)) / (rho1[j+1]-rho1[j]).
ComplexSequence rho2_pass(const ComplexSequence& x, double& min_den) {
  const std::size_t n = x.values.size();
  std::vector<Complex> rho1(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Complex den = x.values[j + 1] - x.values[j];
    if (den == Complex(0.0))
      throw ZeroRhoDifference("zero first difference at index " + std::to_string(j));
    note_denominator(min_den, den);
    rho1[j] = (x.node(j + 1) - x.node(j)) / den;
  }
  ComplexSequence out;
  out.values.resize(n - 2);
  for (std::size_t j = 0; j + 2 < n; ++j) {
    const Complex den = rho1[j + 1] - rho1[j];
    if (den == Complex(0.0))
      throw ZeroRhoDifference("zero rho difference at index " + std::to_string(j));
    note_denominator(min_den, den);
    out.values[j] = x.values[j + 1] + (x.node(j + 2) - x.node(j)) / den;
  }
  if (!x.nodes.empty())
    out.nodes.assign(x.nodes.begin() + 1, x.nodes.end() - 1);
  else {
    out.nodes.resize(n - 2);
    for (std::size_t j = 0; j + 2 < n; ++j) out.nodes[j] = static_cast<double>(j + 2);
  }
  return out;
}

}  // namespace

ExtrapolationReport repeated_rho(const ComplexSequence& x,
                                 std::optional<Complex> reference) {
  if (x.values.size() < 3) throw DimensionMismatch("repeated rho needs length >= 3");
  ExtrapolationReport report;
  ComplexSequence cffs = x;
  int stage = 0;
  while (cffs.values.size() > 2) {
    ComplexSequence next;
    try {
      next = rho2_pass(cffs, report.min_denominator);
    } catch (const ZeroRhoDifference& e) {
      // Same convention as repeated Aitken: an exactly flat later stage
      // signals convergence rather than a breakdown.
      if (stage == 0)
        throw ZeroRhoDifference(std::string(e.what()) + " in stage " +
                                std::to_string(stage));
      break;
    }
    ExtrapolationStage st;
    st.length = static_cast<int>(cffs.values.size());
    st.estimate = next.values.back();
    if (reference) {
      st.error = std::abs(st.estimate - *reference);
      st.has_error = true;
    }
    report.stages.push_back(st);
    cffs = std::move(next);
    ++stage;
  }
  report.final_value = cffs.values.back();
  return report;
}

EndpointExtrapolation extrapolate_endpoint_reports(
    const PathRecord& rec, int tail, ExtrapolationMethod method,
    const std::optional<std::vector<Complex>>& reference) {
  if (tail < 3) throw DimensionMismatch("extrapolation tail must be >= 3");
  if (static_cast<int>(rec.points.size()) < tail)
    throw DimensionMismatch("record has fewer points than the requested tail");
  const std::size_t begin = rec.points.size() - tail;
  const std::size_t ncoords = rec.points.front().coordinates.size();

  EndpointExtrapolation out;
  for (std::size_t c = 0; c < ncoords; ++c) {
    ComplexSequence seq;
    for (std::size_t i = begin; i < rec.points.size(); ++i) {
      seq.values.push_back(rec.points[i].coordinates[c]);
      if (method == ExtrapolationMethod::rho)
        seq.nodes.push_back(rec.points[i].t.real());
    }
    std::optional<Complex> ref;
    if (reference && c < reference->size()) ref = (*reference)[c];
    try {
      ExtrapolationReport report = method == ExtrapolationMethod::aitken
                                       ? repeated_aitken(seq, ref)
                                       : repeated_rho(seq, ref);
      out.values.push_back(report.final_value);
      out.per_coordinate.push_back(std::move(report));
    } catch (const ZeroSecondDifference& e) {
      throw ZeroSecondDifference("coordinate " + std::to_string(c) + ": " + e.what());
    } catch (const ZeroRhoDifference& e) {
      throw ZeroRhoDifference("coordinate " + std::to_string(c) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Complex> extrapolate_endpoint(
    const PathRecord& rec, int tail, ExtrapolationMethod method,
    const std::optional<std::vector<Complex>>& reference) {
  return extrapolate_endpoint_reports(rec, tail, method, reference).values;
}

}  // namespace polypath
