#include "polypath/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polypath/errors.hpp"
#include "polypath/newton.hpp"

namespace polypath {

const char* to_string(TrackStatus status) {
  switch (status) {
    case TrackStatus::running: return "running";
    case TrackStatus::pole_stop: return "pole_stop";
    case TrackStatus::t_end_reached: return "t_end_reached";
    case TrackStatus::step_underflow: return "step_underflow";
    case TrackStatus::corrector_failure: return "corrector_failure";
  }
  return "unknown";
}

namespace {

int newton_iterations_for_degree(int degree) {
  int nit = 1;
  while ((1 << nit) < degree + 1) ++nit;
  return nit + 1;  // one extra full-degree sweep
}

}  // namespace

TrackerState initialize(const Homotopy& h, const SolutionPoint& start_solution,
                        const TrackerConfig& cfg) {
  TrackerState state;
  state.homotopy = h;
  state.config = cfg;
  state.t = start_solution.t.real();

  NewtonOutcome outcome;
  try {
    outcome = newton_correct(h.working, start_solution.coordinates, h.t_index,
                             Complex(state.t, 0.0),
                             {cfg.corrector_iters, cfg.corrector_tol});
  } catch (const SingularMatrix&) {
    throw NotAStartSolution("corrector hit a singular Jacobian at the start point");
  }
  if (!outcome.converged)
    throw NotAStartSolution("corrector did not converge at the start point");

  state.current = outcome.point;
  state.record.points.push_back(state.current);
  return state;
}

void predict_correct(TrackerState& state) {
  if (state.status != TrackStatus::running) return;
  const TrackerConfig& cfg = state.config;
  const Homotopy& h = state.homotopy;
  const int deg = cfg.effective_series_degree();
  const double inf = std::numeric_limits<double>::infinity();

  // Snap to the end of the range once the leftover gap is below the minimum
  // step, so rounding in the step sums cannot strand the path at t_end - ulp.
  if (cfg.t_end - state.t <= cfg.min_step) {
    NewtonOutcome snap;
    try {
      snap = newton_correct(h.working, state.current.coordinates, h.t_index,
                            Complex(cfg.t_end, 0.0),
                            {cfg.corrector_iters, cfg.corrector_tol});
    } catch (const SingularMatrix&) {
      state.status = TrackStatus::corrector_failure;
      return;
    }
    if (!snap.converged) {
      state.status = TrackStatus::corrector_failure;
      return;
    }
    SolutionPoint predicted_end = state.current;
    predicted_end.t = Complex(cfg.t_end, 0.0);
    state.t = cfg.t_end;
    state.current = snap.point;
    state.step_count += 1;
    state.last_predicted = predicted_end;
    state.record.points.push_back(state.current);
    state.record.predicted.push_back(predicted_end);
    state.record.poles.push_back(state.last_pole);
    state.status = TrackStatus::t_end_reached;
    return;
  }

  SolutionPoint center = state.current;
  center.t = Complex(state.t, 0.0);

  SeriesVector series;
  std::vector<PadeApproximant> pades;
  try {
    series = series_newton_at_point(h.working, center, h.t_index, deg,
                                    newton_iterations_for_degree(deg));
    pades = build_pades(series, cfg.pade_L, cfg.pade_M);
  } catch (const Error&) {
    // A singular Jacobian or fully degenerate series at the current point.
    state.status = TrackStatus::corrector_failure;
    return;
  }

  // Convergence radius from the Fabry ratio of every component.
  double fabry_radius = inf;
  for (const TruncatedSeries& s : series.components) {
    if (s[s.degree()] == Complex(0.0)) continue;
    fabry_radius = std::min(fabry_radius, fabry_ratio(s).modulus);
  }

  // Closest Pade pole, relative to the expansion center.
  double pole_radius = inf;
  Complex pole_location{inf, 0.0};
  bool have_pole = false;
  for (const PadeApproximant& p : pades) {
    if (p.denominator_degree() < 1) continue;
    for (const PoleEstimate& pe : pade_poles(p)) {
      if (pe.modulus < pole_radius) {
        pole_radius = pe.modulus;
        pole_location = pe.location;
        have_pole = true;
      }
    }
  }

  double radius = std::min(fabry_radius, pole_radius);
  double h_step = std::min({cfg.beta_pole * radius, cfg.max_step, cfg.t_end - state.t});
  if (!std::isfinite(h_step) || h_step <= 0.0) h_step = std::min(cfg.max_step, cfg.t_end - state.t);

  NewtonOutcome outcome;
  std::vector<Complex> predicted;
  double t_new = state.t;
  bool accepted = false;
  for (int attempt = 0; attempt <= cfg.max_halvings; ++attempt) {
    if (h_step < cfg.min_step) {
      state.status = TrackStatus::step_underflow;
      return;
    }
    predicted.clear();
    for (const PadeApproximant& p : pades)
      predicted.push_back(p.evaluate(Complex(h_step, 0.0)));
    t_new = (h_step >= cfg.t_end - state.t) ? cfg.t_end : state.t + h_step;
    try {
      outcome = newton_correct(h.working, predicted, h.t_index, Complex(t_new, 0.0),
                               {cfg.corrector_iters, cfg.corrector_tol});
      if (outcome.converged) {
        accepted = true;
        break;
      }
    } catch (const SingularMatrix&) {
      // fall through to halving
    }
    h_step *= 0.5;
  }
  if (!accepted) {
    state.status = TrackStatus::corrector_failure;
    return;
  }

  state.t = t_new;
  state.current = outcome.point;
  state.step_count += 1;

  state.last_predicted = SolutionPoint{};
  state.last_predicted.t = Complex(t_new, 0.0);
  state.last_predicted.coordinates = predicted;

  // Absolute pole position, as in the step-by-step loop: the new t value
  // plus the pole location of the series expanded at the previous point.
  PoleEstimate abs_pole;
  if (have_pole) {
    abs_pole.location = Complex(t_new, 0.0) + pole_location;
    abs_pole.modulus = pole_radius;
  } else if (std::isfinite(fabry_radius)) {
    // No Pade pole available; fall back to the Fabry location.
    bool first = true;
    for (const TruncatedSeries& s : series.components) {
      if (s[s.degree()] == Complex(0.0)) continue;
      const PoleEstimate fe = fabry_ratio(s);
      if (first || fe.modulus < abs_pole.modulus) {
        abs_pole.location = Complex(t_new, 0.0) + fe.location;
        abs_pole.modulus = fe.modulus;
        first = false;
      }
    }
  } else {
    abs_pole.location = Complex(inf, 0.0);
    abs_pole.modulus = inf;
  }
  state.last_pole = abs_pole;

  state.record.points.push_back(state.current);
  state.record.predicted.push_back(state.last_predicted);
  state.record.poles.push_back(abs_pole);

  if (std::abs(abs_pole.location - Complex(cfg.t_end, 0.0)) <= cfg.stop_pole_gap)
    state.status = TrackStatus::pole_stop;
  else if (state.t >= cfg.t_end)
    state.status = TrackStatus::t_end_reached;
}

TrackResult track_to_singularity(const Homotopy& h,
                                 const SolutionPoint& start_solution,
                                 const TrackerConfig& cfg) {
  TrackerState state = initialize(h, start_solution, cfg);
  const int max_steps = 100000;
  while (state.status == TrackStatus::running && state.step_count < max_steps)
    predict_correct(state);
  TrackResult result;
  result.record = std::move(state.record);
  result.status = state.status;
  result.final_point = state.current;
  result.variable_names = h.unknown_names();
  return result;
}

std::vector<PredictionCircle> prediction_circles(const PathRecord& rec) {
  std::vector<PredictionCircle> circles;
  for (std::size_t i = 0; i < rec.predicted.size(); ++i) {
    const SolutionPoint& accepted = rec.points[i + 1];
    const SolutionPoint& pred = rec.predicted[i];
    double sum = 0.0;
    for (std::size_t k = 0; k < accepted.coordinates.size(); ++k)
      sum += std::norm(accepted.coordinates[k] - pred.coordinates[k]);
    circles.push_back(PredictionCircle{accepted.coordinates, std::sqrt(sum)});
  }
  return circles;
}

}  // namespace polypath
