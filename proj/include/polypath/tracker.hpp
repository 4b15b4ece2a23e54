#ifndef POLYPATH_TRACKER_HPP
#define POLYPATH_TRACKER_HPP

#include "polypath/homotopy.hpp"
#include "polypath/pade.hpp"
#include "polypath/series.hpp"
#include "polypath/solution.hpp"

namespace polypath {

enum class TrackStatus {
  running,
  pole_stop,
  t_end_reached,
  step_underflow,
  corrector_failure,
};

const char* to_string(TrackStatus status);

/// A priori step control parameters.  The step is beta_pole times the
/// smaller of the Fabry radius and the closest Pade pole modulus, capped by
/// max_step and the remaining distance to t_end.
struct TrackerConfig {
  int pade_L = 4;
  int pade_M = 2;
  int series_degree = -1;  // -1: pade_L + pade_M (one coefficient per term of [L/M])
  double beta_pole = 0.5;
  double max_step = 0.1;
  double min_step = 1e-8;
  double corrector_tol = 1e-12;
  int corrector_iters = 4;
  double stop_pole_gap = 1e-4;
  double t_end = 1.0;
  int max_halvings = 10;

  int effective_series_degree() const {
    return series_degree >= 0 ? series_degree : pade_L + pade_M;
  }
};

/// Accepted points, Pade predictions and closest-pole estimates for one
/// tracked path.  poles holds absolute t-plane positions; predicted and
/// poles stay one entry shorter than points (the start has no prediction).
struct PathRecord {
  std::vector<SolutionPoint> points;
  std::vector<SolutionPoint> predicted;
  std::vector<PoleEstimate> poles;
};

struct PredictionCircle {
  std::vector<Complex> center;
  double radius = 0.0;
};

struct TrackerState {
  Homotopy homotopy;
  TrackerConfig config;
  SolutionPoint current;
  double t = 0.0;
  SolutionPoint last_predicted;
  PoleEstimate last_pole{};
  int step_count = 0;
  TrackStatus status = TrackStatus::running;
  PathRecord record;
};

/// Corrects the start solution at t = 0 and sets up a running state.
/// Throws NotAStartSolution when the corrector does not converge there.
TrackerState initialize(const Homotopy& h, const SolutionPoint& start_solution,
                        const TrackerConfig& cfg);

/// One tracker step: expand a Taylor series at the current point, estimate
/// the convergence radius from the Fabry ratio and the closest Pade pole,
/// step a beta_pole fraction of it, predict by evaluating the Pade
/// approximants, correct with Newton, and record the accepted point, the
/// prediction and the absolute pole position.  Corrector failure halves the
/// step; terminal failures are carried in state.status, not thrown.
void predict_correct(TrackerState& state);

struct TrackResult {
  PathRecord record;
  TrackStatus status = TrackStatus::running;
  SolutionPoint final_point;
  std::vector<std::string> variable_names;
};

/// Runs predict_correct until a terminal status.
TrackResult track_to_singularity(const Homotopy& h,
                                 const SolutionPoint& start_solution,
                                 const TrackerConfig& cfg);

/// Circle i is centered at accepted point i+1 with radius equal to the
/// Euclidean distance to its prediction.
std::vector<PredictionCircle> prediction_circles(const PathRecord& rec);

}  // namespace polypath

#endif
