#ifndef POLYPATH_EXTRAPOLATE_HPP
#define POLYPATH_EXTRAPOLATE_HPP

#include <optional>

#include "polypath/tracker.hpp"

namespace polypath {

/// A sequence of complex values with optional interpolation points; when
/// nodes is empty the rho recursions use x(n) = n+1.
struct ComplexSequence {
  std::vector<Complex> values;
  std::vector<double> nodes;

  double node(std::size_t n) const {
    return nodes.empty() ? static_cast<double>(n + 1) : nodes[n];
  }
};

struct ExtrapolationStage {
  int length = 0;  // sequence length the stage was computed from
  Complex estimate{0.0, 0.0};
  double error = 0.0;  // |estimate - reference|, valid when has_error
  bool has_error = false;
};

struct ExtrapolationReport {
  std::vector<ExtrapolationStage> stages;
  Complex final_value{0.0, 0.0};
  /// Magnitude of the smallest denominator met in the recursions; a small
  /// value flags instability.  Denominators are tested for exact zero only.
  double min_denominator = 0.0;
};

/// y_k = x_k - (dx_k)^2 / (ddx_k).  Output is two entries shorter.
/// Throws ZeroSecondDifference on an exactly vanishing second difference.
ComplexSequence aitken(const ComplexSequence& x);

/// Applies aitken until fewer than three values remain, recording the last
/// element of each stage (and its error when a reference is given).
ExtrapolationReport repeated_aitken(const ComplexSequence& x,
                                    std::optional<Complex> reference = {});

/// The full rho table; stages record the last element of every even-order
/// row, final_value is the last element of the deepest diagonal.  Throws
/// ZeroRhoDifference on an exactly vanishing denominator.
ExtrapolationReport rho_table(const ComplexSequence& x);

/// Applies the depth-2 rho transform repeatedly on successive outputs,
/// carrying the interpolation points along.
ExtrapolationReport repeated_rho(const ComplexSequence& x,
                                 std::optional<Complex> reference = {});

enum class ExtrapolationMethod { aitken, rho };

struct EndpointExtrapolation {
  std::vector<ExtrapolationReport> per_coordinate;
  std::vector<Complex> values;
};

/// Applies the chosen repeated method to the tail of each coordinate of a
/// tracked path independently.  For rho the nodes are the t values of the
/// tail points.  Kernel errors are rethrown naming the coordinate index.
EndpointExtrapolation extrapolate_endpoint_reports(
    const PathRecord& rec, int tail, ExtrapolationMethod method,
    const std::optional<std::vector<Complex>>& reference = {});

std::vector<Complex> extrapolate_endpoint(
    const PathRecord& rec, int tail, ExtrapolationMethod method,
    const std::optional<std::vector<Complex>>& reference = {});

}  // namespace polypath

#endif
