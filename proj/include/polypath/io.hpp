#ifndef POLYPATH_IO_HPP
#define POLYPATH_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "polypath/extrapolate.hpp"
#include "polypath/phase.hpp"
#include "polypath/series.hpp"
#include "polypath/tracker.hpp"

namespace polypath {

// PathRecord <-> JSON.  Field names t_re, t_im, err, rco, res, pole_re,
// pole_im are contractual; coordinates are [re, im] pairs.
nlohmann::json record_to_json(const PathRecord& rec,
                              const std::vector<std::string>& variables,
                              TrackStatus status);
PathRecord record_from_json(const nlohmann::json& j,
                            std::vector<std::string>* variables = nullptr,
                            std::string* status = nullptr);

/// One CSV row per accepted step (the start point has no pole columns).
std::string record_to_csv(const PathRecord& rec,
                          const std::vector<std::string>& variables);

nlohmann::json report_to_json(const ExtrapolationReport& report);

/// Text table in the layout
///     on 7 : (2.0137784911225802+0.004510752594407998j) error : 1.45e-02
std::string report_to_text(const ExtrapolationReport& report);

nlohmann::json pole_to_json(const PoleEstimate& pole);

/// Coefficient table, columns: order, then re/im per component.
std::string series_to_csv(const SeriesVector& series,
                          const std::vector<std::string>& names);

/// One polynomial-in-t string per component, reparseable by the parser.
std::string series_to_string(const TruncatedSeries& s,
                             const std::string& parameter);

std::string phase_to_csv(const PhaseGrid& grid);

std::string circles_to_csv(const std::vector<PredictionCircle>& circles);

/// Lossless formatting for doubles ("%.17g").
std::string format_double(double v);

}  // namespace polypath

#endif
