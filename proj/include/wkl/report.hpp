#pragma once

#include <string>

#include "json.hpp"
#include "wkl/bounds.hpp"
#include "wkl/intervals.hpp"
#include "wkl/moments.hpp"

namespace wkl {

using ordered_json = nlohmann::ordered_json;

/// Stable decimal rendering used by the CSV writers.
std::string format_double(double x);

ordered_json cyclo_json(const CycloVec& v);
ordered_json params_json(const KlParams& P);
ordered_json bound_report_json(const BoundReport& R, const RingSpec& spec);
ordered_json interval_survey_json(const IntervalSurvey& S);

std::string bounds_csv_header();
std::string bounds_csv_row(const BoundReport& R);
std::string intervals_csv(const IntervalSurvey& S);

/// Top-level envelope, schema "wkl-report/1".
ordered_json report_envelope(const std::string& command);

std::string element_string(const RingSpec& spec, int64_t index);

} // namespace wkl
