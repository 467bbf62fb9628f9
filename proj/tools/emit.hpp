#pragma once

#include <string>

#include "json.hpp"
#include "triq/sweep.hpp"

namespace triq::cli {

// Deterministic number formatting for artifacts: fixed 17-significant-digit
// general form for data cells, shortest round-trip decimal for labels and
// geometry.
std::string format_value(double x);
std::string format_label(double x);

// CSV per RFC-4180 conventions: header row, comma separator, '.' decimal
// point, LF line endings, quoting only where a field needs it. NaN values
// (failed points) emit as empty fields; the error column says why.
std::string csv_from_sweep(const triq::SweepResult& result);

// JSON document for a sweep: the effective config, the column list, and row
// arrays (null for failed values).
std::string json_from_sweep(const triq::SweepResult& result,
                            const nlohmann::ordered_json& config_echo);

enum class SvgKind { heatmap, lines };

// Self-contained SVG. Heatmap needs two axes with >= 2 points each and
// exactly one value column; lines takes one axis (one polyline per value
// column) or two axes with one value column (axis1 becomes the series,
// axis2 the x coordinate). Violations throw errc::usage. config_echo is
// embedded as an XML comment in the artifact header.
std::string svg_from_sweep(const triq::SweepResult& result, SvgKind kind,
                           const std::string& config_echo);

}  // namespace triq::cli
