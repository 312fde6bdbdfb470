#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numwalk/classify.hpp"
#include "numwalk/rational.hpp"
#include "numwalk/walk.hpp"

namespace numwalk {

/// One CSV row per walk state, initial pose included:
///   step,a,b,dir,R
std::string path_csv(const Path& p);

/// Winding profile as CSV: step,winding. profile[i] is the count after i steps.
std::string winding_csv(const std::vector<std::int64_t>& profile);

/// Turn tally and its exact normalized value per state: step,R,torsion.
std::string torsion_csv(const Path& p);

/// Standalone SVG document: one polyline through the Cartesian embedding of
/// the path, start point marked, view box fitted around the path with a one
/// unit margin. All coordinates use six decimal places, so identical input
/// yields byte-identical output.
std::string render_svg(const Path& p);

/// Pinned column set shared by the CSV and JSONL classification records.
/// Cells that only apply to closed walks are empty (CSV) or null (JSONL)
/// for drifting ones.
std::string classification_csv_header();
std::string classification_csv_row(const Rational& r, const ClassifiedWalk& w);
std::string classification_jsonl(const Rational& r, const ClassifiedWalk& w);

}  // namespace numwalk
