#pragma once

#include <string>
#include <vector>

#include "mixvol/criteria.hpp"
#include "mixvol/subdivision.hpp"
#include "mixvol/system.hpp"

#include <json.hpp>

namespace mixvol {

using Json = nlohmann::ordered_json;

// Coordinates serialize as plain integers when integral and as exact
// fraction strings "p/q" otherwise; both forms (and quoted integers) are
// accepted on input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

/// {"dim": n, "points": [[...], ...]}. Reading always re-hulls: the file
/// may carry redundant points.
Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

/// {"dim": n, "polytopes": [<polytope>, ...]}
Json collection_to_json(const std::vector<Polytope>& ps);
std::vector<Polytope> collection_from_json(const Json& j);

/// {"n": n, "points": [[...], ...], "C": [["p/q", ...], ...]}
Json system_to_json(const SparseSystem& s);
SparseSystem system_from_json(const Json& j);

/// Dispatches on content: a JSON object is the matrix format, anything
/// else is parsed as equation text.
SparseSystem system_from_string(const std::string& text);

Json verdict_to_json(const MonotonicityVerdict& v);
Json deficit_to_json(const DeficitBound& b);
Json subdivision_to_json(const MixedSubdivision& ms);
Json system_report_to_json(const SystemReport& r, bool timings = false);
Json mv_report_to_json(const MvReport& r, bool timings = false);

/// Aligned text table of the per-face rank reports.
std::string ber_table(const BerResult& ber);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace mixvol
