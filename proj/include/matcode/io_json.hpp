#pragma once

#include <string>

#include "matcode/frame.hpp"
#include "matcode/graph.hpp"
#include "matcode/matrix.hpp"
#include "matcode/matroid.hpp"

namespace matcode {

// Matrix files: {"field": {"p": 2, "n": 1, "modulus": [0, 1]},
//                "rows": [[...], ...], "labels": ["e1", ...]}
// Entries are packed element values; labels are optional and default to
// "0", "1", .... Matroid files add an optional "name".
std::string matrix_to_json(const Mat& a);
Mat matrix_from_json(const std::string& text);

std::string matroid_to_json(const ReprMatroid& m, const std::string& name = {});
ReprMatroid matroid_from_json(const std::string& text);

// Graph files: {"vertices": 10, "edges": [[0, 1], ...], "name": "..."}
std::string graph_to_json(const Multigraph& g, const std::string& name = {});
Multigraph graph_from_json(const std::string& text);

// DOT with one directed edge per arc, label = packed element value, id = arc id.
std::string digraph_to_dot(const LabelledDigraph& g, const std::string& name = "frame");

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Stable float formatting for CSV/report output ("%.6g").
std::string format_double(double v);

}  // namespace matcode
