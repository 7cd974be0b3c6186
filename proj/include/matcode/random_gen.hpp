#pragma once

#include <cstddef>

#include "matcode/frame.hpp"
#include "matcode/matroid.hpp"
#include "matcode/rng.hpp"

namespace matcode {

// Uniform r x n generator; rows that come out rank-deficient are kept as-is
// (callers wanting full rank should use random_code).
ReprMatroid random_matroid(const FieldPtr& f, std::size_t r, std::size_t n, Rng& rng);

// Connected frame matrix on `vertices` rows: a random spanning tree plus
// `extra_edges` more two-nonzero columns, entries uniform nonzero.
Mat random_frame_matrix(const FieldPtr& f, int vertices, int extra_edges, Rng& rng);

// Random connected simple-ish multigraph (spanning tree plus extras,
// parallels allowed, no loops).
Multigraph random_connected_graph(int vertices, int extra_edges, Rng& rng);

}  // namespace matcode
