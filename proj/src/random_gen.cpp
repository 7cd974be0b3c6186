#include "matcode/random_gen.hpp"

#include <stdexcept>
#include <string>

namespace matcode {

ReprMatroid random_matroid(const FieldPtr& f, std::size_t r, std::size_t n, Rng& rng) {
  return ReprMatroid(Mat::random(f, r, n, rng));
}

Mat random_frame_matrix(const FieldPtr& f, int vertices, int extra_edges, Rng& rng) {
  if (vertices < 1) throw std::invalid_argument("need at least one vertex");
  const std::size_t cols = static_cast<std::size_t>(vertices - 1 + extra_edges);
  Mat a(f, vertices, cols);
  const auto nonzero = [&] { return 1 + rng.below32(f->q() - 1); };
  std::size_t j = 0;
  for (int v = 1; v < vertices; ++v, ++j) {  // tree edge: v attaches below itself
    const int u = static_cast<int>(rng.below32(static_cast<std::uint32_t>(v)));
    a.set(u, j, nonzero());
    a.set(v, j, nonzero());
  }
  for (int e = 0; e < extra_edges; ++e, ++j) {
    const int u = static_cast<int>(rng.below32(static_cast<std::uint32_t>(vertices)));
    int v = static_cast<int>(rng.below32(static_cast<std::uint32_t>(vertices)));
    while (vertices > 1 && v == u)
      v = static_cast<int>(rng.below32(static_cast<std::uint32_t>(vertices)));
    a.set(u, j, nonzero());
    if (v != u) a.set(v, j, nonzero());
  }
  return a;
}

Multigraph random_connected_graph(int vertices, int extra_edges, Rng& rng) {
  if (vertices < 1) throw std::invalid_argument("need at least one vertex");
  Multigraph g;
  g.vertex_count = vertices;
  for (int v = 1; v < vertices; ++v)
    g.add_edge(static_cast<int>(rng.below32(static_cast<std::uint32_t>(v))), v);
  for (int e = 0; e < extra_edges; ++e) {
    const int u = static_cast<int>(rng.below32(static_cast<std::uint32_t>(vertices)));
    int v = static_cast<int>(rng.below32(static_cast<std::uint32_t>(vertices)));
    while (vertices > 1 && v == u)
      v = static_cast<int>(rng.below32(static_cast<std::uint32_t>(vertices)));
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace matcode
