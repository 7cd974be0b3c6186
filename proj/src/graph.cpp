#include "matcode/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "matcode/errors.hpp"

namespace matcode {

namespace {

void check_edges(const Multigraph& g) {
  for (const auto& e : g.edges)
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
}

// adjacency as (neighbor, edge id), loops excluded
std::vector<std::vector<std::pair<int, int>>> adjacency(const Multigraph& g,
                                                        const std::vector<bool>* alive) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (alive && !(*alive)[i]) continue;
    const auto& e = g.edges[i];
    if (e.u == e.v) continue;
    adj[e.u].push_back({e.v, static_cast<int>(i)});
    adj[e.v].push_back({e.u, static_cast<int>(i)});
  }
  return adj;
}

}  // namespace

std::vector<int> Multigraph::degrees() const {
  check_edges(*this);
  std::vector<int> d(vertex_count, 0);
  for (const auto& e : edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

double Multigraph::average_degree() const {
  if (vertex_count == 0) throw std::invalid_argument("average degree of an empty graph");
  return 2.0 * static_cast<double>(edges.size()) / static_cast<double>(vertex_count);
}

std::vector<int> Multigraph::component_ids() const {
  check_edges(*this);
  std::vector<int> comp(vertex_count, -1);
  int next = 0;
  for (int s = 0; s < vertex_count; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      for (const auto& e : edges) {
        int other = -1;
        if (e.u == v) other = e.v;
        else if (e.v == v) other = e.u;
        if (other != -1 && comp[other] == -1) {
          comp[other] = next;
          bfs.push(other);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool Multigraph::connected() const {
  if (vertex_count == 0) return true;
  const auto comp = component_ids();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

std::optional<CycleHit> shortest_cycle(const Multigraph& g, const std::vector<bool>* alive) {
  check_edges(g);
  if (alive && alive->size() != g.edges.size())
    throw std::invalid_argument("alive mask must cover every edge");

  std::optional<CycleHit> best;
  const auto consider = [&best](unsigned len, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    if (!best || len < best->length || (len == best->length && ids < best->edge_ids))
      best = CycleHit{len, std::move(ids)};
  };

  // loops first, then parallel pairs: nothing shorter exists
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (alive && !(*alive)[i]) continue;
    if (g.edges[i].u == g.edges[i].v) consider(1, {static_cast<int>(i)});
  }
  if (best) return best;

  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (alive && !(*alive)[i]) continue;
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      if (alive && !(*alive)[j]) continue;
      const auto& a = g.edges[i];
      const auto& b = g.edges[j];
      if ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u))
        consider(2, {static_cast<int>(i), static_cast<int>(j)});
    }
  }
  if (best) return best;

  // per-root BFS; a non-tree edge (x,y) closes the cycle through the
  // tree paths to the lowest common ancestor
  const auto adj = adjacency(g, alive);
  for (int root = 0; root < g.vertex_count; ++root) {
    std::vector<int> dist(g.vertex_count, -1), parent(g.vertex_count, -1),
        parent_edge(g.vertex_count, -1);
    dist[root] = 0;
    std::queue<int> bfs;
    bfs.push(root);
    std::vector<std::pair<int, int>> non_tree;  // endpoints of skipped edges
    std::vector<int> non_tree_id;
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      for (const auto& [w, id] : adj[v]) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          parent_edge[w] = id;
          bfs.push(w);
        } else if (id != parent_edge[v]) {
          non_tree.push_back({v, w});
          non_tree_id.push_back(id);
        }
      }
    }
    for (std::size_t t = 0; t < non_tree.size(); ++t) {
      auto [x, y] = non_tree[t];
      // climb to the common ancestor, collecting tree edges
      std::vector<int> ids{non_tree_id[t]};
      int a = x, b = y;
      while (dist[a] > dist[b]) {
        ids.push_back(parent_edge[a]);
        a = parent[a];
      }
      while (dist[b] > dist[a]) {
        ids.push_back(parent_edge[b]);
        b = parent[b];
      }
      while (a != b) {
        ids.push_back(parent_edge[a]);
        ids.push_back(parent_edge[b]);
        a = parent[a];
        b = parent[b];
      }
      // tree paths that only meet at the ancestor form a simple cycle
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) continue;
      const unsigned len = static_cast<unsigned>(ids.size());
      consider(len, std::move(ids));
    }
  }
  return best;
}

std::optional<unsigned> graph_girth(const Multigraph& g) {
  const auto hit = shortest_cycle(g);
  return hit ? std::optional<unsigned>(hit->length) : std::nullopt;
}

std::vector<std::vector<int>> enumerate_cycles(const Multigraph& g, std::size_t max_edges) {
  check_edges(g);
  const std::size_t m = g.edges.size();
  if (m > max_edges)
    throw BudgetExceeded("cycle enumeration refused beyond " + std::to_string(max_edges) +
                         " edges");
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<int> deg(g.vertex_count, 0);
    std::vector<int> ids;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      ids.push_back(static_cast<int>(i));
      deg[g.edges[i].u] += g.edges[i].u == g.edges[i].v ? 2 : 1;
      if (g.edges[i].u != g.edges[i].v) ++deg[g.edges[i].v];
    }
    bool degrees_ok = true;
    for (int d : deg) degrees_ok &= (d == 0 || d == 2);
    if (!degrees_ok) continue;

    // the chosen edges must live on a single component
    Multigraph sub;
    sub.vertex_count = g.vertex_count;
    for (int i : ids) sub.add_edge(g.edges[i].u, g.edges[i].v);
    const auto comp = sub.component_ids();
    int used_comp = -1;
    bool single = true;
    for (int i : ids) {
      const int c = comp[g.edges[i].u];
      if (used_comp == -1) used_comp = c;
      single &= (c == used_comp);
    }
    if (single) out.push_back(std::move(ids));
  }
  return out;
}

std::vector<int> bfs_spanning_tree(const Multigraph& g) {
  check_edges(g);
  if (!g.connected()) throw std::invalid_argument("spanning tree needs a connected graph");
  if (g.vertex_count == 0) return {};
  const auto adj = adjacency(g, nullptr);
  std::vector<bool> seen(g.vertex_count, false);
  std::vector<int> tree;
  std::queue<int> bfs;
  seen[0] = true;
  bfs.push(0);
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (const auto& [w, id] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.push_back(id);
      bfs.push(w);
    }
  }
  return tree;
}

}  // namespace matcode
