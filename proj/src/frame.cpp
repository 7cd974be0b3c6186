#include "matcode/frame.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "matcode/errors.hpp"

namespace matcode {

Multigraph LabelledDigraph::underlying() const {
  Multigraph g;
  g.vertex_count = vertex_count;
  for (const auto& a : arcs) g.add_edge(a.tail, a.head);
  return g;
}

const Arc* LabelledDigraph::find_arc(const std::string& id) const {
  for (const auto& a : arcs)
    if (a.id == id) return &a;
  return nullptr;
}

bool is_frame_matrix(const Mat& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    int nz = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) nz += a.at(i, j) != 0;
    if (nz > 2) return false;
  }
  return true;
}

namespace {

std::vector<std::string> column_ids(const Mat& a) {
  if (a.has_labels()) return a.labels();
  std::vector<std::string> ids(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) ids[j] = std::to_string(j);
  return ids;
}

// keeps a maximal independent row subset, scanning top-down
Mat prune_dependent_rows(const Mat& a) {
  std::vector<std::vector<std::uint32_t>> kept;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    kept.push_back(a.row(i));
    if (rank(Mat::from_rows(a.field(), kept)) < kept.size()) kept.pop_back();
  }
  Mat out = kept.empty() ? Mat(a.field(), 0, a.cols()) : Mat::from_rows(a.field(), kept);
  out.set_labels(a.labels());
  return out;
}

void append_parity_row_if_needed(Mat& a) {
  if (a.field()->q() != 2) return;
  bool odd = false;
  for (std::size_t j = 0; j < a.cols() && !odd; ++j) {
    int nz = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) nz += a.at(i, j) != 0;
    odd = (nz % 2) == 1;
  }
  if (!odd) return;
  std::vector<std::uint32_t> parity(a.cols(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      parity[j] = a.field()->add(parity[j], a.at(i, j));
  a = a.with_row_appended(parity);
}

// incremental echelon set for independence checks during the basis search
struct EchelonSet {
  const Field& f;
  std::vector<std::vector<std::uint32_t>> rows;  // reduced, with known pivots
  std::vector<std::size_t> pivots;

  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint32_t x = v[pivots[i]];
      if (x == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.sub(v[c], f.mul(x, rows[i][c]));
    }
    return v;
  }

  bool try_insert(const std::vector<std::uint32_t>& v) {
    auto r = reduce(v);
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] == 0) continue;
      const std::uint32_t inv = f.inv(r[c]);
      for (auto& x : r) x = f.mul(inv, x);
      rows.push_back(std::move(r));
      pivots.push_back(c);
      return true;
    }
    return false;
  }

  void pop() {
    rows.pop_back();
    pivots.pop_back();
  }
};

// Search for invertible T with every column of T*basis having at most two
// nonzeros. Rows of T are normalized (first nonzero 1) and strictly
// increasing as packed indices, since row scaling and order never matter.
bool frame_basis_search(const Mat& basis, std::uint64_t node_budget, Mat& out) {
  const Field& f = *basis.field();
  const std::size_t r = basis.rows(), n = basis.cols();
  const std::uint64_t q = f.q();

  double space = 1;
  for (std::size_t i = 0; i < r; ++i) space *= static_cast<double>(q);
  if (space > static_cast<double>(node_budget))
    throw BudgetExceeded("frame basis search space too large");
  const std::uint64_t total = static_cast<std::uint64_t>(space);

  const auto decode = [&](std::uint64_t idx) {
    std::vector<std::uint32_t> t(r);
    for (std::size_t i = 0; i < r; ++i) {
      t[i] = static_cast<std::uint32_t>(idx % q);
      idx /= q;
    }
    return t;
  };
  const auto normalized = [&](const std::vector<std::uint32_t>& t) {
    for (std::uint32_t x : t)
      if (x != 0) return x == 1;
    return false;  // zero row can never join a basis
  };

  std::vector<std::vector<std::uint32_t>> chosen;  // rows of T * basis
  EchelonSet indep{f, {}, {}};
  std::vector<std::uint32_t> colw(n, 0);  // column weights accumulated so far
  std::uint64_t nodes = 0;

  const std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t from) -> bool {
    if (chosen.size() == r) {
      out = Mat::from_rows(basis.field(), chosen);
      return true;
    }
    for (std::uint64_t idx = from; idx < total; ++idx) {
      if (++nodes > node_budget)
        throw BudgetExceeded("frame basis search exceeded its node budget");
      const auto t = decode(idx);
      if (!normalized(t)) continue;
      // the produced generator row
      std::vector<std::uint32_t> row(n, 0);
      for (std::size_t i = 0; i < r; ++i) {
        if (t[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          row[j] = f.add(row[j], f.mul(t[i], basis.at(i, j)));
      }
      bool fits = true;
      for (std::size_t j = 0; j < n && fits; ++j)
        fits = colw[j] + (row[j] != 0 ? 1 : 0) <= 2;
      if (!fits) continue;
      if (!indep.try_insert(t)) continue;
      for (std::size_t j = 0; j < n; ++j) colw[j] += row[j] != 0;
      chosen.push_back(row);
      if (dfs(idx + 1)) return true;
      chosen.pop_back();
      for (std::size_t j = 0; j < n; ++j) colw[j] -= row[j] != 0;
      indep.pop();
    }
    return false;
  };
  return dfs(1);
}

}  // namespace

Mat frame_normalize(const ReprMatroid& m, std::size_t search_limit) {
  Mat out(m.field(), 0, 0);
  if (is_frame_matrix(m.gen())) {
    out = prune_dependent_rows(m.gen());
  } else {
    if (m.size() > search_limit)
      throw BudgetExceeded("frame search refused above the element limit");
    const auto rr = rref(m.gen());
    const std::size_t r = rr.pivots.size();
    Mat basis(m.field(), r, m.size());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < m.size(); ++j) basis.set(i, j, rr.reduced.at(i, j));
    Mat found(m.field(), 0, 0);
    if (!frame_basis_search(basis, std::uint64_t(1) << 20, found))
      throw std::invalid_argument("matroid admits no frame representation over its field");
    out = found;
    out.set_labels(m.ground());
  }
  append_parity_row_if_needed(out);
  out.set_labels(m.ground());
  return out;
}

LabelledDigraph graph_representation(const Mat& a) {
  if (a.rows() == 0 && a.cols() > 0)
    throw std::invalid_argument("a rowless matrix with columns has no graph");
  const Field& f = *a.field();
  const auto ids = column_ids(a);

  LabelledDigraph g;
  g.vertex_count = static_cast<int>(a.rows());
  g.field = a.field();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a.at(i, j) != 0) nz.push_back(i);
    if (nz.size() > 2) throw std::invalid_argument("column " + ids[j] + " has three nonzeros");
    Arc arc;
    arc.id = ids[j];
    if (nz.size() == 2) {
      arc.tail = static_cast<int>(nz[0]);
      arc.head = static_cast<int>(nz[1]);
      arc.label = f.neg(f.div(a.at(nz[0], j), a.at(nz[1], j)));
    } else if (nz.size() == 1) {
      if (f.q() == 2)
        throw std::invalid_argument("column " + ids[j] +
                                    " needs a loop label outside {0,1}, impossible over GF(2)");
      arc.tail = arc.head = static_cast<int>(nz[0]);
      arc.label = 2;  // least value outside {0, 1}
    } else {
      arc.tail = arc.head = 0;
      arc.label = 1;
    }
    g.arcs.push_back(std::move(arc));
  }
  return g;
}

FrameRep FrameRep::from_matrix(Mat a) {
  if (!is_frame_matrix(a)) throw std::invalid_argument("not a frame matrix");
  LabelledDigraph g = graph_representation(a);
  return FrameRep{std::move(a), std::move(g)};
}

FrameRep FrameRep::from_matroid(const ReprMatroid& m, std::size_t search_limit) {
  return from_matrix(frame_normalize(m, search_limit));
}

std::uint32_t cycle_sign(const LabelledDigraph& g, const CycleWalk& walk) {
  if (walk.vertices.size() != walk.arcs.size() || walk.arcs.empty())
    throw std::invalid_argument("walk needs one arc per vertex");
  const Field& f = *g.field;
  std::uint32_t sign = 1;
  const std::size_t m = walk.arcs.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Arc* a = g.find_arc(walk.arcs[i]);
    if (!a) throw std::invalid_argument("unknown arc " + walk.arcs[i]);
    const int from = walk.vertices[i];
    const int to = walk.vertices[(i + 1) % m];
    if (a->tail == from && a->head == to) {
      sign = f.mul(sign, a->label);  // forward; loops land here too
    } else if (a->tail == to && a->head == from) {
      sign = f.mul(sign, f.inv(a->label));
    } else {
      throw std::invalid_argument("arc " + a->id + " does not join the walk step");
    }
  }
  return sign;
}

bool is_balanced(const LabelledDigraph& g, const CycleWalk& walk) {
  return cycle_sign(g, walk) == 1;
}

CycleWalk walk_of_cycle(const LabelledDigraph& g, const std::vector<std::string>& arc_ids) {
  if (arc_ids.empty()) throw std::invalid_argument("empty arc set");
  std::vector<const Arc*> arcs;
  std::set<std::string> seen;
  for (const auto& id : arc_ids) {
    const Arc* a = g.find_arc(id);
    if (!a) throw std::invalid_argument("unknown arc " + id);
    if (!seen.insert(id).second) throw std::invalid_argument("repeated arc " + id);
    arcs.push_back(a);
  }

  if (arcs.size() == 1 && arcs[0]->tail == arcs[0]->head)
    return CycleWalk{{arcs[0]->tail}, {arcs[0]->id}};

  std::map<int, std::vector<const Arc*>> incident;
  for (const Arc* a : arcs) {
    if (a->tail == a->head) throw std::invalid_argument("loop inside a longer cycle");
    incident[a->tail].push_back(a);
    incident[a->head].push_back(a);
  }
  for (auto& [v, list] : incident) {
    if (list.size() != 2) throw std::invalid_argument("arc set is not a single cycle");
    std::sort(list.begin(), list.end(),
              [](const Arc* a, const Arc* b) { return a->id < b->id; });
  }

  const int start = incident.begin()->first;
  CycleWalk walk;
  int at = start;
  const Arc* via = incident[start][0];  // least incident arc id leads the walk
  while (true) {
    walk.vertices.push_back(at);
    walk.arcs.push_back(via->id);
    at = via->tail == at ? via->head : via->tail;
    if (at == start) break;
    const auto& pair = incident[at];
    via = pair[0] == via ? pair[1] : pair[0];
  }
  if (walk.arcs.size() != arcs.size())
    throw std::invalid_argument("arc set is not a single cycle");
  return walk;
}

LabelledDigraph resign(const LabelledDigraph& g, std::uint32_t gamma,
                       const std::vector<int>& w_side) {
  const Field& f = *g.field;
  if (gamma == 0 || gamma >= f.q()) throw std::invalid_argument("switching value must be nonzero");
  std::set<int> w(w_side.begin(), w_side.end());
  LabelledDigraph out = g;
  for (auto& a : out.arcs) {
    const bool tail_in = w.count(a.tail) > 0;
    const bool head_in = w.count(a.head) > 0;
    if (!tail_in && head_in) a.label = f.mul(a.label, gamma);
    else if (tail_in && !head_in) a.label = f.mul(a.label, f.inv(gamma));
  }
  return out;
}

std::vector<std::vector<std::string>> balanced_cycles(const LabelledDigraph& g,
                                                      std::size_t max_edges) {
  const auto cycles = enumerate_cycles(g.underlying(), max_edges);
  std::vector<std::vector<std::string>> out;
  for (const auto& edge_ids : cycles) {
    std::vector<std::string> ids;
    for (int e : edge_ids) ids.push_back(g.arcs[e].id);
    if (is_balanced(g, walk_of_cycle(g, ids))) {
      std::sort(ids.begin(), ids.end());
      out.push_back(std::move(ids));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeNormalized tree_normalize(const FrameRep& fr) {
  const LabelledDigraph& g = fr.graph;
  const Field& f = *g.field;
  if (!graph_connected(g)) throw std::invalid_argument("tree normalization needs a connected graph");
  if (static_cast<std::size_t>(g.vertex_count) != fr.matrix.rows())
    throw std::invalid_argument("graph vertices must match matrix rows");

  const auto tree = bfs_spanning_tree(g.underlying());
  std::vector<bool> in_tree(g.arcs.size(), false);
  for (int id : tree) in_tree[id] = true;

  // walk the tree edges in BFS order; each reaches exactly one new vertex
  std::vector<std::uint32_t> scale(g.vertex_count, 0);
  if (g.vertex_count > 0) scale[0] = 1;
  for (int id : tree) {
    const Arc& a = g.arcs[id];
    if (scale[a.tail] != 0 && scale[a.head] == 0)
      scale[a.head] = f.mul(scale[a.tail], a.label);
    else if (scale[a.head] != 0 && scale[a.tail] == 0)
      scale[a.tail] = f.mul(scale[a.head], f.inv(a.label));
    else
      throw std::invalid_argument("spanning tree walk out of order");
  }

  Mat scaled = fr.matrix;
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j)
      scaled.set(i, j, f.mul(scale[i], scaled.at(i, j)));

  TreeNormalized out{FrameRep::from_matrix(std::move(scaled)), {}, scale};
  for (int id : tree) out.tree_arcs.push_back(g.arcs[id].id);
  return out;
}

DependenceReport check_dependent_structure(const FrameRep& fr,
                                           const std::vector<std::string>& arc_ids) {
  std::vector<std::size_t> cols;
  std::set<std::string> seen;
  for (const auto& id : arc_ids) {
    if (!seen.insert(id).second) throw std::invalid_argument("repeated arc " + id);
    bool found = false;
    for (std::size_t j = 0; j < fr.graph.arcs.size(); ++j)
      if (fr.graph.arcs[j].id == id) {
        cols.push_back(j);
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown arc " + id);
  }
  if (cols.empty()) throw std::invalid_argument("empty arc set");

  DependenceReport rep;
  rep.size = cols.size();
  rep.rank = static_cast<unsigned>(rank(fr.matrix.col_subset(cols)));
  rep.dependent = rep.rank < rep.size;

  // degrees over the chosen arcs, loops adding two
  std::map<int, int> deg;
  for (std::size_t j : cols) {
    const Arc& a = fr.graph.arcs[j];
    deg[a.tail] += a.tail == a.head ? 2 : 1;
    if (a.tail != a.head) ++deg[a.head];
  }
  bool all_two = true, min_two = true;
  for (const auto& [v, d] : deg) {
    all_two &= d == 2;
    min_two &= d >= 2;
  }
  Multigraph sub;
  sub.vertex_count = fr.graph.vertex_count;
  for (std::size_t j : cols) sub.add_edge(fr.graph.arcs[j].tail, fr.graph.arcs[j].head);
  const auto comp = sub.component_ids();
  const int ref_comp = comp[fr.graph.arcs[cols[0]].tail];
  bool one_component = true;
  for (std::size_t j : cols) one_component &= comp[fr.graph.arcs[j].tail] == ref_comp;

  if (all_two && one_component) {
    std::vector<std::string> ids;
    for (std::size_t j : cols) ids.push_back(fr.graph.arcs[j].id);
    if (is_balanced(fr.graph, walk_of_cycle(fr.graph, ids))) {
      rep.cls = ArcSetClass::kBalancedCycle;
      if (!rep.dependent)
        throw ContractViolation("balanced cycle with independent columns",
                                "a balanced cycle must be a circuit of the frame matroid");
      return rep;
    }
    rep.cls = ArcSetClass::kOther;  // unbalanced cycles are independent sets
    return rep;
  }
  if (min_two && one_component) {
    rep.cls = ArcSetClass::kMinDegreeTwoNonCycle;
    if (!rep.dependent)
      throw ContractViolation("dense connected arc set with independent columns",
                              "more arcs than touched vertices forces a dependence");
    return rep;
  }
  rep.cls = ArcSetClass::kOther;
  return rep;
}

bool graph_connected(const LabelledDigraph& g) { return g.underlying().connected(); }

}  // namespace matcode
