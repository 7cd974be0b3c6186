#include "matcode/circuit_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "matcode/errors.hpp"

namespace matcode {

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ',';
    out += id;
  }
  return out;
}

// One greedy pass in stored order. Keeps the set dependent throughout, so
// the survivor is dependent with every one-element deletion independent.
std::vector<std::string> prune_to_circuit(
    std::vector<std::string> cur,
    const std::function<bool(const std::vector<std::string>&)>& dependent) {
  for (std::size_t i = 0; i < cur.size();) {
    std::vector<std::string> next = cur;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    if (dependent(next))
      cur = std::move(next);
    else
      ++i;
  }
  return cur;
}

}  // namespace

MooreReport moore_bound_check(const Multigraph& g) {
  MooreReport rep;
  rep.n = g.vertex_count;
  rep.avg_degree = g.average_degree();
  if (rep.avg_degree <= 2.0)
    throw std::invalid_argument("girth bound needs average degree above 2");
  const auto gir = graph_girth(g);
  if (!gir) throw ContractViolation("no cycle despite more edges than vertices");
  rep.girth = *gir;
  rep.bound = 4.0 + std::log(static_cast<double>(rep.n)) / std::log(rep.avg_degree - 1.0);
  rep.holds = rep.girth <= rep.bound;
  return rep;
}

ShortCycleBatch disjoint_short_cycles(const Multigraph& g, unsigned t, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  ShortCycleBatch out;
  const int n = g.vertex_count;
  if (n > 0) out.length_limit = 2.0 * std::log(static_cast<double>(n)) / std::log1p(beta);
  const double vertex_floor =
      std::max(std::pow(4.0 * t / (beta * std::log1p(beta)), 2.0), (1.0 + beta) * std::exp(4.0));
  out.preconditions_met =
      n >= vertex_floor && static_cast<double>(g.edge_count()) >= (1.0 + beta) * n;

  std::vector<bool> alive(g.edge_count(), true);
  while (out.cycles.size() < t) {
    const auto hit = shortest_cycle(g, &alive);
    if (!hit || hit->length > out.length_limit) break;
    for (int id : hit->edge_ids) alive[static_cast<std::size_t>(id)] = false;
    out.cycles.push_back(hit->edge_ids);
  }
  if (out.preconditions_met && out.cycles.size() < t) {
    std::ostringstream diag;
    diag << "n=" << n << " |E|=" << g.edge_count() << " t=" << t << " beta=" << beta
         << " found=" << out.cycles.size() << " limit=" << out.length_limit;
    throw ContractViolation("fewer short disjoint cycles than the size floors guarantee",
                            diag.str());
  }
  return out;
}

CoverGraph build_cover(const FrameRep& f) {
  if (f.graph.vertex_count == 0)
    throw std::invalid_argument("cover needs a nonempty representation graph");
  if (!graph_connected(f.graph))
    throw std::invalid_argument("cover needs a connected representation graph");

  CoverGraph c;
  c.base = tree_normalize(f);
  const LabelledDigraph& g = c.base.rep.graph;
  const std::uint32_t q = g.field->q();
  const int levels = static_cast<int>(q) - 1;
  const auto at = [levels](int v, std::uint32_t s) {
    return v * levels + static_cast<int>(s) - 1;
  };

  c.graph.vertex_count = g.vertex_count * levels;
  c.vertex_info.resize(static_cast<std::size_t>(c.graph.vertex_count));
  for (int v = 0; v < g.vertex_count; ++v)
    for (std::uint32_t s = 1; s < q; ++s) c.vertex_info[static_cast<std::size_t>(at(v, s))] = {v, s};

  // one copy of the tree per level, then each non-tree arc joins level 1
  // to the level named by its sign
  const std::set<std::string> tree(c.base.tree_arcs.begin(), c.base.tree_arcs.end());
  for (std::uint32_t s = 1; s < q; ++s)
    for (const std::string& id : c.base.tree_arcs) {
      const Arc* a = g.find_arc(id);
      c.graph.add_edge(at(a->tail, s), at(a->head, s));
      c.edge_origin.push_back(id);
    }
  for (const Arc& a : g.arcs) {
    if (tree.count(a.id)) continue;
    c.graph.add_edge(at(a.tail, 1), at(a.head, a.label));
    c.edge_origin.push_back(a.id);
  }
  return c;
}

std::string cover_to_dot(const CoverGraph& c) {
  std::ostringstream out;
  out << "graph cover {\n";
  for (std::size_t i = 0; i < c.vertex_info.size(); ++i)
    out << "  n" << i << " [label=\"" << c.vertex_info[i].first << "@" << c.vertex_info[i].second
        << "\"];\n";
  for (std::size_t e = 0; e < c.graph.edges.size(); ++e)
    out << "  n" << c.graph.edges[e].u << " -- n" << c.graph.edges[e].v << " [label=\""
        << c.edge_origin[e] << "\"];\n";
  out << "}\n";
  return out.str();
}

DeficientSetReport rank_deficient_set(const FrameRep& f, unsigned t, double beta) {
  const CoverGraph cover = build_cover(f);
  const ReprMatroid m = cover.base.rep.matroid();
  const unsigned r = m.rank();
  const std::uint32_t q = m.field()->q();

  DeficientSetReport rep;
  rep.size_bound = r >= 1 ? 4.0 * t * std::log(static_cast<double>(r)) / std::log1p(beta) : 0.0;
  const double rank_floor =
      std::max(std::max(static_cast<double>(q), (2.0 * q - 3.0) / beta + 1.0 - q),
               std::max(std::pow(4.0 * t / (beta * std::log1p(beta)), 2.0) / (q - 1),
                        (1.0 + beta) * std::exp(4.0) / (q - 1)));
  rep.preconditions_met =
      r >= rank_floor && static_cast<double>(m.size()) >= (1.0 + q * beta) * r;

  const ShortCycleBatch batch = disjoint_short_cycles(cover.graph, t, beta);
  rep.cycles_found = static_cast<unsigned>(batch.cycles.size());

  std::set<std::string> pool;
  for (const auto& cyc : batch.cycles) {
    std::set<std::string> ids;
    for (int e : cyc) ids.insert(cover.edge_origin[static_cast<std::size_t>(e)]);
    const std::vector<std::string> v(ids.begin(), ids.end());
    if (m.rank_of(v) >= v.size())
      throw ContractViolation("a projected cover cycle came out independent", join_ids(v));
    pool.insert(ids.begin(), ids.end());
  }
  for (const std::string& id : m.ground())
    if (pool.count(id)) rep.elements.push_back(id);
  rep.rank = m.rank_of(rep.elements);

  if (t > 0 && rep.cycles_found >= t) {
    rep.deficit_ok = rep.rank + t <= rep.elements.size();
    if (!rep.deficit_ok) {
      std::ostringstream diag;
      diag << "r(X)=" << rep.rank << " |X|=" << rep.elements.size() << " t=" << t << " X="
           << join_ids(rep.elements);
      throw ContractViolation("projected cycles miss their combined rank deficit", diag.str());
    }
    rep.size_ok = rep.elements.size() <= rep.size_bound;
  }
  if (rep.preconditions_met && rep.cycles_found < t) {
    std::ostringstream diag;
    diag << "r=" << r << " |M|=" << m.size() << " t=" << t << " found=" << rep.cycles_found;
    throw ContractViolation("fewer cover cycles than the rank floors guarantee", diag.str());
  }
  return rep;
}

BoundConstants bound_constant_c(unsigned k, double beta, std::uint32_t q) {
  if (!(beta > 0.0) || beta > 1.0) throw std::invalid_argument("beta must lie in (0, 1]");
  if (q < 2) throw std::invalid_argument("field order is at least 2");
  BoundConstants bc;
  bc.k = k;
  bc.beta = beta;
  bc.beta_prime = beta / 2.0;
  bc.q = q;

  const double bp = bc.beta_prime;
  const double lg = std::log1p(bp);
  const double base = std::max(std::max((2.0 * q - 3.0) / beta + 1.0 - q, static_cast<double>(q)),
                               std::max(std::pow(4.0 * (k + 1) / (bp * lg), 2.0),
                                        (1.0 + bp) * std::exp(4.0))) +
                      k;
  const double need = 4.0 * (k + 1);
  long long c = static_cast<long long>(std::ceil(base));
  // Once c ln(1+beta') exceeds 4(k+1) the defect is increasing in x, so the
  // check at x = c covers every larger x.
  for (;; ++c) {
    const double lhs = c * lg;
    if (lhs <= need) continue;
    if (need * std::log(static_cast<double>(c) + k) <= lhs * std::log(static_cast<double>(c)))
      break;
  }
  bc.c = c;
  return bc;
}

CircuitReport near_frame_circuit(const ReprMatroid& m, const PerturbWitness& w, double beta) {
  if (!w.verify()) throw std::invalid_argument("witness fails its minor identities");
  const ReprMatroid* n = nullptr;
  if (row_space_equal(m, w.dst))
    n = &w.src;
  else if (row_space_equal(m, w.src))
    n = &w.dst;
  else
    throw std::invalid_argument("witness does not connect the given matroid");
  const unsigned r = m.rank();
  if (static_cast<double>(m.size()) < (1.0 + beta) * r)
    throw std::invalid_argument("ground set below the (1+beta) r size floor");

  const unsigned k = w.k();
  const BoundConstants bc = bound_constant_c(k, beta, m.field()->q());
  const FrameRep fr = FrameRep::from_matroid(*n);
  if (!graph_connected(fr.graph))
    throw std::invalid_argument("frame representation graph is disconnected");

  CircuitReport out;
  out.c = bc.c;
  out.bound = r >= 1 ? bc.c * std::log(static_cast<double>(r)) : 0.0;
  out.deficiency = rank_deficient_set(fr, k + 1, beta / 2.0);

  const std::vector<std::string>& x = out.deficiency->elements;
  const auto dependent = [&m](const std::vector<std::string>& s) {
    return m.rank_of(s) < s.size();
  };
  if (x.empty() || !dependent(x)) {
    if (out.deficiency->cycles_found >= k + 1)
      throw ContractViolation("rank deficit did not survive the perturbation",
                              "X=" + join_ids(x));
    throw PipelineFailure("too few short cover cycles to force a circuit on this instance");
  }
  out.circuit = prune_to_circuit(x, dependent);
  out.within_bound = static_cast<double>(out.circuit.size()) <= out.bound;
  return out;
}

CircuitReport near_coframe_circuit(const ReprMatroid& m, const PerturbWitness& w, unsigned k,
                                   double beta) {
  if (!(beta > 0.0) || beta > 1.0) throw std::invalid_argument("beta must lie in (0, 1]");
  if (m.size() == 0) throw std::invalid_argument("an empty matroid has no circuits");
  if (!w.verify()) throw std::invalid_argument("witness fails its minor identities");
  if (w.k() > k) throw std::invalid_argument("witness uses more steps than the declared radius");
  const ReprMatroid dstar = m.dual();
  const ReprMatroid* n = nullptr;
  if (row_space_equal(dstar, w.dst))
    n = &w.src;
  else if (row_space_equal(dstar, w.src))
    n = &w.dst;
  else
    throw std::invalid_argument("witness does not connect the dual of the given matroid");
  if (static_cast<double>(m.size()) < (1.0 + beta) * m.rank())
    throw std::invalid_argument("ground set below the (1+beta) r size floor");

  CircuitReport out;
  out.c = static_cast<long long>(std::ceil(12.0 * (3.0 * k + 1.0) / beta));
  out.bound = static_cast<double>(out.c);

  const FrameRep fr = FrameRep::from_matroid(*n);
  if (!graph_connected(fr.graph))
    throw std::invalid_argument("frame representation graph is disconnected");

  const auto dependent = [&m](const std::vector<std::string>& s) {
    return m.rank_of(s) < s.size();
  };
  const int needed = 2 * (static_cast<int>(k) + 1);
  if (fr.graph.vertex_count < needed) {
    out.small_instance = true;
    out.circuit = prune_to_circuit(m.ground(), dependent);
    out.within_bound = static_cast<double>(out.circuit.size()) <= out.bound;
    return out;
  }

  const std::vector<int> deg = fr.graph.underlying().degrees();
  std::vector<int> order(static_cast<std::size_t>(fr.graph.vertex_count));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&deg](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
  const std::set<int> chosen(order.begin(), order.begin() + needed);

  std::vector<std::string> f_ids;
  for (const Arc& a : fr.graph.arcs)
    if (chosen.count(a.tail) || chosen.count(a.head)) f_ids.push_back(a.id);
  out.incident_set = f_ids;

  const std::vector<std::string>& ground = m.ground();
  const auto complement = [&ground](const std::vector<std::string>& ids) {
    const std::set<std::string> in(ids.begin(), ids.end());
    std::vector<std::string> rest;
    for (const auto& id : ground)
      if (!in.count(id)) rest.push_back(id);
    return rest;
  };

  // columns off the chosen vertices leave 2(k+1) zero rows behind
  const ReprMatroid nm = fr.matroid();
  const std::vector<std::string> rest = complement(f_ids);
  if (static_cast<long long>(nm.rank_of(rest)) >
      static_cast<long long>(nm.rank()) + 1 - needed) {
    std::ostringstream diag;
    diag << "r(N\\F)=" << nm.rank_of(rest) << " r(N)=" << nm.rank() << " 2(k+1)=" << needed;
    throw ContractViolation("incident set misses its zero-row rank bound", diag.str());
  }

  const auto drops_rank = [&dstar, &complement](const std::vector<std::string>& ids) {
    return dstar.rank_of(complement(ids)) < dstar.rank();
  };
  if (!drops_rank(f_ids))
    throw ContractViolation("incident set keeps the dual rank intact", "F=" + join_ids(f_ids));
  out.circuit = prune_to_circuit(f_ids, drops_rank);
  out.within_bound = static_cast<double>(out.circuit.size()) <= out.bound;
  return out;
}

}  // namespace matcode
