#pragma once

// Slow reference implementations, kept deliberately independent of the
// library's algorithms. Tests compare the fast paths against these.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "matcode/field.hpp"
#include "matcode/graph.hpp"
#include "matcode/matrix.hpp"

namespace oracle {

// Girth via "drop an edge, find the shortest way back": for every non-loop
// edge, BFS distance between its endpoints in the graph without it.
inline std::optional<unsigned> path_girth(const matcode::Multigraph& g) {
  for (const auto& e : g.edges)
    if (e.u == e.v) return 1;
  std::optional<unsigned> best;
  for (std::size_t drop = 0; drop < g.edges.size(); ++drop) {
    std::vector<int> dist(g.vertex_count, -1);
    std::vector<int> frontier{g.edges[drop].u};
    dist[g.edges[drop].u] = 0;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int v : frontier)
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
          if (i == drop) continue;
          const auto& e = g.edges[i];
          int w = -1;
          if (e.u == v) w = e.v;
          else if (e.v == v) w = e.u;
          if (w != -1 && dist[w] == -1) {
            dist[w] = dist[v] + 1;
            next.push_back(w);
          }
        }
      frontier = std::move(next);
    }
    const int d = dist[g.edges[drop].v];
    if (d >= 0) {
      const unsigned len = static_cast<unsigned>(d) + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

// Full recompute per coefficient vector via an odometer walk; no Gray code,
// no incremental weight bookkeeping.
inline std::optional<unsigned> brute_min_weight(
    const std::vector<std::vector<std::uint32_t>>& rows, const matcode::FieldPtr& field) {
  if (rows.empty()) return std::nullopt;
  const std::size_t k = rows.size();
  const std::size_t n = rows[0].size();
  const std::uint32_t q = field->q();
  std::vector<std::uint32_t> coef(k, 0);
  std::optional<unsigned> best;
  while (true) {
    std::size_t pos = 0;
    while (pos < k && coef[pos] == q - 1) coef[pos++] = 0;
    if (pos == k) break;
    ++coef[pos];
    std::vector<std::uint32_t> v(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        v[j] = field->add(v[j], field->mul(coef[i], rows[i][j]));
    }
    unsigned w = 0;
    for (std::uint32_t x : v) w += (x != 0);
    if (w > 0 && (!best || w < *best)) best = w;
  }
  return best;
}

inline std::size_t subset_rank(const matcode::Mat& m, const std::vector<std::size_t>& cols);

// Classic one-element pivot contraction, applied sequentially: scale a row to
// put a 1 in the contracted column, clear the column, drop that row and column.
// Returns the generator rows over the surviving columns (original order).
inline std::vector<std::vector<std::uint32_t>> contract_generator(const matcode::Mat& gen,
                                                                  std::vector<std::size_t> x) {
  const matcode::Field& f = *gen.field();
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < gen.rows(); ++i) rows.push_back(gen.row(i));
  std::sort(x.begin(), x.end(), std::greater<>());  // high to low keeps indices stable
  for (std::size_t col : x) {
    std::size_t piv = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv != rows.size()) {
      const std::uint32_t inv = f.inv(rows[piv][col]);
      for (auto& v : rows[piv]) v = f.mul(inv, v);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == piv || rows[i][col] == 0) continue;
        const std::uint32_t factor = rows[i][col];
        for (std::size_t c = 0; c < rows[i].size(); ++c)
          rows[i][c] = f.sub(rows[i][c], f.mul(factor, rows[piv][c]));
      }
      rows.erase(rows.begin() + piv);
    }
    for (auto& v : rows) v.erase(v.begin() + col);
  }
  return rows;
}

// Smallest dependent subset size via exhaustive scan with insertion ranks.
inline std::optional<unsigned> brute_girth(const matcode::Mat& gen) {
  const std::size_t n = gen.cols();
  for (std::size_t w = 1; w <= n; ++w) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + w, true);
    std::vector<std::size_t> subset;
    do {
      subset.clear();
      for (std::size_t j = 0; j < n; ++j)
        if (pick[j]) subset.push_back(j);
      if (subset_rank(gen, subset) < w) return static_cast<unsigned>(w);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

inline bool is_circuit(const matcode::Mat& gen, const std::vector<std::size_t>& subset) {
  if (subset.empty() || subset_rank(gen, subset) == subset.size()) return false;
  for (std::size_t skip = 0; skip < subset.size(); ++skip) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < subset.size(); ++i)
      if (i != skip) rest.push_back(subset[i]);
    if (subset_rank(gen, rest) < rest.size()) return false;
  }
  return true;
}

// Connected-component classes of the "shares a circuit" relation; loops are
// singleton classes. Exhaustive over subsets, so keep the column count small.
inline std::vector<std::vector<std::size_t>> circuit_components(const matcode::Mat& gen) {
  const std::size_t n = gen.cols();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  const auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1) subset.push_back(j);
    if (!is_circuit(gen, subset)) continue;
    for (std::size_t i = 1; i < subset.size(); ++i) parent[find(subset[i])] = find(subset[0]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

// Rank by inserting rows one at a time into a reduced echelon set.
inline std::size_t insertion_rank(const matcode::Mat& m) {
  const matcode::Field& f = *m.field();
  std::map<std::size_t, std::vector<std::uint32_t>> echelon;  // leading col -> row
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::uint32_t> row = m.row(i);
    for (bool again = true; again;) {
      again = false;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        auto it = echelon.find(j);
        if (it == echelon.end()) break;
        const std::uint32_t factor = row[j];
        for (std::size_t c = 0; c < row.size(); ++c)
          row[c] = f.sub(row[c], f.mul(factor, it->second[c]));
        again = true;
        break;
      }
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      const std::uint32_t inv = f.inv(row[j]);
      for (std::size_t c = 0; c < row.size(); ++c) row[c] = f.mul(inv, row[c]);
      echelon[j] = row;
      break;
    }
  }
  return echelon.size();
}

// Rank of a column subset, computed on the transpose so it shares nothing
// with the library's rref.
inline std::size_t subset_rank(const matcode::Mat& m, const std::vector<std::size_t>& cols) {
  matcode::Mat t(m.field(), cols.size(), m.rows());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) t.set(i, j, m.at(j, cols[i]));
  return insertion_rank(t);
}

}  // namespace oracle
