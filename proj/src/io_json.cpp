#include "matcode/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace matcode {

namespace {

using nlohmann::json;

json field_to_json(const FieldPtr& f) {
  return json{{"p", f->p()}, {"n", f->degree()}, {"modulus", f->modulus()}};
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("\"field\" must be an object");
  const auto p = j.at("p").get<std::uint32_t>();
  const auto n = j.at("n").get<std::uint32_t>();
  if (j.contains("modulus"))
    return Field::make(p, n, j.at("modulus").get<std::vector<std::uint32_t>>());
  return Field::make(p, n);
}

json matrix_to_json_obj(const Mat& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  json j{{"field", field_to_json(a.field())}, {"rows", std::move(rows)}};
  if (a.rows() == 0) j["cols"] = a.cols();  // otherwise implied by the grid
  if (a.has_labels()) j["labels"] = a.labels();
  return j;
}

Mat matrix_from_json_obj(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("matrix file must hold an object");
  const FieldPtr f = field_from_json(j.at("field"));
  const auto& rows = j.at("rows");
  if (!rows.is_array()) throw std::invalid_argument("\"rows\" must be an array");

  std::size_t cols = 0;
  if (!rows.empty())
    cols = rows.front().is_array() ? rows.front().size() : 0;
  else if (j.contains("cols"))
    cols = j.at("cols").get<std::size_t>();

  Mat a(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("ragged or non-array matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = row[c].get<std::uint64_t>();
      if (v >= f->q()) throw std::invalid_argument("matrix entry outside the field");
      a.set(r, c, static_cast<std::uint32_t>(v));
    }
  }
  if (j.contains("labels")) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != cols)
      throw std::invalid_argument("label count does not match the column count");
    a.set_labels(std::move(labels));
  }
  return a;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed json: ") + e.what());
  }
}

// Translates the library's type/missing-key errors into invalid_argument so
// callers see one input-error taxonomy.
template <typename F>
auto guarded(F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed input: ") + e.what());
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string matrix_to_json(const Mat& a) { return matrix_to_json_obj(a).dump(2) + "\n"; }

Mat matrix_from_json(const std::string& text) {
  const json j = parse_text(text);
  return guarded([&] { return matrix_from_json_obj(j); });
}

std::string matroid_to_json(const ReprMatroid& m, const std::string& name) {
  json j = matrix_to_json_obj(m.gen());
  if (!name.empty()) j["name"] = name;
  return j.dump(2) + "\n";
}

ReprMatroid matroid_from_json(const std::string& text) {
  const json j = parse_text(text);
  return guarded([&] { return ReprMatroid(matrix_from_json_obj(j)); });
}

std::string graph_to_json(const Multigraph& g, const std::string& name) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e.u, e.v}));
  json j{{"vertices", g.vertex_count}, {"edges", std::move(edges)}};
  if (!name.empty()) j["name"] = name;
  return j.dump(2) + "\n";
}

Multigraph graph_from_json(const std::string& text) {
  const json j = parse_text(text);
  return guarded([&] {
    Multigraph g;
    g.vertex_count = j.at("vertices").get<int>();
    if (g.vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("each edge must be a [u, v] pair");
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
        throw std::invalid_argument("edge endpoint outside the vertex range");
      g.add_edge(u, v);
    }
    return g;
  });
}

std::string digraph_to_dot(const LabelledDigraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (int v = 0; v < g.vertex_count; ++v) out << "  n" << v << ";\n";
  for (const Arc& a : g.arcs) {
    out << "  n" << a.tail << " -> n" << a.head << " [label=\"" << a.label
        << "\" id=" << quoted(a.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace matcode
