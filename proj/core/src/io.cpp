#include "scx/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scx/builtins.hpp"
#include "scx/error.hpp"

namespace scx {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(as_int(e, what));
  return out;
}

std::vector<std::vector<int>> int_lists(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& e : j) out.push_back(int_list(e, what));
  return out;
}

Rational as_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("matrix entry: expected \"p/q\" or an integer");
}

json lists_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(s.to_vector());
  return out;
}

std::vector<int> parse_csv_ints(const std::string& text, std::size_t count, const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("malformed spec: " + spec);
    }
  }
  if (out.size() != count) throw ParseError("malformed spec: " + spec);
  return out;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const json j = parse_json(text);
  const int n = as_int(field(j, "n"), "n");
  const bool has_facets = j.contains("facets");
  const bool has_missing = j.contains("missing_faces");
  if (has_facets == has_missing) throw ParseError("complex: give exactly one of \"facets\" or \"missing_faces\"");
  try {
    if (has_facets) return Complex::from_facets(n, int_lists(j.at("facets"), "facets"));
    return Complex::from_missing_faces(n, int_lists(j.at("missing_faces"), "missing_faces"));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(std::string("complex: ") + e.what());
  }
}

VectorRepresentation parse_representation(std::string_view text, int num_vertices) {
  const json j = parse_json(text);
  const json& sets = field(j, "sets");
  if (!sets.is_array()) throw ParseError("sets: expected an array");
  VectorRepresentation p;
  p.num_vertices = num_vertices;
  for (const auto& entry : sets) {
    VertexSet sigma;
    try {
      sigma = VertexSet::from_vertices(int_list(field(entry, "sigma"), "sigma"));
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(std::string("sigma: ") + e.what());
    }
    const json& rows = field(entry, "matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != num_vertices) {
      throw ParseError("matrix for sigma " + sigma.to_string() + ": expected one row per vertex");
    }
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(num_vertices, static_cast<int>(width));
    for (int v = 0; v < num_vertices; ++v) {
      if (!rows[v].is_array() || rows[v].size() != width) throw ParseError("matrix rows differ in length");
      for (std::size_t c = 0; c < width; ++c) m.set(v, static_cast<int>(c), as_rational(rows[v][c]));
    }
    p.blocks.push_back({sigma, std::move(m)});
  }
  return p;
}

Matroid parse_matroid(std::string_view text) {
  const json j = parse_json(text);
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("kind: expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "linear") return Matroid::linear(as_int(field(j, "p"), "p"), int_lists(field(j, "columns"), "columns"));
    if (k == "uniform") return Matroid::uniform(as_int(field(j, "rank"), "rank"), as_int(field(j, "n"), "n"));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(std::string("matroid: ") + e.what());
  }
  if (k == "builtin") {
    const json& name = field(j, "name");
    if (name == "AG23") return Matroid::ag23();
    if (name == "PG33") return Matroid::pg33();
    throw ParseError("matroid: unknown builtin " + name.dump());
  }
  throw ParseError("matroid: unknown kind \"" + k + "\"");
}

Partition parse_partition(std::string_view text) {
  const json j = parse_json(text);
  try {
    return Partition::from_lists(int_lists(field(j, "classes"), "classes"));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
}

std::string complex_to_json(const Complex& x) {
  json j;
  j["n"] = x.num_vertices();
  j["missing_faces"] = lists_json(x.missing_faces());
  return j.dump();
}

std::string representation_to_json(const VectorRepresentation& p) {
  json sets = json::array();
  for (const auto& b : p.blocks) {
    json rows = json::array();
    for (int v = 0; v < b.matrix.rows(); ++v) {
      json row = json::array();
      for (int c = 0; c < b.matrix.cols(); ++c) row.push_back(to_string(b.matrix(v, c)));
      rows.push_back(std::move(row));
    }
    sets.push_back({{"sigma", b.sigma.to_vector()}, {"matrix", std::move(rows)}});
  }
  return json{{"sets", std::move(sets)}}.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Complex resolve_complex(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) != 0) return parse_complex(read_file(spec));
  const std::string name = spec.substr(prefix.size());
  if (name == "ag23") return builtins::affine_plane_complex();
  if (name == "pg33") return builtins::projective_space_complex();
  if (name == "hollow-triangle") return builtins::hollow_triangle();
  if (name.rfind("rpartite:", 0) == 0) {
    const auto v = parse_csv_ints(name.substr(9), 2, spec);
    return builtins::complete_multipartite_clique_complex(v[0], v[1]);
  }
  if (name.rfind("simplex:", 0) == 0) return Complex::simplex(parse_csv_ints(name.substr(8), 1, spec)[0]);
  throw ParseError("unknown builtin complex: " + spec);
}

Matroid resolve_matroid(const std::string& spec) {
  if (spec == "builtin:AG23" || spec == "builtin:ag23") return Matroid::ag23();
  if (spec == "builtin:PG33" || spec == "builtin:pg33") return Matroid::pg33();
  if (spec.rfind("uniform:", 0) == 0) {
    const auto v = parse_csv_ints(spec.substr(8), 2, spec);
    return Matroid::uniform(v[0], v[1]);
  }
  if (spec.rfind("builtin:", 0) == 0) throw ParseError("unknown builtin matroid: " + spec);
  return parse_matroid(read_file(spec));
}

Partition resolve_partition(const std::string& spec) {
  if (spec == "3-parallel-lines") return Partition::from_lists({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  return parse_partition(read_file(spec));
}

VertexSet resolve_subset(const std::string& spec, VertexSet ground) {
  if (spec == "all") return ground;
  const json j = parse_json(read_file(spec));
  VertexSet s;
  try {
    s = VertexSet::from_vertices(int_list(field(j, "subset"), "subset"));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(std::string("subset: ") + e.what());
  }
  if (!s.subset_of(ground)) throw ParseError("subset: element outside the ground set");
  return s;
}

}  // namespace scx
