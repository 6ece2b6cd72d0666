#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopfforge/fixtures.hpp"
#include "hopfforge/yd.hpp"

namespace hopfforge {

using Json = nlohmann::ordered_json;

namespace io {

inline std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
inline std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + ": missing field \"" + key + "\"");
  return *it;
}

inline std::size_t index(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw SchemaError(path + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(path + ": expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::vector<std::string> strings(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw SchemaError(at(path, i) + ": expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

inline Space space_from_labels(std::vector<std::string> labels, const std::string& path) {
  try {
    return Space(std::move(labels));
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

// Matrices are lists of rows, or {"rows": r, "cols": c, "entries": [[i, j, q], ...]}
// for large sparse data.
inline LinMap matrix(const Json& j, const Space& dom, const Space& cod, const std::string& path) {
  std::vector<SparseVec> cols(dom.dim());
  if (j.is_object()) {
    const std::size_t r = index(field(j, "rows", path), at(path, "rows"));
    const std::size_t c = index(field(j, "cols", path), at(path, "cols"));
    if (r != cod.dim() || c != dom.dim())
      throw DimensionMismatch(path + ": matrix is " + std::to_string(r) + "x" + std::to_string(c) +
                              ", expected " + std::to_string(cod.dim()) + "x" +
                              std::to_string(dom.dim()));
    const Json& e = field(j, "entries", path);
    const std::string ep = at(path, "entries");
    if (!e.is_array()) throw SchemaError(ep + ": expected an array");
    std::vector<std::vector<std::pair<std::size_t, Rational>>> raw(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      const std::string p = at(ep, k);
      if (!e[k].is_array() || e[k].size() != 3) throw SchemaError(p + ": expected [row, col, value]");
      const std::size_t row = index(e[k][0], at(p, 0)), col = index(e[k][1], at(p, 1));
      if (row >= r || col >= c) throw DimensionMismatch(p + ": entry outside the matrix");
      raw[col].emplace_back(row, rational(e[k][2], at(p, 2)));
    }
    for (std::size_t col = 0; col < c; ++col) cols[col] = detail::canonical(std::move(raw[col]));
    return LinMap(dom, cod, std::move(cols));
  }
  if (!j.is_array()) throw SchemaError(path + ": expected a matrix (array of rows)");
  if (j.size() != cod.dim())
    throw DimensionMismatch(path + ": " + std::to_string(j.size()) + " rows, expected " +
                            std::to_string(cod.dim()));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = at(path, r);
    if (!j[r].is_array()) throw SchemaError(rp + ": expected a row");
    if (j[r].size() != dom.dim())
      throw DimensionMismatch(rp + ": " + std::to_string(j[r].size()) + " entries, expected " +
                              std::to_string(dom.dim()));
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      Rational q = rational(j[r][c], at(rp, c));
      if (q != 0) cols[c].emplace_back(r, std::move(q));
    }
  }
  return LinMap(dom, cod, std::move(cols));
}

// A column vector (unit) or a single row (counit) written as a flat list.
inline LinMap flat(const Json& j, const Space& dom, const Space& cod, bool column,
                   const std::string& path) {
  const std::size_t n = column ? cod.dim() : dom.dim();
  if (!j.is_array()) throw SchemaError(path + ": expected a list of " + std::to_string(n) + " rationals");
  if (j.size() != n)
    throw DimensionMismatch(path + ": " + std::to_string(j.size()) + " entries, expected " +
                            std::to_string(n));
  std::vector<SparseVec> cols(dom.dim());
  for (std::size_t k = 0; k < n; ++k) {
    Rational q = rational(j[k], at(path, k));
    if (q == 0) continue;
    if (column) cols[0].emplace_back(k, std::move(q));
    else cols[k].emplace_back(0, std::move(q));
  }
  return LinMap(dom, cod, std::move(cols));
}

inline Json write_rational(const Rational& q) { return to_string(q); }

inline Json write_matrix(const LinMap& f) {
  if (f.rows() * f.cols() > 4096) {
    Json e = Json::array();
    for (std::size_t c = 0; c < f.cols(); ++c)
      f.for_column(c, [&](std::size_t r, const Rational& v) {
        e.push_back(Json::array({r, c, write_rational(v)}));
      });
    // Entries are emitted column by column; sort row-major for readability.
    std::vector<Json> v(e.begin(), e.end());
    std::stable_sort(v.begin(), v.end(), [](const Json& a, const Json& b) {
      return a[0].get<std::size_t>() < b[0].get<std::size_t>();
    });
    return Json{{"rows", f.rows()}, {"cols", f.cols()}, {"entries", v}};
  }
  Json rows = Json::array();
  for (const auto& row : f.to_rows()) {
    Json jr = Json::array();
    for (const auto& q : row) jr.push_back(write_rational(q));
    rows.push_back(std::move(jr));
  }
  return rows;
}

inline Json write_flat(const LinMap& f, bool column) {
  Json out = Json::array();
  const std::size_t n = column ? f.rows() : f.cols();
  for (std::size_t k = 0; k < n; ++k) out.push_back(write_rational(column ? f.at(k, 0) : f.at(0, k)));
  return out;
}

}  // namespace io

struct ParseOptions {
  bool allow_large = false;
  std::size_t max_dim = 512;
};

inline HopfAlgebra parse_hopf(const Json& j, const std::string& path, const ParseOptions& opt);

inline GroupTable parse_group(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("builtin")) {
    const std::string b = j["builtin"].is_string() ? j["builtin"].get<std::string>() : "";
    if (b == "trivial") return trivial_group();
    if (b == "c2") return cyclic_group(2);
    if (b == "c3") return cyclic_group(3);
    if (b == "s3") return symmetric_group_3();
    throw SchemaError(io::at(path, "builtin") + ": unknown group \"" + b + "\"");
  }
  const std::size_t n = io::index(io::field(j, "order", path), io::at(path, "order"));
  std::vector<std::string> labels = io::strings(io::field(j, "elements", path), io::at(path, "elements"));
  if (labels.size() != n)
    throw DimensionMismatch(io::at(path, "elements") + ": " + std::to_string(labels.size()) +
                            " labels for order " + std::to_string(n));
  const Json& t = io::field(j, "table", path);
  const std::string tp = io::at(path, "table");
  if (!t.is_array() || t.size() != n) throw DimensionMismatch(tp + ": expected " + std::to_string(n) + " rows");
  std::vector<std::vector<std::size_t>> table(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!t[a].is_array() || t[a].size() != n)
      throw DimensionMismatch(io::at(tp, a) + ": expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b) table[a].push_back(io::index(t[a][b], io::at(io::at(tp, a), b)));
  }
  return GroupTable(std::move(labels), std::move(table));
}

inline HopfAlgebra parse_hopf(const Json& j, const std::string& path, const ParseOptions& opt) {
  if (j.is_object() && j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw SchemaError(io::at(path, "builtin") + ": expected a string");
    Document d = builtin(j["builtin"].get<std::string>(), opt.allow_large, opt.max_dim);
    if (!d.hopf) throw SchemaError(io::at(path, "builtin") + ": fixture is not a Hopf algebra");
    return *d.hopf;
  }
  if (j.contains("field") && j["field"] != "Q")
    throw SchemaError(io::at(path, "field") + ": only \"Q\" is supported");
  const std::size_t n = io::index(io::field(j, "dim", path), io::at(path, "dim"));
  if (n > opt.max_dim && !opt.allow_large)
    throw UsageError(io::at(path, "dim") + ": dimension " + std::to_string(n) +
                     " exceeds HOPFFORGE_MAX_DIM=" + std::to_string(opt.max_dim));
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    labels = io::strings(j["basis"], io::at(path, "basis"));
    if (labels.size() != n)
      throw DimensionMismatch(io::at(path, "basis") + ": " + std::to_string(labels.size()) +
                              " labels for dim " + std::to_string(n));
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  const Space h = io::space_from_labels(std::move(labels), io::at(path, "basis"));
  const Space hh = tensor(h, h);
  const Space u = Space::unit();
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "H";
  return HopfAlgebra(name, Object(h), io::matrix(io::field(j, "mul", path), hh, h, io::at(path, "mul")),
                     io::flat(io::field(j, "unit", path), u, h, true, io::at(path, "unit")),
                     io::matrix(io::field(j, "comul", path), h, hh, io::at(path, "comul")),
                     io::flat(io::field(j, "counit", path), h, u, false, io::at(path, "counit")),
                     io::matrix(io::field(j, "antipode", path), h, h, io::at(path, "antipode")));
}

inline GroupCrossedModule parse_crossed_module(const Json& j, const std::string& path) {
  GroupCrossedModule x;
  x.m = parse_group(io::field(j, "M", path), io::at(path, "M"));
  x.n = parse_group(io::field(j, "N", path), io::at(path, "N"));
  const Json& b = io::field(j, "boundary", path);
  const std::string bp = io::at(path, "boundary");
  if (!b.is_array() || b.size() != x.m.order())
    throw DimensionMismatch(bp + ": expected " + std::to_string(x.m.order()) + " indices");
  for (std::size_t k = 0; k < b.size(); ++k) {
    const std::size_t v = io::index(b[k], io::at(bp, k));
    if (v >= x.n.order()) throw DimensionMismatch(io::at(bp, k) + ": index out of range");
    x.boundary.push_back(v);
  }
  const Json& a = io::field(j, "action", path);
  const std::string ap = io::at(path, "action");
  if (!a.is_array() || a.size() != x.n.order())
    throw DimensionMismatch(ap + ": expected " + std::to_string(x.n.order()) + " rows");
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (!a[r].is_array() || a[r].size() != x.m.order())
      throw DimensionMismatch(io::at(ap, r) + ": expected " + std::to_string(x.m.order()) + " entries");
    std::vector<std::size_t> row;
    for (std::size_t c = 0; c < a[r].size(); ++c) {
      const std::size_t v = io::index(a[r][c], io::at(io::at(ap, r), c));
      if (v >= x.m.order()) throw DimensionMismatch(io::at(io::at(ap, r), c) + ": index out of range");
      row.push_back(v);
    }
    x.action.push_back(std::move(row));
  }
  x.validate();
  return x;
}

inline HopfProjection parse_projection(const Json& j, const std::string& path, const ParseOptions& opt) {
  if (j.is_object() && j.contains("builtin")) {
    Document d = builtin(j["builtin"].get<std::string>(), opt.allow_large, opt.max_dim);
    if (!d.projection) throw SchemaError(io::at(path, "builtin") + ": fixture is not a projection");
    return *d.projection;
  }
  const HopfAlgebra big = parse_hopf(io::field(j, "big", path), io::at(path, "big"), opt);
  const HopfAlgebra small = parse_hopf(io::field(j, "small", path), io::at(path, "small"), opt);
  return HopfProjection(big, small,
                        io::matrix(io::field(j, "proj", path), big.space(), small.space(), io::at(path, "proj")),
                        io::matrix(io::field(j, "incl", path), small.space(), big.space(), io::at(path, "incl")));
}

inline YDModule parse_yd(const Json& j, const std::string& path, const ParseOptions& opt) {
  const HopfAlgebra h = parse_hopf(io::field(j, "over", path), io::at(path, "over"), opt);
  const std::size_t n = io::index(io::field(j, "dim", path), io::at(path, "dim"));
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    labels = io::strings(j["basis"], io::at(path, "basis"));
    if (labels.size() != n) throw DimensionMismatch(io::at(path, "basis") + ": wrong number of labels");
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  }
  const Space v = io::space_from_labels(std::move(labels), io::at(path, "basis"));
  return make_yd(h, v, io::matrix(io::field(j, "action", path), tensor(h.space(), v), v, io::at(path, "action")),
                 io::matrix(io::field(j, "coaction", path), v, tensor(h.space(), v), io::at(path, "coaction")));
}

inline TruncatedSimplicialHopf parse_simplicial(const Json& j, const std::string& path,
                                                const ParseOptions& opt) {
  const Json& l = io::field(j, "levels", path);
  const std::string lp = io::at(path, "levels");
  if (!l.is_array() || l.empty()) throw SchemaError(lp + ": expected a non-empty array");
  if (l.size() > max_simplicial_level + 1)
    throw SchemaError(lp + ": at most " + std::to_string(max_simplicial_level + 1) + " levels");
  std::vector<HopfAlgebra> levels;
  for (std::size_t n = 0; n < l.size(); ++n) levels.push_back(parse_hopf(l[n], io::at(lp, n), opt));
  const std::size_t top = levels.size() - 1;
  auto maps = [&](const char* key, bool faces) {
    const Json& f = io::field(j, key, path);
    const std::string fp = io::at(path, key);
    if (!f.is_array() || f.size() != top)
      throw SchemaError(fp + ": expected " + std::to_string(top) + " lists");
    std::vector<std::vector<LinMap>> out;
    for (std::size_t k = 0; k < top; ++k) {
      // faces[k] belong to level k+1, degeneracies[k] leave level k.
      const std::size_t count = k + (faces ? 2 : 1);
      const std::string kp = io::at(fp, k);
      if (!f[k].is_array() || f[k].size() != count)
        throw SchemaError(kp + ": expected " + std::to_string(count) + " matrices");
      std::vector<LinMap> row;
      const HopfAlgebra& src = faces ? levels[k + 1] : levels[k];
      const HopfAlgebra& dst = faces ? levels[k] : levels[k + 1];
      for (std::size_t i = 0; i < count; ++i)
        row.push_back(io::matrix(f[k][i], src.space(), dst.space(), io::at(kp, i)));
      out.push_back(std::move(row));
    }
    return out;
  };
  auto faces = maps("faces", true);
  faces.insert(faces.begin(), std::vector<LinMap>{});
  return TruncatedSimplicialHopf(levels, faces, maps("degeneracies", false));
}

inline Kind detect_kind(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  if (j.contains("kind")) {
    const std::string k = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    for (Kind c : {Kind::Hopf, Kind::Group, Kind::CrossedModule, Kind::Projection, Kind::YDModule,
                   Kind::Simplicial})
      if (k == kind_name(c)) return c;
    throw SchemaError(io::at(path, "kind") + ": unknown kind \"" + k + "\"");
  }
  if (j.contains("levels")) return Kind::Simplicial;
  if (j.contains("M") || j.contains("N")) return Kind::CrossedModule;
  if (j.contains("proj")) return Kind::Projection;
  if (j.contains("over")) return Kind::YDModule;
  if (j.contains("table")) return Kind::Group;
  if (j.contains("mul")) return Kind::Hopf;
  throw SchemaError(path + ": cannot tell what kind of document this is");
}

inline Document parse_document(const Json& j, const ParseOptions& opt) {
  const std::string root = "$";
  if (j.is_object() && j.contains("builtin") && !j.contains("kind")) {
    if (!j["builtin"].is_string()) throw SchemaError("$.builtin: expected a string");
    return builtin(j["builtin"].get<std::string>(), opt.allow_large, opt.max_dim);
  }
  Document d;
  d.kind = detect_kind(j, root);
  switch (d.kind) {
    case Kind::Hopf: d.hopf = parse_hopf(j, root, opt); break;
    case Kind::Group: d.group = parse_group(j, root); break;
    case Kind::CrossedModule:
      d.xmod = parse_crossed_module(j, root);
      d.simplicial = linearize(nerve_of_crossed_module(*d.xmod, nerve_top(*d.xmod, opt.max_dim)));
      break;
    case Kind::Projection: d.projection = parse_projection(j, root, opt); break;
    case Kind::YDModule: d.yd = parse_yd(j, root, opt); break;
    case Kind::Simplicial: d.simplicial = parse_simplicial(j, root, opt); break;
  }
  return d;
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline Document parse_definition(const std::string& file, const ParseOptions& opt) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(parse_json_text(ss.str(), file), opt);
}

// ---------------------------------------------------------------------------
// Serialization; parse(write(x)) reproduces x.

inline Json to_json(const HopfAlgebra& h) {
  if (h.is_braided()) throw UsageError(h.name() + " lives in a YD category; only Vect algebras serialize");
  Json j;
  j["field"] = "Q";
  j["name"] = h.name();
  j["dim"] = h.dim();
  j["basis"] = h.space().labels();
  j["mul"] = io::write_matrix(h.mul());
  j["unit"] = io::write_flat(h.unit(), true);
  j["comul"] = io::write_matrix(h.comul());
  j["counit"] = io::write_flat(h.counit(), false);
  j["antipode"] = io::write_matrix(h.antipode());
  return j;
}

inline Json to_json(const GroupTable& g) {
  Json t = Json::array();
  for (const auto& row : g.table()) t.push_back(row);
  return Json{{"order", g.order()}, {"elements", g.labels()}, {"table", t}};
}

inline Json to_json(const GroupCrossedModule& x) {
  Json a = Json::array();
  for (const auto& row : x.action) a.push_back(row);
  return Json{{"M", to_json(x.m)}, {"N", to_json(x.n)}, {"boundary", x.boundary}, {"action", a}};
}

inline Json to_json(const HopfProjection& p) {
  return Json{{"big", to_json(p.big())},
              {"small", to_json(p.small())},
              {"proj", io::write_matrix(p.proj())},
              {"incl", io::write_matrix(p.incl())}};
}

inline Json to_json(const YDModule& v) {
  Json j;
  j["over"] = to_json(v.over());
  j["dim"] = v.dim();
  j["basis"] = v.space().labels();
  j["action"] = io::write_matrix(v.action());
  j["coaction"] = io::write_matrix(v.coaction());
  return j;
}

inline Json to_json(const TruncatedSimplicialHopf& t) {
  Json levels = Json::array(), faces = Json::array(), degens = Json::array();
  for (const auto& h : t.levels()) levels.push_back(to_json(h));
  for (std::size_t n = 1; n <= t.top(); ++n) {
    Json row = Json::array();
    for (const auto& f : t.faces()[n]) row.push_back(io::write_matrix(f));
    faces.push_back(std::move(row));
  }
  for (std::size_t n = 0; n < t.top(); ++n) {
    Json row = Json::array();
    for (const auto& s : t.degeneracies()[n]) row.push_back(io::write_matrix(s));
    degens.push_back(std::move(row));
  }
  return Json{{"levels", levels}, {"faces", faces}, {"degeneracies", degens}};
}

inline Json to_json(const Document& d) {
  Json j;
  switch (d.kind) {
    case Kind::Hopf: j = to_json(*d.hopf); break;
    case Kind::Group: j = to_json(*d.group); break;
    case Kind::CrossedModule: j = to_json(*d.xmod); break;
    case Kind::Projection: j = to_json(*d.projection); break;
    case Kind::YDModule: j = to_json(*d.yd); break;
    case Kind::Simplicial: j = to_json(*d.simplicial); break;
  }
  Json out{{"kind", kind_name(d.kind)}};
  for (auto& [k, v] : j.items()) out[k] = v;
  return out;
}

}  // namespace hopfforge
