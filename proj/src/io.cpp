#include "kdual/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace kdual {

using nlohmann::json;

std::string kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::Algebra:
      return "algebra";
    case ObjectKind::Coalgebra:
      return "coalgebra";
    case ObjectKind::Lie:
      return "lie";
    case ObjectKind::Complex:
      return "complex";
    case ObjectKind::Morphism:
      return "morphism";
  }
  return "";
}

const Complex& NamedObject::complex() const {
  switch (kind) {
    case ObjectKind::Algebra:
      return std::get<DgAlgebra>(value).cx;
    case ObjectKind::Coalgebra:
      return std::get<DgCoalgebra>(value).cx;
    case ObjectKind::Lie:
      return std::get<DgLieAlgebra>(value).cx;
    case ObjectKind::Complex:
      return std::get<Complex>(value);
    case ObjectKind::Morphism:
      break;
  }
  throw PreconditionError(name + " has no underlying complex");
}

const NamedObject* ObjectSet::find(const std::string& name) const {
  for (const auto& o : objects)
    if (o.name == name) return &o;
  return nullptr;
}

namespace {

// Error raised while reading one object; `where` is a JSON path.
struct Located {
  std::string where;
  std::string kind;
  std::string message;
};

[[noreturn]] void fail_at(const std::string& where, const std::string& kind, const std::string& message) {
  throw Located{where, kind, message};
}

std::pair<size_t, size_t> line_column(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Scalar read_scalar(const Field& f, const json& j, const std::string& where) {
  try {
    if (j.is_string()) return f.parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<int64_t>());
  } catch (const CharacteristicError& e) {
    fail_at(where, "CharacteristicError", e.what());
  } catch (const Error& e) {
    fail_at(where, "ParseError", e.what());
  }
  fail_at(where, "ParseError", "scalar must be an exact string or an integer");
}

class Reader {
 public:
  Reader(const Field& f, const json& o, std::string where) : f_(f), o_(o), where_(std::move(where)) {}

  SpacePtr basis() {
    if (!o_.contains("basis")) return make_space({});
    const json& b = o_.at("basis");
    if (!b.is_array()) fail_at(where_ + ".basis", "ParseError", "basis must be an array");
    std::vector<BasisElement> out;
    for (size_t i = 0; i < b.size(); ++i) {
      std::string w = where_ + ".basis[" + std::to_string(i) + "]";
      const json& e = b[i];
      if (!e.is_object() || !e.contains("name") || !e.contains("degree") || !e["name"].is_string() ||
          !e["degree"].is_number_integer())
        fail_at(w, "ParseError", "basis entries need a name and an integer degree");
      out.push_back({e["name"].get<std::string>(), e["degree"].get<int>()});
    }
    try {
      return make_space(std::move(out));
    } catch (const Error& e) {
      fail_at(where_ + ".basis", "PreconditionError", e.what());
    }
  }

  size_t index(const GradedSpace& v, const json& j, const std::string& where) const {
    if (!j.is_string()) fail_at(where, "ParseError", "expected a basis label");
    auto k = v.find(j.get<std::string>());
    if (!k) fail_at(where, "ParseError", "unknown basis label " + j.get<std::string>());
    return *k;
  }

  // Rows of `arity` labels followed by a scalar.
  template <class Fn>
  void rows(const char* key, size_t arity, Fn fn) const {
    if (!o_.contains(key)) return;
    const json& a = o_.at(key);
    std::string base = where_ + "." + key;
    if (!a.is_array()) fail_at(base, "ParseError", std::string(key) + " must be an array");
    for (size_t i = 0; i < a.size(); ++i) {
      std::string w = base + "[" + std::to_string(i) + "]";
      if (!a[i].is_array() || a[i].size() != arity + 1) fail_at(w, "ParseError", "expected " + std::to_string(arity + 1) + " fields");
      fn(a[i], read_scalar(f_, a[i][arity], w), w);
    }
  }

  std::vector<Vec> differential(const GradedSpace& v) const {
    std::vector<Vec> cols(v.dim());
    rows("differential", 2, [&](const json& r, const Scalar& s, const std::string& w) {
      size_t i = index(v, r[0], w), j = index(v, r[1], w);
      if (v.degree(j) != v.degree(i) - 1)
        fail_at(w, "DegreeError", "d " + v.name(i) + " must have degree " + std::to_string(v.degree(i) - 1));
      add_term(cols[i], j, s);
    });
    return cols;
  }

  ProductTable table(const char* key, const GradedSpace& v) const {
    ProductTable t;
    rows(key, 3, [&](const json& r, const Scalar& s, const std::string& w) {
      size_t i = index(v, r[0], w), j = index(v, r[1], w), k = index(v, r[2], w);
      if (v.degree(k) != v.degree(i) + v.degree(j))
        fail_at(w, "DegreeError", v.name(i) + "." + v.name(j) + " has degree " +
                                      std::to_string(v.degree(i) + v.degree(j)) + ", " + v.name(k) + " has degree " +
                                      std::to_string(v.degree(k)));
      add_term(t[{i, j}], k, s);
    });
    for (auto it = t.begin(); it != t.end();) it = it->second.empty() ? t.erase(it) : std::next(it);
    return t;
  }

  std::vector<Vec> coproduct(const GradedSpace& v) const {
    size_t n = v.dim();
    std::vector<Vec> out(n);
    rows("coproduct", 3, [&](const json& r, const Scalar& s, const std::string& w) {
      size_t i = index(v, r[0], w), a = index(v, r[1], w), b = index(v, r[2], w);
      if (v.degree(i) != v.degree(a) + v.degree(b))
        fail_at(w, "DegreeError", "Delta " + v.name(i) + " has degree " + std::to_string(v.degree(i)) + ", " +
                                      v.name(a) + "(x)" + v.name(b) + " has degree " +
                                      std::to_string(v.degree(a) + v.degree(b)));
      add_term(out[i], a * n + b, s);
    });
    return out;
  }

  std::optional<Filtration> filtration(const GradedSpace& v) const {
    if (!o_.contains("filtration")) return std::nullopt;
    const json& st = o_.at("filtration");
    std::string base = where_ + ".filtration";
    if (!st.is_array()) fail_at(base, "ParseError", "filtration must be an array of stages");
    Filtration out;
    for (size_t i = 0; i < st.size(); ++i) {
      std::string w = base + "[" + std::to_string(i) + "]";
      if (!st[i].is_array()) fail_at(w, "ParseError", "a stage lists basis labels");
      Subspace s(f_);
      for (size_t k = 0; k < st[i].size(); ++k) s.insert(unit(f_, index(v, st[i][k], w + "[" + std::to_string(k) + "]")));
      out.stages.push_back(std::move(s));
    }
    return out;
  }

 private:
  const Field& f_;
  const json& o_;
  std::string where_;
};

NamedObject read_object(const Field& f, const json& o, const std::string& where, const ObjectSet& earlier) {
  if (!o.is_object()) fail_at(where, "ParseError", "object expected");
  if (!o.contains("name") || !o["name"].is_string()) fail_at(where, "ParseError", "missing name");
  if (!o.contains("kind") || !o["kind"].is_string()) fail_at(where, "ParseError", "missing kind");
  std::string name = o["name"].get<std::string>(), kind = o["kind"].get<std::string>();
  Reader r(f, o, where);
  if (kind == "morphism") {
    auto endpoint = [&](const char* key) -> const NamedObject& {
      if (!o.contains(key) || !o[key].is_string()) fail_at(where + "." + key, "ParseError", "missing endpoint");
      const NamedObject* x = earlier.find(o[key].get<std::string>());
      if (!x || x->kind == ObjectKind::Morphism)
        fail_at(where + "." + key, "ParseError", "unknown object " + o[key].get<std::string>());
      return *x;
    };
    const NamedObject& s = endpoint("source");
    const NamedObject& t = endpoint("target");
    int degree = 0;
    if (o.contains("degree")) {
      if (!o["degree"].is_number_integer()) fail_at(where + ".degree", "ParseError", "degree must be an integer");
      degree = o["degree"].get<int>();
    }
    const auto& vs = *s.complex().space();
    const auto& vt = *t.complex().space();
    std::vector<Vec> cols(vs.dim());
    r.rows("entries", 2, [&](const json& row, const Scalar& c, const std::string& w) {
      size_t i = r.index(vs, row[0], w), j = r.index(vt, row[1], w);
      if (vt.degree(j) != vs.degree(i) + degree)
        fail_at(w, "DegreeError", "entry " + vs.name(i) + " -> " + vt.name(j) + " is not of degree " + std::to_string(degree));
      add_term(cols[i], j, c);
    });
    GradedMap m(f, s.complex().space(), t.complex().space(), degree, std::move(cols));
    return {name, ObjectKind::Morphism, MorphismObject{s.name, t.name, std::move(m)}, std::nullopt};
  }
  SpacePtr v = r.basis();
  Complex cx(GradedMap(f, v, v, -1, r.differential(*v)));
  auto filt = r.filtration(*v);
  if (kind == "algebra") return {name, ObjectKind::Algebra, DgAlgebra(cx, r.table("product", *v)), filt};
  if (kind == "lie") return {name, ObjectKind::Lie, DgLieAlgebra(cx, r.table("bracket", *v)), filt};
  if (kind == "coalgebra") return {name, ObjectKind::Coalgebra, DgCoalgebra(cx, r.coproduct(*v)), filt};
  if (kind == "complex") return {name, ObjectKind::Complex, cx, filt};
  fail_at(where + ".kind", "ParseError", "unknown kind " + kind);
}

}  // namespace

ObjectSet parse_objects(const std::string& text, const std::optional<Field>& field) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("schema") || doc["schema"] != kObjectSchema)
    throw ParseError(std::string("schema must be ") + kObjectSchema);
  ObjectSet out;
  if (field) {
    out.field = *field;
  } else if (doc.contains("field")) {
    if (!doc["field"].is_string()) throw ParseError("field must be a string");
    out.field = Field::parse(doc["field"].get<std::string>());
  }
  if (!doc.contains("objects")) return out;
  const json& objs = doc["objects"];
  if (!objs.is_array()) throw ParseError("objects must be an array");
  for (size_t i = 0; i < objs.size(); ++i) {
    std::string where = "objects[" + std::to_string(i) + "]";
    std::string name = objs[i].is_object() && objs[i].contains("name") && objs[i]["name"].is_string()
                           ? objs[i]["name"].get<std::string>()
                           : where;
    try {
      if (out.find(name)) fail_at(where + ".name", "ParseError", "duplicate object name " + name);
      out.objects.push_back(read_object(out.field, objs[i], where, out));
    } catch (const Located& e) {
      out.errors.push_back({name, e.where, e.kind, e.message});
    } catch (const DegreeError& e) {
      out.errors.push_back({name, where, "DegreeError", e.what()});
    } catch (const Error& e) {
      out.errors.push_back({name, where, "Error", e.what()});
    }
  }
  return out;
}

ObjectSet load_objects(const std::string& path, const std::optional<Field>& field) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_objects(ss.str(), field);
}

namespace {

json basis_json(const GradedSpace& v) {
  json b = json::array();
  for (const auto& e : v.elements()) b.push_back({{"name", e.name}, {"degree", e.degree}});
  return b;
}

json map_rows(const GradedSpace& src, const GradedSpace& tgt, const std::vector<Vec>& cols) {
  json rows = json::array();
  for (size_t i = 0; i < cols.size(); ++i)
    for (const auto& [j, s] : cols[i]) rows.push_back({src.name(i), tgt.name(j), s.to_string()});
  return rows;
}

json table_rows(const GradedSpace& v, const ProductTable& t) {
  json rows = json::array();
  for (const auto& [ij, vec] : t)
    for (const auto& [k, s] : vec) rows.push_back({v.name(ij.first), v.name(ij.second), v.name(k), s.to_string()});
  return rows;
}

}  // namespace

json object_to_json(const NamedObject& o) {
  json j{{"name", o.name}, {"kind", kind_name(o.kind)}};
  if (o.kind == ObjectKind::Morphism) {
    const auto& m = std::get<MorphismObject>(o.value);
    j["source"] = m.source;
    j["target"] = m.target;
    j["degree"] = m.map.degree();
    j["entries"] = map_rows(*m.map.source(), *m.map.target(), m.map.cols());
    return j;
  }
  const Complex& cx = o.complex();
  const auto& v = *cx.space();
  j["basis"] = basis_json(v);
  auto d = map_rows(v, v, cx.d().cols());
  if (!d.empty()) j["differential"] = d;
  if (o.kind == ObjectKind::Algebra) {
    auto t = table_rows(v, std::get<DgAlgebra>(o.value).mu);
    if (!t.empty()) j["product"] = t;
  } else if (o.kind == ObjectKind::Lie) {
    auto t = table_rows(v, std::get<DgLieAlgebra>(o.value).bracket);
    if (!t.empty()) j["bracket"] = t;
  } else if (o.kind == ObjectKind::Coalgebra) {
    const auto& c = std::get<DgCoalgebra>(o.value);
    json rows = json::array();
    size_t n = v.dim();
    for (size_t i = 0; i < n; ++i)
      for (const auto& [t, s] : c.delta[i]) rows.push_back({v.name(i), v.name(t / n), v.name(t % n), s.to_string()});
    if (!rows.empty()) j["coproduct"] = rows;
  }
  if (o.filtration) {
    json st = json::array();
    for (const auto& s : o.filtration->stages) {
      json names = json::array();
      for (size_t p : s.pivots()) names.push_back(v.name(p));
      st.push_back(names);
    }
    j["filtration"] = st;
  }
  return j;
}

json objects_to_json(const ObjectSet& s) {
  json objs = json::array();
  for (const auto& o : s.objects) objs.push_back(object_to_json(o));
  return {{"schema", kObjectSchema}, {"field", s.field.to_string()}, {"objects", objs}};
}

ObjectSet corpus_objects(const Field& f) {
  Corpus c = builtin_corpus(f);
  ObjectSet s;
  s.field = f;
  for (auto& x : c.coalgebras) s.objects.push_back({x.name, ObjectKind::Coalgebra, x.coalgebra, std::nullopt});
  for (auto& x : c.algebras) s.objects.push_back({x.name, ObjectKind::Algebra, x.algebra, std::nullopt});
  for (auto& x : c.lies) s.objects.push_back({x.name, ObjectKind::Lie, x.lie, std::nullopt});
  return s;
}

}  // namespace kdual
