#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kdual/corpus.hpp"

namespace kdual {

inline constexpr const char* kObjectSchema = "koszul-objects/1";

enum class ObjectKind { Algebra, Coalgebra, Lie, Complex, Morphism };

std::string kind_name(ObjectKind k);

struct MorphismObject {
  std::string source;
  std::string target;
  GradedMap map;
};

using ObjectValue = std::variant<DgAlgebra, DgCoalgebra, DgLieAlgebra, Complex, MorphismObject>;

struct NamedObject {
  std::string name;
  ObjectKind kind;
  ObjectValue value;
  std::optional<Filtration> filtration;

  const Complex& complex() const;
};

// An object that failed to load, with the location of the offending entry.
struct LoadError {
  std::string name;
  std::string location;
  std::string kind;  // exception class, e.g. "DegreeError"
  std::string message;
};

// Structure constants are listed explicitly; absent entries are zero.
//   {"schema": "koszul-objects/1", "field": "Q",
//    "objects": [{"name": .., "kind": "algebra|coalgebra|lie|complex|morphism",
//                 "basis": [{"name": "x", "degree": 2}],
//                 "differential": [["x", "y", "1"]],      d x = 1 y
//                 "product": [["a", "b", "c", "3/7"]],    a b = 3/7 c
//                 "coproduct": [["y", "x", "x", "1"]],    Delta y = x (x) x
//                 "bracket": [["p", "p", "z", "1"]],
//                 "filtration": [["x"], ["x", "y"]],
//                 "source": "C", "target": "D", "degree": 0,
//                 "entries": [["x", "x'", "1"]]}]}     morphisms only
struct ObjectSet {
  Field field;
  std::vector<NamedObject> objects;
  std::vector<LoadError> errors;

  const NamedObject* find(const std::string& name) const;
};

// Throws ParseError (with line and column) on malformed JSON or a wrong
// schema; errors inside an object are collected per object. The field
// override replaces the field named in the file.
ObjectSet parse_objects(const std::string& text, const std::optional<Field>& field = std::nullopt);
ObjectSet load_objects(const std::string& path, const std::optional<Field>& field = std::nullopt);

nlohmann::json object_to_json(const NamedObject& o);
nlohmann::json objects_to_json(const ObjectSet& s);

ObjectSet corpus_objects(const Field& f);

}  // namespace kdual
