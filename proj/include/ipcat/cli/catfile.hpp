#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ipcat/cli/eval.hpp"

namespace ipcat {

/// A category description file. Either a built-in instance
///
///   {"instance": "finrel", "params": {"bound": 2},
///    "objects": {"X": 2},
///    "morphisms": {"f": {"src": "X", "tgt": "X", "payload": [[0, 1]]}},
///    "equations": ["dag(dag(f)) == f"],
///    "strictified": false}
///
/// or an explicit presentation (see Presentation), recognised by "objects"
/// being a list. "strictified": true replaces the dagger by the adjoint and
/// the involutor and phi by identities.
struct CatFile {
  json doc;
  AnyInstance instance;
};

/// Parses JSON, reporting syntax errors with line and column.
inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    std::string what = e.what();
    if (auto p = what.find(": ", what.find("parse error")); p != std::string::npos) what = what.substr(p + 2);
    throw ParseError("malformed JSON: " + what, line, col);
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

template <Category C>
void strictify_bundle(Bundle<C>& b) {
  if (!b.unit) {
    auto s = search_unitary_structure(b.cat, b.inv);
    if (!s.found) throw MissingStructure("\"strictified\" needs a unitary structure: " + s.detail);
    b.unit = s.found;
  }
  b.inv = adjoint_involution(b.cat, b.inv, *b.unit);
  b.unit = identity_unitary(b.cat);
}

}  // namespace detail

inline CatFile load_catfile_json(json doc) {
  if (!doc.is_object()) throw TypeError("a category file must be a JSON object");
  AnyInstance inst = [&]() -> AnyInstance {
    if (doc.contains("objects") && doc["objects"].is_array()) {
      json pres = doc;
      pres.erase("equations");
      pres.erase("strictified");
      auto b = presentation_bundle(pres);
      b.ref = b.cat->to_json();
      return b;
    }
    if (!doc.contains("instance") || !doc["instance"].is_string())
      throw TypeError("a category file needs an \"instance\" id or an \"objects\" list");
    return build_instance(doc["instance"].get<std::string>(), doc.value("params", json::object()));
  }();
  if (doc.value("strictified", false)) {
    std::visit([](auto& b) { detail::strictify_bundle(b); }, inst);
    std::visit([](auto& b) { b.ref["strictified"] = true; }, inst);
  }
  return {std::move(doc), std::move(inst)};
}

inline CatFile load_catfile_text(const std::string& text) { return load_catfile_json(parse_json_text(text)); }
inline CatFile load_catfile(const std::string& path) { return load_catfile_text(read_text_file(path)); }

namespace detail {

inline void require_dsl_name(const std::string& n, const char* what) {
  bool ok = !n.empty() && dsl::is_name_start(n[0]) && !dsl::is_reserved(n);
  for (char ch : n) ok = ok && dsl::is_name_char(ch);
  if (!ok) throw TypeError(std::string(what) + " name '" + n + "' is not usable in expressions");
}

}  // namespace detail

/// Names visible to DSL expressions: for a presentation its own object and
/// morphism names, otherwise the file's "objects" and "morphisms" maps.
template <Category C>
dsl::Env<C> make_env(const Bundle<C>& b, const json& doc) {
  dsl::Env<C> env;
  const C& c = *b.cat;
  if constexpr (std::is_same_v<C, Presentation>) {
    for (const auto& a : c.objects())
      if (!dsl::is_reserved(a)) env.objects.emplace(a, a);
    for (const auto& n : c.morphism_names()) {
      auto f = c.resolve(n);
      env.morphisms.emplace(n, typename dsl::Env<C>::Binding{f, f.src, f.tgt});
    }
    return env;
  }
  const json objs = doc.value("objects", json::object());
  if (!objs.is_object()) throw TypeError("\"objects\" must map names to objects");
  for (const auto& [name, oj] : objs.items()) {
    detail::require_dsl_name(name, "object");
    env.objects.emplace(name, c.parse_obj(oj));
  }
  const json mors = doc.value("morphisms", json::object());
  if (!mors.is_object()) throw TypeError("\"morphisms\" must map names to {src, tgt, payload}");
  for (const auto& [name, mj] : mors.items()) {
    detail::require_dsl_name(name, "morphism");
    if (!mj.is_object() || !mj.contains("src") || !mj.contains("tgt") || !mj.contains("payload"))
      throw TypeError("morphism '" + name + "' needs src, tgt and payload");
    const auto src = mj["src"].template get<std::string>();
    const auto tgt = mj["tgt"].template get<std::string>();
    if (!env.objects.count(src)) throw TypeError("morphism '" + name + "' has unknown source object '" + src + "'");
    if (!env.objects.count(tgt)) throw TypeError("morphism '" + name + "' has unknown target object '" + tgt + "'");
    env.morphisms.emplace(name, typename dsl::Env<C>::Binding{
                                    c.parse_mor(env.objects.at(src), env.objects.at(tgt), mj["payload"]), src, tgt});
  }
  return env;
}

}  // namespace ipcat
