#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ipcat/core/category.hpp"

namespace ipcat {

/// A finite category given by explicit tables. Objects and morphisms are
/// names; the identity on A is the implicit morphism "id[A]".
///
///   {"objects": ["A", ...],
///    "morphisms": [{"name": "f", "src": "A", "tgt": "B", "payload": ...}, ...],
///    "compose": [["f", "g", "f;g"], ...],
///    "dagger": {"objects": {"A": "A"}, "morphisms": {"f": "f'"}},
///    "iota": {"A": "id[A]"},
///    "phi": {"A": "p"}}
///
/// Missing dagger objects map to themselves, missing iota entries are
/// identities, and "phi" is optional.
class Presentation {
 public:
  using Obj = std::string;
  using Payload = std::string;
  using Mor = Morphism<Obj, Payload>;

  struct Arrow {
    std::string src, tgt;
    json payload;
  };

  static std::string id_name(const std::string& a) { return "id[" + a + "]"; }

  /// Parses and validates; every failure is a TypeError naming the culprit.
  static Presentation from_json(const json& j) {
    Presentation p;
    if (!j.is_object()) throw TypeError("presentation must be a JSON object");
    if (!j.contains("objects") || !j["objects"].is_array()) throw TypeError("presentation needs an \"objects\" list");
    for (const auto& o : j["objects"]) {
      if (!o.is_string()) throw TypeError("object names must be strings, got " + o.dump());
      if (!p.object_set_.insert(o.get<std::string>()).second) throw TypeError("duplicate object " + o.dump());
      p.objects_.push_back(o.get<std::string>());
    }
    for (const auto& m : j.value("morphisms", json::array())) {
      if (!m.is_object() || !m.contains("name") || !m.contains("src") || !m.contains("tgt"))
        throw TypeError("morphism entries need name, src and tgt: " + m.dump());
      const auto name = m["name"].get<std::string>();
      const auto src = m["src"].get<std::string>();
      const auto tgt = m["tgt"].get<std::string>();
      p.require_object(src);
      p.require_object(tgt);
      if (name.rfind("id[", 0) == 0 || p.arrows_.count(name)) throw TypeError("duplicate or reserved morphism name " + name);
      p.arrows_[name] = {src, tgt, m.value("payload", json())};
      p.order_.push_back(name);
    }
    for (const auto& e : j.value("compose", json::array())) {
      if (!e.is_array() || e.size() != 3) throw TypeError("compose entries are [f, g, f;g], got " + e.dump());
      const auto f = p.resolve(e[0].get<std::string>());
      const auto g = p.resolve(e[1].get<std::string>());
      const auto h = p.resolve(e[2].get<std::string>());
      if (f.tgt != g.src) throw TypeError("compose entry " + e.dump() + " is not composable");
      if (h.src != f.src || h.tgt != g.tgt) throw TypeError("compose entry " + e.dump() + " has the wrong type");
      auto [it, fresh] = p.table_.emplace(std::pair{f.payload, g.payload}, h.payload);
      if (!fresh && it->second != h.payload) throw TypeError("compose entry " + e.dump() + " contradicts an earlier one");
    }
    const json dag = j.value("dagger", json::object());
    const json dag_objs = dag.value("objects", json::object());
    for (const auto& [a, b] : dag_objs.items()) {
      p.require_object(a);
      p.require_object(b.get<std::string>());
      p.dag_obj_[a] = b.get<std::string>();
    }
    const json dag_mors = dag.value("morphisms", json::object());
    for (const auto& [f, g] : dag_mors.items()) {
      p.resolve(f);
      p.resolve(g.get<std::string>());
      p.dag_mor_[f] = g.get<std::string>();
    }
    const json iotas = j.value("iota", json::object());
    for (const auto& [a, f] : iotas.items()) {
      p.require_object(a);
      p.iota_[a] = p.resolve(f.get<std::string>()).payload;
    }
    if (j.contains("phi")) {
      std::map<std::string, std::string> phi;
      for (const auto& [a, f] : j["phi"].items()) {
        p.require_object(a);
        phi[a] = p.resolve(f.get<std::string>()).payload;
      }
      p.phi_ = std::move(phi);
    }
    p.validate();
    return p;
  }

  json to_json() const {
    json j;
    j["objects"] = objects_;
    json ms = json::array();
    for (const auto& n : order_) {
      const auto& a = arrows_.at(n);
      json m{{"name", n}, {"src", a.src}, {"tgt", a.tgt}};
      if (!a.payload.is_null()) m["payload"] = a.payload;
      ms.push_back(m);
    }
    j["morphisms"] = ms;
    json comp = json::array();
    for (const auto& [fg, h] : table_) comp.push_back({fg.first, fg.second, h});
    j["compose"] = comp;
    j["dagger"] = {{"objects", dag_obj_}, {"morphisms", dag_mor_}};
    j["iota"] = iota_;
    if (phi_) j["phi"] = *phi_;
    return j;
  }

  std::string name() const { return "presentation"; }
  std::vector<Obj> objects() const { return objects_; }
  const std::vector<std::string>& morphism_names() const { return order_; }
  const std::optional<std::map<std::string, std::string>>& phi_table() const { return phi_; }

  Mor id(const Obj& a) const { return {a, a, id_name(a)}; }

  Mor resolve(const std::string& name) const {
    if (name.rfind("id[", 0) == 0 && name.size() > 4 && name.back() == ']') {
      const auto a = name.substr(3, name.size() - 4);
      require_object(a);
      return id(a);
    }
    auto it = arrows_.find(name);
    if (it == arrows_.end()) throw TypeError("unknown morphism " + name);
    return {it->second.src, it->second.tgt, name};
  }

  Mor compose(const Mor& f, const Mor& g) const {
    if (f.tgt != g.src) detail::throw_not_composable(*this, f, g);
    if (is_identity(f)) return g;
    if (is_identity(g)) return f;
    auto it = table_.find({f.payload, g.payload});
    if (it == table_.end()) throw TypeError("composition table has no entry for " + f.payload + " ; " + g.payload);
    return resolve(it->second);
  }

  bool hom_is_finite(const Obj&, const Obj&) const { return true; }

  std::vector<Mor> hom(const Obj& a, const Obj& b) const {
    std::vector<Mor> out;
    if (a == b) out.push_back(id(a));
    for (const auto& n : order_) {
      const auto& ar = arrows_.at(n);
      if (ar.src == a && ar.tgt == b) out.push_back({a, b, n});
    }
    return out;
  }

  std::uint64_t support_size(const Obj& a, const Obj& b) const { return hom(a, b).size(); }
  Mor support_at(const Obj& a, const Obj& b, std::uint64_t i) const { return hom(a, b).at(i); }

  std::optional<Mor> inverse(const Mor& f) const {
    for (const auto& g : hom(f.tgt, f.src))
      if (compose(f, g) == id(f.src) && compose(g, f) == id(f.tgt)) return g;
    return std::nullopt;
  }

  Obj dag_obj(const Obj& a) const {
    auto it = dag_obj_.find(a);
    return it == dag_obj_.end() ? a : it->second;
  }

  Mor dag_mor(const Mor& f) const {
    if (is_identity(f)) return id(dag_obj(f.src));
    auto it = dag_mor_.find(f.payload);
    if (it == dag_mor_.end()) throw TypeError("dagger table has no entry for " + f.payload);
    return resolve(it->second);
  }

  Mor iota(const Obj& a) const {
    auto it = iota_.find(a);
    return it == iota_.end() ? id(a) : resolve(it->second);
  }

  std::optional<Mor> phi(const Obj& a) const {
    if (!phi_) return std::nullopt;
    auto it = phi_->find(a);
    if (it == phi_->end()) throw TypeError("phi table has no entry for " + a);
    return resolve(it->second);
  }

  json obj_json(const Obj& a) const { return a; }
  json payload_json(const Payload& p) const { return p; }

  Obj parse_obj(const json& j) const {
    if (!j.is_string()) throw TypeError("object must be a name, got " + j.dump());
    require_object(j.get<std::string>());
    return j.get<std::string>();
  }

  Mor parse_mor(const Obj& a, const Obj& b, const json& j) const {
    if (!j.is_string()) throw TypeError("morphism must be a name, got " + j.dump());
    auto f = resolve(j.get<std::string>());
    if (f.src != a || f.tgt != b) throw TypeError("morphism " + j.dump() + " does not go " + a + " -> " + b);
    return f;
  }

 private:
  static bool is_identity(const Mor& f) { return f.payload == id_name(f.src) && f.src == f.tgt; }

  void require_object(const std::string& a) const {
    if (!object_set_.count(a)) throw TypeError("unknown object " + a);
  }

  /// Totality of the composition and dagger tables, and endpoint typing of
  /// dagger and involutor entries.
  void validate() const {
    for (const auto& a : objects_)
      for (const auto& b : objects_)
        for (const auto& f : hom(a, b))
          for (const auto& c : objects_)
            for (const auto& g : hom(b, c)) compose(f, g);
    for (const auto& n : order_) {
      const auto f = resolve(n);
      const auto d = dag_mor(f);
      if (d.src != dag_obj(f.tgt) || d.tgt != dag_obj(f.src))
        throw TypeError("dagger of " + n + " must go " + dag_obj(f.tgt) + " -> " + dag_obj(f.src));
    }
    for (const auto& a : objects_) {
      const auto i = iota(a);
      if (i.src != a || i.tgt != dag_obj(dag_obj(a))) throw TypeError("iota at " + a + " has the wrong type");
      if (phi_) {
        const auto p = *phi(a);
        if (p.src != a || p.tgt != dag_obj(a)) throw TypeError("phi at " + a + " has the wrong type");
      }
    }
  }

  std::vector<std::string> objects_;
  std::set<std::string> object_set_;
  std::map<std::string, Arrow> arrows_;
  std::vector<std::string> order_;
  std::map<std::pair<std::string, std::string>, std::string> table_;
  std::map<std::string, std::string> dag_obj_;
  std::map<std::string, std::string> dag_mor_;
  std::map<std::string, std::string> iota_;
  std::optional<std::map<std::string, std::string>> phi_;
};

}  // namespace ipcat
