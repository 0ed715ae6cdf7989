#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ipcat/adjoint.hpp"
#include "ipcat/cli/dsl.hpp"
#include "ipcat/instances/registry.hpp"

namespace ipcat::dsl {

/// Named objects and morphisms a DSL expression may refer to.
template <Category C>
struct Env {
  struct Binding {
    MorOf<C> mor;
    std::string src, tgt;
  };
  std::map<std::string, ObjOf<C>> objects;
  std::map<std::string, Binding> morphisms;
};

/// A value carries its morphism and its formal endpoints. Equations compare
/// formal endpoints syntactically, so dag(dag(f)) and f have different
/// types unless the dagger is the identity on every object.
template <Category C>
struct Value {
  MorOf<C> mor;
  ObjTerm src, tgt;
};

template <Category C>
struct EquationResult {
  Equation eq;
  bool equal = false;
  MorOf<C> lhs, rhs;

  json to_json(const C& c) const {
    return json{{"equation", print(eq)}, {"equal", equal}, {"lhs", mor_json(c, lhs)}, {"rhs", mor_json(c, rhs)}};
  }
};

template <Category C>
class Evaluator {
 public:
  Evaluator(const Bundle<C>& b, Env<C> env) : b_(b), env_(std::move(env)) {
    strict_objects_ = true;
    for (const auto& x : b_.cat->objects())
      if (!(b_.inv.dag(x) == x)) { strict_objects_ = false; break; }
  }

  bool strict_on_objects() const { return strict_objects_; }

  Value<C> eval(const Expr& e) const {
    const C& c = *b_.cat;
    switch (e.kind) {
      case Kind::name: {
        auto it = env_.morphisms.find(e.name);
        if (it == env_.morphisms.end()) throw TypeError("unknown morphism '" + e.name + "'");
        return {it->second.mor, norm({it->second.src, 0}), norm({it->second.tgt, 0})};
      }
      case Kind::id: {
        auto o = norm(e.obj);
        return {c.id(object(e.obj)), o, o};
      }
      case Kind::iota: {
        auto x = object(e.obj);
        return {b_.inv.iota(x), norm(e.obj), norm({e.obj.name, e.obj.dags + 2})};
      }
      case Kind::phi: {
        auto x = object(e.obj);
        return {unit(e)(x), norm(e.obj), norm({e.obj.name, e.obj.dags + 1})};
      }
      case Kind::dag: {
        auto v = eval(*e.args[0]);
        return {b_.inv.dag(v.mor), norm(bump(v.tgt)), norm(bump(v.src))};
      }
      case Kind::adj: {
        auto v = eval(*e.args[0]);
        return {adjoint(c, b_.inv, unit(e), v.mor), v.tgt, v.src};
      }
      case Kind::inv: {
        auto v = eval(*e.args[0]);
        auto g = checked_inverse(c, v.mor);
        if (!g) throw NotInvertible("ill-typed subterm '" + print(e) + "': argument is not invertible");
        return {*g, v.tgt, v.src};
      }
      case Kind::comp: {
        auto f = eval(*e.args[0]);
        auto g = eval(*e.args[1]);
        if (!(f.mor.tgt == g.mor.src))
          throw TypeError("ill-typed subterm '" + print(e) + "': target " + obj_key(c, f.mor.tgt) +
                          " differs from source " + obj_key(c, g.mor.src));
        return {c.compose(f.mor, g.mor), f.src, g.tgt};
      }
      case Kind::ip: {
        auto f = eval(*e.args[0]);
        auto g = eval(*e.args[1]);
        if (!(f.mor.tgt == g.mor.tgt))
          throw TypeError("ill-typed subterm '" + print(e) + "': arguments have different codomains");
        auto ip = ip_from_unitary(b_.cat, b_.inv, unit(e));
        return {ip(f.mor, g.mor), f.src, norm(bump(g.src))};
      }
      case Kind::dip: {
        auto h = eval(*e.args[0]);
        auto k = eval(*e.args[1]);
        if (!(h.mor.src == k.mor.src))
          throw TypeError("ill-typed subterm '" + print(e) + "': arguments have different domains");
        auto ip = ip_from_unitary(b_.cat, b_.inv, unit(e));
        return {dual_ip(c, b_.inv, ip, h.mor, k.mor), norm(bump(h.tgt)), k.tgt};
      }
    }
    throw TypeError("unhandled expression");
  }

  EquationResult<C> eval(const Equation& eq) const {
    auto l = eval(*eq.lhs);
    auto r = eval(*eq.rhs);
    if (!(l.src == r.src) || !(l.tgt == r.tgt))
      throw TypeError("ill-typed equation '" + print(eq) + "': left side is " + print(l.src) + " -> " + print(l.tgt) +
                      ", right side is " + print(r.src) + " -> " + print(r.tgt));
    return {eq, l.mor == r.mor, l.mor, r.mor};
  }

 private:
  ObjTerm norm(ObjTerm o) const {
    if (strict_objects_) o.dags = 0;
    return o;
  }

  static ObjTerm bump(ObjTerm o) {
    ++o.dags;
    return o;
  }

  ObjOf<C> object(const ObjTerm& o) const {
    auto it = env_.objects.find(o.name);
    if (it == env_.objects.end()) throw TypeError("unknown object '" + o.name + "'");
    auto x = it->second;
    for (int i = 0; i < o.dags; ++i) x = b_.inv.dag(x);
    return x;
  }

  const UnitaryStructure<C>& unit(const Expr& e) const {
    if (!b_.unit) throw MissingStructure("'" + print(e) + "' needs a unitary structure, and none is attached");
    return *b_.unit;
  }

  const Bundle<C>& b_;
  Env<C> env_;
  bool strict_objects_ = true;
};

}  // namespace ipcat::dsl
