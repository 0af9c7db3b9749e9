#include "stal/analysis.hpp"

#include <functional>
#include <optional>

#include "stal/algebra.hpp"

namespace stal {

const char* to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::Acyclic: return "acyclic";
    case AxiomKind::NecessityA: return "necessity-a";
    case AxiomKind::NecessityB: return "necessity-b";
    case AxiomKind::EventualityA: return "eventuality-a";
    case AxiomKind::EventualityB: return "eventuality-b";
  }
  return "";
}

std::set<int> name_depths(const std::string& name, const Concept& c) {
  std::set<int> out;
  std::function<void(const Concept&, int)> go = [&](const Concept& t, int d) {
    switch (t.kind()) {
      case Kind::Name:
        if (t.name_str() == name) out.insert(d);
        return;
      case Kind::Not: go(t.child(), d); return;
      case Kind::And:
      case Kind::Or:
        go(t.lhs(), d);
        go(t.rhs(), d);
        return;
      case Kind::Some:
      case Kind::All: go(t.child(), d + 1); return;
      default: return;
    }
  };
  go(c, 0);
  return out;
}

std::set<std::string> names_in(const Concept& c) {
  std::set<std::string> out;
  std::function<void(const Concept&)> go = [&](const Concept& t) {
    switch (t.kind()) {
      case Kind::Name: out.insert(t.name_str()); return;
      case Kind::Not:
      case Kind::Some:
      case Kind::All: go(t.child()); return;
      case Kind::And:
      case Kind::Or:
        go(t.lhs());
        go(t.rhs());
        return;
      default: return;
    }
  };
  go(c);
  return out;
}

Concept strip_double_negation(const Concept& c) {
  switch (c.kind()) {
    case Kind::Not: {
      Concept in = c.child();
      if (in.kind() == Kind::Not) return strip_double_negation(in.child());
      return Concept::neg(strip_double_negation(in));
    }
    case Kind::And:
      return Concept::conj(strip_double_negation(c.lhs()), strip_double_negation(c.rhs()));
    case Kind::Or:
      return Concept::disj(strip_double_negation(c.lhs()), strip_double_negation(c.rhs()));
    case Kind::Some: return Concept::some(c.role(), strip_double_negation(c.child()));
    case Kind::All: return Concept::all(c.role(), strip_double_negation(c.child()));
    default: return c;
  }
}

bool equivalent_commutative(const Concept& a, const Concept& b) {
  return sort_commutative(push_negation(a)) == sort_commutative(push_negation(b));
}

namespace {

struct ShapeMatch {
  AxiomKind kind;
  std::string role;
  Concept c1, c2;
};

bool is_self_step(const Concept& t, const std::string& b, bool exists, std::string* role) {
  if (t.kind() != (exists ? Kind::Some : Kind::All)) return false;
  if (t.child().kind() != Kind::Name || t.child().name_str() != b) return false;
  *role = t.role();
  return true;
}

std::optional<ShapeMatch> match_shape(const std::string& b, const Concept& rhs0) {
  Concept rhs = strip_double_negation(rhs0);
  auto try_a = [&](Kind outer, bool exists, AxiomKind kind) -> std::optional<ShapeMatch> {
    if (rhs.kind() != outer) return std::nullopt;
    Concept sides[2] = {rhs.lhs(), rhs.rhs()};
    for (int i = 0; i < 2; ++i) {
      std::string role;
      if (is_self_step(sides[i], b, exists, &role) && !names_in(sides[1 - i]).count(b))
        return ShapeMatch{kind, role, sides[1 - i], Concept()};
    }
    return std::nullopt;
  };
  auto try_b = [&](Kind outer, Kind inner, bool exists,
                   AxiomKind kind) -> std::optional<ShapeMatch> {
    if (rhs.kind() != outer) return std::nullopt;
    Concept sides[2] = {rhs.lhs(), rhs.rhs()};
    for (int i = 0; i < 2; ++i) {
      if (sides[i].kind() != inner) continue;
      Concept in[2] = {sides[i].lhs(), sides[i].rhs()};
      for (int j = 0; j < 2; ++j) {
        std::string role;
        if (is_self_step(in[j], b, exists, &role) && !names_in(in[1 - j]).count(b) &&
            !names_in(sides[1 - i]).count(b))
          return ShapeMatch{kind, role, sides[1 - i], in[1 - j]};
      }
    }
    return std::nullopt;
  };
  if (auto m = try_a(Kind::And, false, AxiomKind::NecessityA)) return m;
  if (auto m = try_a(Kind::Or, true, AxiomKind::EventualityA)) return m;
  if (auto m = try_b(Kind::And, Kind::Or, false, AxiomKind::NecessityB)) return m;
  if (auto m = try_b(Kind::Or, Kind::And, true, AxiomKind::EventualityB)) return m;
  return std::nullopt;
}

AxiomKind dual_kind(AxiomKind k) {
  switch (k) {
    case AxiomKind::NecessityA: return AxiomKind::EventualityA;
    case AxiomKind::EventualityA: return AxiomKind::NecessityA;
    case AxiomKind::NecessityB: return AxiomKind::EventualityB;
    case AxiomKind::EventualityB: return AxiomKind::NecessityB;
    default: return AxiomKind::Acyclic;
  }
}

bool duals_match(const AxiomClass& x, const AxiomClass& y) {
  if (y.kind != dual_kind(x.kind)) return false;
  if (x.role_used != y.role_used) return false;
  if (!equivalent_commutative(y.part_c1, Concept::neg(x.part_c1))) return false;
  if (x.kind == AxiomKind::NecessityB || x.kind == AxiomKind::EventualityB)
    return equivalent_commutative(y.part_c2, Concept::neg(x.part_c2));
  return true;
}

}  // namespace

Validation validate(const TBox& tb) {
  Validation v;

  // direct uses between defined concepts, then its transitive closure
  std::map<std::string, std::set<std::string>> uses;
  for (auto& ax : tb.axioms) {
    auto& u = uses[ax.lhs];
    for (auto& n : names_in(ax.rhs))
      if (tb.is_defined(n)) u.insert(n);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [n, u] : uses) {
      std::set<std::string> add;
      for (auto& m : u)
        for (auto& t : uses[m])
          if (!u.count(t)) add.insert(t);
      if (!add.empty()) {
        u.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }

  for (auto& ax : tb.axioms)
    for (auto& other : uses[ax.lhs])
      if (other != ax.lhs && other > ax.lhs && uses[other].count(ax.lhs))
        v.errors.push_back("axioms " + ax.lhs + " and " + other + " use each other");

  for (auto& ax : tb.axioms) {
    AxiomClass cls;
    std::set<int> depths = name_depths(ax.lhs, ax.rhs);
    if (depths.empty()) {
      v.classes[ax.lhs] = cls;
      continue;
    }
    if (depths != std::set<int>{1}) {
      std::string ds;
      for (int d : depths) ds += (ds.empty() ? "" : ",") + std::to_string(d);
      v.errors.push_back("axiom " + ax.lhs + " mentions itself at depths {" + ds +
                         "}, only depth 1 is allowed");
      continue;
    }
    auto m = match_shape(ax.lhs, ax.rhs);
    if (!m) {
      v.errors.push_back("axiom " + ax.lhs + " is cyclic but not a necessity or eventuality");
      continue;
    }
    cls.kind = m->kind;
    cls.role_used = m->role;
    cls.part_c1 = m->c1;
    cls.part_c2 = m->c2;
    v.classes[ax.lhs] = cls;
  }

  for (auto& ax : tb.axioms) {
    auto it = v.classes.find(ax.lhs);
    if (it == v.classes.end() || !is_cyclic(it->second.kind)) continue;
    for (auto& other : tb.axioms) {
      if (other.lhs == ax.lhs) continue;
      auto jt = v.classes.find(other.lhs);
      if (jt == v.classes.end()) continue;
      if (duals_match(it->second, jt->second)) {
        it->second.dual_of = other.lhs;
        break;
      }
    }
    if (it->second.dual_of.empty())
      v.errors.push_back("cyclic axiom " + ax.lhs + " has no dual in the TBox");
  }

  v.ok = v.errors.empty();
  if (!v.ok) v.classes.clear();
  return v;
}

bool is_weakly_cyclic(const TBox& tb) { return validate(tb).ok; }

ValidatedTBox validated(TBox tb) {
  Validation v = validate(tb);
  if (!v.ok) {
    std::string msg = "TBox is not weakly cyclic:";
    for (auto& e : v.errors) msg += "\n  " + e;
    throw InputError(msg);
  }
  return ValidatedTBox{std::move(tb), std::move(v.classes)};
}

}  // namespace stal
