#include "stal/syntax.hpp"

#include <algorithm>
#include <functional>

namespace stal {

struct ConceptNode {
  Kind kind;
  std::string name;  // Name: concept name; Some/All: role name
  std::shared_ptr<const ConceptNode> a, b;
  std::vector<FeatureChain> chains;
  std::optional<Relation> rel;
  size_t hash = 0;
};

namespace {

size_t mix(size_t h, size_t v) {
  // FNV-ish; stable across runs, good enough for interning-free hashing
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

size_t hash_string(const std::string& s) {
  size_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::shared_ptr<const ConceptNode> make(Kind k, std::string name,
                                        std::shared_ptr<const ConceptNode> a,
                                        std::shared_ptr<const ConceptNode> b,
                                        std::vector<FeatureChain> chains,
                                        std::optional<Relation> rel) {
  auto n = std::make_shared<ConceptNode>();
  n->kind = k;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  n->chains = std::move(chains);
  n->rel = std::move(rel);
  size_t h = mix(0, static_cast<size_t>(k));
  h = mix(h, hash_string(n->name));
  if (n->a) h = mix(h, n->a->hash);
  if (n->b) h = mix(h, n->b->hash);
  for (auto& ch : n->chains) {
    for (auto& f : ch.prefix) h = mix(h, hash_string(f));
    h = mix(h, hash_string(ch.terminal));
  }
  if (n->rel) {
    h = mix(h, hash_string(n->rel->algebra->name()));
    h = mix(h, n->rel->mask);
  }
  n->hash = h;
  return n;
}

std::strong_ordering cmp_nodes(const ConceptNode* x, const ConceptNode* y) {
  if (x == y) return std::strong_ordering::equal;
  if (auto c = x->kind <=> y->kind; c != 0) return c;
  if (auto c = x->name <=> y->name; c != 0) return c;
  auto cmp_child = [](const ConceptNode* a, const ConceptNode* b) {
    if (!a && !b) return std::strong_ordering::equal;
    if (!a) return std::strong_ordering::less;
    if (!b) return std::strong_ordering::greater;
    return cmp_nodes(a, b);
  };
  if (auto c = cmp_child(x->a.get(), y->a.get()); c != 0) return c;
  if (auto c = cmp_child(x->b.get(), y->b.get()); c != 0) return c;
  if (auto c = x->chains <=> y->chains; c != 0) return c;
  bool xr = x->rel.has_value(), yr = y->rel.has_value();
  if (auto c = xr <=> yr; c != 0) return c;
  if (xr) return *x->rel <=> *y->rel;
  return std::strong_ordering::equal;
}

}  // namespace

Concept Concept::top() { return Concept(make(Kind::Top, "", nullptr, nullptr, {}, {})); }
Concept Concept::bot() { return Concept(make(Kind::Bot, "", nullptr, nullptr, {}, {})); }
Concept Concept::name(std::string n) {
  return Concept(make(Kind::Name, std::move(n), nullptr, nullptr, {}, {}));
}
Concept Concept::neg(Concept c) {
  return Concept(make(Kind::Not, "", c.node_, nullptr, {}, {}));
}
Concept Concept::conj(Concept l, Concept r) {
  return Concept(make(Kind::And, "", l.node_, r.node_, {}, {}));
}
Concept Concept::disj(Concept l, Concept r) {
  return Concept(make(Kind::Or, "", l.node_, r.node_, {}, {}));
}
Concept Concept::some(std::string role, Concept c) {
  return Concept(make(Kind::Some, std::move(role), c.node_, nullptr, {}, {}));
}
Concept Concept::all(std::string role, Concept c) {
  return Concept(make(Kind::All, std::move(role), c.node_, nullptr, {}, {}));
}
Concept Concept::pred(std::vector<FeatureChain> chains, Relation rel) {
  return Concept(make(Kind::Pred, "", nullptr, nullptr, std::move(chains), std::move(rel)));
}

Kind Concept::kind() const { return node_->kind; }
const std::string& Concept::name_str() const { return node_->name; }
const std::string& Concept::role() const { return node_->name; }
Concept Concept::child() const { return Concept(node_->a); }
Concept Concept::lhs() const { return Concept(node_->a); }
Concept Concept::rhs() const { return Concept(node_->b); }
const std::vector<FeatureChain>& Concept::chains() const { return node_->chains; }
const Relation& Concept::relation() const { return *node_->rel; }
size_t Concept::hash() const { return node_->hash; }

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash) return false;
  return cmp_nodes(a.node_.get(), b.node_.get()) == 0;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  return cmp_nodes(a.node_.get(), b.node_.get());
}

std::string FeatureChain::to_string() const {
  std::string out = "(";
  for (auto& f : prefix) out += f + ".";
  out += terminal + ")";
  return out;
}

std::string Concept::to_string() const {
  switch (kind()) {
    case Kind::Top: return "top";
    case Kind::Bot: return "bot";
    case Kind::Name: return name_str();
    case Kind::Not: return "(not " + child().to_string() + ")";
    case Kind::And: return "(and " + lhs().to_string() + " " + rhs().to_string() + ")";
    case Kind::Or: return "(or " + lhs().to_string() + " " + rhs().to_string() + ")";
    case Kind::Some: return "(some " + role() + " " + child().to_string() + ")";
    case Kind::All: return "(all " + role() + " " + child().to_string() + ")";
    case Kind::Pred: {
      std::string out = "(pred";
      for (auto& ch : chains()) out += " " + ch.to_string();
      return out + " " + relation().to_string() + ")";
    }
  }
  return "";
}

Concept neg1(const Concept& c) {
  if (c.kind() == Kind::Not) return c.child();
  return Concept::neg(c);
}

Concept push_negation(const Concept& c) {
  std::function<Concept(const Concept&, bool)> go = [&](const Concept& t, bool neg) -> Concept {
    switch (t.kind()) {
      case Kind::Top: return neg ? Concept::bot() : Concept::top();
      case Kind::Bot: return neg ? Concept::top() : Concept::bot();
      case Kind::Name: return neg ? Concept::neg(t) : t;
      case Kind::Not: return go(t.child(), !neg);
      case Kind::And: {
        Concept l = go(t.lhs(), neg), r = go(t.rhs(), neg);
        return neg ? Concept::disj(l, r) : Concept::conj(l, r);
      }
      case Kind::Or: {
        Concept l = go(t.lhs(), neg), r = go(t.rhs(), neg);
        return neg ? Concept::conj(l, r) : Concept::disj(l, r);
      }
      case Kind::Some: {
        Concept b = go(t.child(), neg);
        return neg ? Concept::all(t.role(), b) : Concept::some(t.role(), b);
      }
      case Kind::All: {
        Concept b = go(t.child(), neg);
        return neg ? Concept::some(t.role(), b) : Concept::all(t.role(), b);
      }
      case Kind::Pred:
        return neg ? Concept::pred(t.chains(), complement(t.relation())) : t;
    }
    return t;
  };
  return go(c, false);
}

std::set<Concept> subconcepts(const Concept& c) {
  std::set<Concept> out;
  std::function<void(const Concept&, bool)> go = [&](const Concept& t, bool neg) {
    switch (t.kind()) {
      case Kind::Top:
        out.insert(neg ? Concept::bot() : Concept::top());
        return;
      case Kind::Bot:
        out.insert(neg ? Concept::top() : Concept::bot());
        return;
      case Kind::Name:
        out.insert(neg ? Concept::neg(t) : t);
        return;
      case Kind::Not:
        go(t.child(), !neg);
        return;
      case Kind::And:
      case Kind::Or:
        out.insert(neg ? Concept::neg(t) : t);
        go(t.lhs(), neg);
        go(t.rhs(), neg);
        return;
      case Kind::Some:
        if (neg) {
          out.insert(Concept::all(t.role(), neg1(t.child())));
        } else {
          out.insert(t);
        }
        go(t.child(), neg);
        return;
      case Kind::All:
        if (neg) {
          out.insert(Concept::some(t.role(), neg1(t.child())));
        } else {
          out.insert(t);
        }
        go(t.child(), neg);
        return;
      case Kind::Pred:
        out.insert(neg ? Concept::pred(t.chains(), complement(t.relation())) : t);
        return;
    }
  };
  go(c, false);
  return out;
}

Concept conj_all(const std::vector<Concept>& parts) {
  if (parts.empty()) return Concept::top();
  Concept acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = Concept::conj(*it, acc);
  return acc;
}

Concept disj_all(const std::vector<Concept>& parts) {
  if (parts.empty()) return Concept::bot();
  Concept acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = Concept::disj(*it, acc);
  return acc;
}

Concept sort_commutative(const Concept& c) {
  switch (c.kind()) {
    case Kind::And:
    case Kind::Or: {
      Kind k = c.kind();
      std::vector<Concept> flat;
      std::function<void(const Concept&)> collect = [&](const Concept& t) {
        if (t.kind() == k) {
          collect(t.lhs());
          collect(t.rhs());
        } else {
          flat.push_back(sort_commutative(t));
        }
      };
      collect(c);
      std::sort(flat.begin(), flat.end());
      return k == Kind::And ? conj_all(flat) : disj_all(flat);
    }
    case Kind::Not: return Concept::neg(sort_commutative(c.child()));
    case Kind::Some: return Concept::some(c.role(), sort_commutative(c.child()));
    case Kind::All: return Concept::all(c.role(), sort_commutative(c.child()));
    default: return c;
  }
}

void Signature::check() const {
  auto overlap = [](const std::set<std::string>& a, const std::set<std::string>& b,
                    const char* what) {
    for (auto& n : a)
      if (b.count(n)) throw InputError(std::string("name ") + n + " declared as " + what);
  };
  overlap(primitives, roles, "both primitive and role");
  overlap(primitives, features, "both primitive and feature");
  overlap(primitives, cfeatures, "both primitive and cfeature");
  overlap(roles, features, "both role and feature");
  overlap(roles, cfeatures, "both role and cfeature");
  overlap(features, cfeatures, "both feature and cfeature");
}

bool TBox::is_defined(const std::string& n) const { return find(n) != nullptr; }

const Axiom* TBox::find(const std::string& n) const {
  for (auto& ax : axioms)
    if (ax.lhs == n) return &ax;
  return nullptr;
}

std::string TBox::to_string() const {
  std::string out;
  for (auto& n : sig.primitives) out += "primitive " + n + ";\n";
  for (auto& n : sig.roles) out += "role " + n + ";\n";
  for (auto& n : sig.features) out += "feature " + n + ";\n";
  for (auto& n : sig.cfeatures) out += "cfeature " + n + ";\n";
  if (!sig.algebra_name.empty()) out += "algebra " + sig.algebra_name + ";\n";
  for (auto& ax : axioms) out += ax.lhs + " := " + ax.rhs.to_string() + ";\n";
  return out;
}

}  // namespace stal
