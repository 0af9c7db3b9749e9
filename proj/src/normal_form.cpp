#include "stal/normal_form.hpp"

#include <stdexcept>

#include "stal/algebra.hpp"

namespace stal {

std::string to_string(const Clause& s) {
  std::string out = "{";
  bool first = true;
  for (auto& c : s) {
    if (!first) out += ", ";
    out += c.to_string();
    first = false;
  }
  return out + "}";
}

std::string to_string(const Dnf& d) {
  std::string out = "{";
  bool first = true;
  for (auto& s : d) {
    if (!first) out += ", ";
    out += to_string(s);
    first = false;
  }
  return out + "}";
}

Concept clause_concept(const Clause& s) {
  return conj_all(std::vector<Concept>(s.begin(), s.end()));
}

Concept dnf_concept(const Dnf& d) {
  std::vector<Concept> parts;
  for (auto& s : d) parts.push_back(clause_concept(s));
  return disj_all(parts);
}

std::optional<Concept> exists_chain(const FeatureChain& u) {
  if (u.prefix.empty()) return std::nullopt;
  Concept acc = Concept::top();
  for (auto it = u.prefix.rbegin(); it != u.prefix.rend(); ++it)
    acc = Concept::some(*it, acc);
  return acc;
}

namespace {

bool clashes(const Clause& s, const Concept& c) {
  if (c.kind() == Kind::Name) return s.count(Concept::neg(c)) != 0;
  if (c.kind() == Kind::Not && c.child().kind() == Kind::Name)
    return s.count(c.child()) != 0;
  return false;
}

std::optional<Clause> clause_union(const Clause& a, const Clause& b) {
  Clause out = a;
  for (auto& c : b) {
    if (clashes(out, c)) return std::nullopt;
    out.insert(c);
  }
  return out;
}

}  // namespace

Dnf pi_product(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (auto& sa : a)
    for (auto& sb : b)
      if (auto u = clause_union(sa, sb)) out.insert(std::move(*u));
  return out;
}

namespace {

class Dnf1 {
 public:
  explicit Dnf1(const ValidatedTBox& vt) : vt_(vt) {}

  Dnf go(const Concept& c, bool neg) {
    auto key = std::make_pair(c, neg);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Dnf out = compute(c, neg);
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  Dnf compute(const Concept& c, bool neg) {
    switch (c.kind()) {
      case Kind::Top: return neg ? Dnf{} : Dnf{{}};
      case Kind::Bot: return neg ? Dnf{{}} : Dnf{};
      case Kind::Name: return defined_name(c, neg);
      case Kind::Not: return go(c.child(), !neg);
      case Kind::And: {
        if (neg) return set_union(go(c.lhs(), true), go(c.rhs(), true));
        return pi_product(go(c.lhs(), false), go(c.rhs(), false));
      }
      case Kind::Or: {
        if (neg) return pi_product(go(c.lhs(), true), go(c.rhs(), true));
        return set_union(go(c.lhs(), false), go(c.rhs(), false));
      }
      case Kind::Some:
        return {{neg ? Concept::all(c.role(), neg1(c.child())) : c}};
      case Kind::All:
        return {{neg ? Concept::some(c.role(), neg1(c.child())) : c}};
      case Kind::Pred: {
        Clause s{neg ? Concept::pred(c.chains(), complement(c.relation())) : c};
        for (auto& u : c.chains())
          if (auto e = exists_chain(u)) s.insert(*e);
        return {s};
      }
    }
    return {};
  }

  Dnf defined_name(const Concept& c, bool neg) {
    const std::string& n = c.name_str();
    if (!vt_.tb.is_defined(n)) {
      if (!neg) return {{c}};
      return {{Concept::neg(c)}};
    }
    const AxiomClass& cls = vt_.class_of(n);
    if (cls.kind == AxiomKind::Acyclic) return go(vt_.tb.find(n)->rhs, neg);
    if (neg) {
      if (cls.dual_of.empty())
        throw std::logic_error("negated cyclic concept " + n + " without a dual");
      return go(Concept::name(cls.dual_of), false);
    }
    Concept self = Concept::name(n);
    switch (cls.kind) {
      case AxiomKind::EventualityA:
        return set_union(go(cls.part_c1, false), Dnf{{Concept::some(cls.role_used, self)}});
      case AxiomKind::EventualityB:
        return set_union(go(cls.part_c1, false),
                         pi_product(go(cls.part_c2, false),
                                    Dnf{{Concept::some(cls.role_used, self)}}));
      case AxiomKind::NecessityA:
        return pi_product(go(cls.part_c1, false), Dnf{{Concept::all(cls.role_used, self)}});
      case AxiomKind::NecessityB:
        return pi_product(go(cls.part_c1, false),
                          set_union(go(cls.part_c2, false),
                                    Dnf{{Concept::all(cls.role_used, self)}}));
      default: throw std::logic_error("unreachable axiom kind");
    }
  }

  static Dnf set_union(Dnf a, const Dnf& b) {
    a.insert(b.begin(), b.end());
    return a;
  }

  const ValidatedTBox& vt_;
  std::map<std::pair<Concept, bool>, Dnf> memo_;
};

}  // namespace

Dnf dnf1(const Concept& c, const ValidatedTBox& vt) { return Dnf1(vt).go(c, false); }
Dnf dnf1_negated(const Concept& c, const ValidatedTBox& vt) { return Dnf1(vt).go(c, true); }

PceaPartition pcea_partition(const Clause& s, const Signature& sig) {
  PceaPartition p;
  for (auto& c : s) {
    switch (c.kind()) {
      case Kind::Name: p.prop.push_back(c); break;
      case Kind::Not:
        if (c.child().kind() != Kind::Name)
          throw std::logic_error("clause holds a negation of a non-name");
        p.prop.push_back(c);
        break;
      case Kind::Pred: p.csp.push_back(c); break;
      case Kind::Some: p.some_bodies[c.role()].push_back(c.child()); break;
      case Kind::All: p.all_bodies[c.role()].push_back(c.child()); break;
      default: throw std::logic_error("clause holds " + c.to_string());
    }
  }
  (void)sig;
  return p;
}

namespace {

std::vector<Concept> sorted_unique(std::vector<Concept> v) {
  std::set<Concept> s(v.begin(), v.end());
  return std::vector<Concept>(s.begin(), s.end());
}

Concept merged_body(const std::vector<Concept>& first, const std::vector<Concept>& second) {
  std::vector<Concept> parts;
  std::set<Concept> seen;
  for (auto& c : sorted_unique(first))
    if (seen.insert(c).second) parts.push_back(c);
  for (auto& c : sorted_unique(second))
    if (seen.insert(c).second) parts.push_back(c);
  return conj_all(parts);
}

}  // namespace

Clause merge_clause(const Clause& s, const Signature& sig) {
  PceaPartition p = pcea_partition(s, sig);
  Clause out(p.prop.begin(), p.prop.end());
  out.insert(p.csp.begin(), p.csp.end());
  for (auto& [role, bodies] : p.some_bodies) {
    std::vector<Concept> alls;
    if (auto it = p.all_bodies.find(role); it != p.all_bodies.end()) alls = it->second;
    if (sig.features.count(role)) {
      out.insert(Concept::some(role, merged_body(bodies, alls)));
    } else {
      for (auto& b : bodies) out.insert(Concept::some(role, merged_body({b}, alls)));
    }
  }
  return out;
}

Dnf dnf2_of(const Dnf& d, const Signature& sig) {
  Dnf out;
  for (auto& s : d) out.insert(merge_clause(s, sig));
  return out;
}

Dnf dnf2(const Concept& c, const ValidatedTBox& vt) {
  return dnf2_of(dnf1(c, vt), vt.tb.sig);
}

}  // namespace stal
