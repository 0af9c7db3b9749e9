#include "closure_ref.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

using stal::AxiomClass;
using stal::AxiomKind;
using stal::Clause;
using stal::Concept;
using stal::Dnf;
using stal::Kind;
using stal::ValidatedTBox;

bool clashes(const Clause& s) {
  for (const Concept& e : s)
    if (e.kind() == Kind::Not && s.count(e.child())) return true;
  return false;
}

Dnf times(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const Clause& x : a)
    for (const Clause& y : b) {
      Clause u = x;
      u.insert(y.begin(), y.end());
      if (!clashes(u)) out.insert(std::move(u));
    }
  return out;
}

Dnf plus(Dnf a, const Dnf& b) {
  a.insert(b.begin(), b.end());
  return a;
}

Concept chain_exists(const stal::FeatureChain& u) {
  Concept out = Concept::top();
  for (auto it = u.prefix.rbegin(); it != u.prefix.rend(); ++it)
    out = Concept::some(*it, out);
  return out;
}

Dnf ref_dnf(const Concept& c, bool neg, const ValidatedTBox& vt) {
  switch (c.kind()) {
    case Kind::Top:
      return neg ? Dnf{} : Dnf{{}};
    case Kind::Bot:
      return neg ? Dnf{{}} : Dnf{};
    case Kind::Not:
      return ref_dnf(c.child(), !neg, vt);
    case Kind::And: {
      Dnf l = ref_dnf(c.lhs(), neg, vt);
      Dnf r = ref_dnf(c.rhs(), neg, vt);
      return neg ? plus(std::move(l), r) : times(l, r);
    }
    case Kind::Or: {
      Dnf l = ref_dnf(c.lhs(), neg, vt);
      Dnf r = ref_dnf(c.rhs(), neg, vt);
      return neg ? times(l, r) : plus(std::move(l), r);
    }
    case Kind::Some:
      return {{neg ? Concept::all(c.role(), stal::neg1(c.child())) : c}};
    case Kind::All:
      return {{neg ? Concept::some(c.role(), stal::neg1(c.child())) : c}};
    case Kind::Pred: {
      Clause s{neg ? Concept::pred(c.chains(), complement(c.relation())) : c};
      for (const auto& u : c.chains())
        if (!u.prefix.empty()) s.insert(chain_exists(u));
      return {std::move(s)};
    }
    case Kind::Name: {
      const std::string& n = c.name_str();
      if (vt.tb.sig.primitives.count(n))
        return {{neg ? Concept::neg(c) : c}};
      const AxiomClass& cl = vt.class_of(n);
      if (cl.kind == AxiomKind::Acyclic)
        return ref_dnf(vt.tb.find(n)->rhs, neg, vt);
      if (neg) return ref_dnf(Concept::name(cl.dual_of), false, vt);
      switch (cl.kind) {
        case AxiomKind::EventualityA:
          return plus(ref_dnf(cl.part_c1, false, vt),
                      Dnf{{Concept::some(cl.role_used, c)}});
        case AxiomKind::EventualityB:
          return plus(ref_dnf(cl.part_c1, false, vt),
                      times(ref_dnf(cl.part_c2, false, vt),
                            Dnf{{Concept::some(cl.role_used, c)}}));
        case AxiomKind::NecessityA:
          return times(ref_dnf(cl.part_c1, false, vt),
                       Dnf{{Concept::all(cl.role_used, c)}});
        case AxiomKind::NecessityB:
          return times(ref_dnf(cl.part_c1, false, vt),
                       plus(ref_dnf(cl.part_c2, false, vt),
                            Dnf{{Concept::all(cl.role_used, c)}}));
        default:
          break;
      }
      throw std::logic_error("unclassified axiom " + n);
    }
  }
  throw std::logic_error("unreachable concept kind");
}

}  // namespace

RefClosure ref_close(const ValidatedTBox& vt, const Concept& c) {
  RefClosure ref;
  ref.initial = stal::kInitialName;

  std::map<std::string, Concept> rhs_of;
  std::map<Concept, std::string> by_rhs;
  std::vector<std::string> todo;  // LIFO
  for (const auto& ax : vt.tb.axioms) {
    ref.names.push_back(ax.lhs);
    ref.originals.insert(ax.lhs);
    rhs_of.emplace(ax.lhs, ax.rhs);
    by_rhs.emplace(ax.rhs, ax.lhs);
    todo.push_back(ax.lhs);
  }
  ref.names.push_back(ref.initial);
  ref.originals.insert(ref.initial);
  rhs_of.emplace(ref.initial, c);
  by_rhs.emplace(c, ref.initial);
  todo.push_back(ref.initial);

  int counter = 0;
  auto nm = [&](const Concept& d) -> std::string {
    if (d.kind() == Kind::Name && vt.tb.is_defined(d.name_str()))
      return d.name_str();
    if (auto it = by_rhs.find(d); it != by_rhs.end()) return it->second;
    std::string n = "Q" + std::to_string(++counter);
    ref.names.push_back(n);
    rhs_of.emplace(n, d);
    by_rhs.emplace(d, n);
    todo.push_back(n);
    return n;
  };

  while (!todo.empty()) {
    std::string b = todo.back();
    todo.pop_back();
    if (ref.axioms.count(b)) continue;
    ref.axioms.emplace(b, Dnf{});  // claim before minting successors
    Dnf closed;
    for (const Clause& s : ref_dnf(rhs_of.at(b), false, vt)) {
      Clause out;
      std::map<std::string, std::vector<Concept>> somes, alls;
      for (const Concept& e : s) {
        switch (e.kind()) {
          case Kind::Name:
          case Kind::Not:
          case Kind::Pred:
            out.insert(e);
            break;
          case Kind::Some:
            somes[e.role()].push_back(e.child());
            break;
          case Kind::All:
            alls[e.role()].push_back(e.child());
            break;
          default:
            throw std::logic_error("unexpected clause element");
        }
      }
      // roles carrying no existential vanish, and only then do bodies get
      // named
      auto token = [&](const std::string& r, std::set<std::string> u4) {
        std::vector<Concept> parts;
        for (const auto& n : u4) parts.push_back(Concept::name(n));
        return Concept::some(r, stal::conj_all(parts));
      };
      for (const auto& [r, bodies] : somes) {
        std::set<std::string> shared;
        if (auto it = alls.find(r); it != alls.end())
          for (const Concept& e : it->second) shared.insert(nm(e));
        if (vt.tb.sig.features.count(r)) {
          std::set<std::string> u4 = shared;
          for (const Concept& e : bodies) u4.insert(nm(e));
          out.insert(token(r, std::move(u4)));
        } else {
          for (const Concept& e : bodies) {
            std::set<std::string> u4 = shared;
            u4.insert(nm(e));
            out.insert(token(r, std::move(u4)));
          }
        }
      }
      closed.insert(std::move(out));
    }
    ref.axioms[b] = std::move(closed);
  }
  return ref;
}

namespace {

// rebuild a concept with names mapped; token bodies of plain name
// conjunctions are re-sorted so renaming cannot disturb their order
Concept translate(const Concept& c,
                  const std::map<std::string, std::string>& sigma) {
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bot:
    case Kind::Pred:
      return c;
    case Kind::Name: {
      auto it = sigma.find(c.name_str());
      return it == sigma.end() ? c : Concept::name(it->second);
    }
    case Kind::Not:
      return Concept::neg(translate(c.child(), sigma));
    case Kind::And:
      return Concept::conj(translate(c.lhs(), sigma),
                           translate(c.rhs(), sigma));
    case Kind::Or:
      return Concept::disj(translate(c.lhs(), sigma),
                           translate(c.rhs(), sigma));
    case Kind::Some:
    case Kind::All: {
      Concept body = translate(c.child(), sigma);
      std::set<std::string> names;
      bool plain = true;
      for (Concept t = body;; t = t.rhs()) {
        if (t.kind() == Kind::Name) {
          names.insert(t.name_str());
          break;
        }
        if (t.kind() != Kind::And || t.lhs().kind() != Kind::Name) {
          plain = false;
          break;
        }
        names.insert(t.lhs().name_str());
      }
      if (plain) {
        std::vector<Concept> parts;
        for (const auto& n : names) parts.push_back(Concept::name(n));
        body = stal::conj_all(parts);
      }
      return c.kind() == Kind::Some ? Concept::some(c.role(), body)
                                    : Concept::all(c.role(), body);
    }
  }
  return c;
}

Dnf translate(const Dnf& d, const std::map<std::string, std::string>& sigma) {
  Dnf out;
  for (const Clause& s : d) {
    Clause t;
    for (const Concept& e : s) t.insert(translate(e, sigma));
    out.insert(std::move(t));
  }
  return out;
}

std::string skeleton(const Dnf& d, const std::set<std::string>& fresh) {
  std::map<std::string, std::string> mask;
  for (const auto& n : fresh) mask.emplace(n, "*");
  return to_string(translate(d, mask));
}

struct Matcher {
  const stal::ClosedTBox& ct;
  const RefClosure& ref;
  std::vector<std::string> ref_fresh;
  std::map<std::string, std::vector<std::string>> candidates;
  std::map<std::string, std::string> sigma;   // ref name -> ct name
  std::set<std::string> used;
  std::string err;

  bool fail(const std::string& m) {
    if (err.empty()) err = m;
    return false;
  }

  bool assign(size_t i) {
    if (i == ref_fresh.size()) return verify();
    const std::string& q = ref_fresh[i];
    for (const auto& b : candidates.at(q)) {
      if (used.count(b)) continue;
      sigma[q] = b;
      used.insert(b);
      if (assign(i + 1)) return true;
      used.erase(b);
      sigma.erase(q);
    }
    return fail("no assignment for fresh name " + q);
  }

  bool verify() {
    for (const auto& n : ref.names) {
      const std::string target = sigma.count(n) ? sigma.at(n) : n;
      auto it = ct.axioms.find(target);
      if (it == ct.axioms.end()) return fail("missing axiom for " + target);
      // identity translation re-sorts ct token bodies the same way
      if (translate(it->second, {}) != translate(ref.axioms.at(n), sigma))
        return fail("axiom of " + target + " disagrees");
    }
    return true;
  }
};

}  // namespace

bool closures_match(const stal::ClosedTBox& ct, const RefClosure& ref,
                    std::string* why) {
  Matcher m{ct, ref, {}, {}, {}, {}, {}};
  auto out = [&](bool ok) {
    if (!ok && why) *why = m.err;
    return ok;
  };
  if (ct.initial != ref.initial) return out(m.fail("initial names differ"));
  if (ct.names.size() != ref.names.size())
    return out(m.fail("name counts differ"));

  std::set<std::string> ct_fresh;
  for (const auto& n : ct.names)
    if (!ref.originals.count(n)) ct_fresh.insert(n);
  std::set<std::string> ref_fresh_set;
  for (const auto& n : ref.names)
    if (!ref.originals.count(n)) ref_fresh_set.insert(n);
  if (ct_fresh.size() != ref_fresh_set.size())
    return out(m.fail("fresh name counts differ"));

  std::map<std::string, std::string> ct_skel;
  for (const auto& b : ct_fresh)
    ct_skel.emplace(b, skeleton(ct.axioms.at(b), ct_fresh));
  for (const auto& q : ref_fresh_set) {
    m.ref_fresh.push_back(q);
    std::string sk = skeleton(ref.axioms.at(q), ref_fresh_set);
    for (const auto& [b, bsk] : ct_skel)
      if (bsk == sk) m.candidates[q].push_back(b);
    if (m.candidates[q].empty())
      return out(m.fail("no skeleton match for " + q));
  }
  for (const auto& n : ref.originals) m.sigma.emplace(n, n);
  return out(m.assign(0));
}

}  // namespace oracle
