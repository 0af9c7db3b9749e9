#include "stal/closure.hpp"

#include <cstdint>
#include <cstdio>
#include <deque>
#include <stdexcept>

namespace stal {

const char* kInitialName = "B_init";

bool operator==(const ClosedTBox& a, const ClosedTBox& b) {
  return a.sig.primitives == b.sig.primitives && a.sig.roles == b.sig.roles &&
         a.sig.features == b.sig.features && a.sig.cfeatures == b.sig.cfeatures &&
         a.sig.algebra_name == b.sig.algebra_name && a.names == b.names &&
         a.axioms == b.axioms && a.original_rhs == b.original_rhs && a.initial == b.initial &&
         a.order == b.order && a.eventualities == b.eventualities;
}

ValidatedTBox augment(const ValidatedTBox& vt, const Concept& c) {
  ValidatedTBox out = vt;
  const std::string name = kInitialName;
  const Signature& sig = out.tb.sig;
  if (out.tb.is_defined(name) || sig.primitives.count(name) || sig.roles.count(name) ||
      sig.features.count(name) || sig.cfeatures.count(name))
    throw InputError("the name " + name + " is already taken");
  out.tb.axioms.push_back({name, c});
  out.classes[name] = AxiomClass{};
  return out;
}

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

ClosedTBox close_tbox(const ValidatedTBox& vt, const std::string& initial) {
  if (!vt.tb.is_defined(initial))
    throw InputError("initial concept " + initial + " is not defined");

  ClosedTBox ct;
  ct.sig = vt.tb.sig;
  ct.initial = initial;

  std::map<Concept, std::string> rhs_index;
  std::deque<std::string> pending;
  for (const Axiom& ax : vt.tb.axioms) {
    ct.names.push_back(ax.lhs);
    ct.original_rhs.emplace(ax.lhs, ax.rhs);
    rhs_index.emplace(ax.rhs, ax.lhs);  // first definition wins
    pending.push_back(ax.lhs);
    if (is_eventuality(vt.class_of(ax.lhs).kind)) ct.eventualities.insert(ax.lhs);
  }

  auto taken = [&](const std::string& n) {
    return ct.original_rhs.count(n) || ct.sig.primitives.count(n) || ct.sig.roles.count(n) ||
           ct.sig.features.count(n) || ct.sig.cfeatures.count(n);
  };

  auto name_for = [&](const Concept& d) -> std::string {
    if (d.kind() == Kind::Name && vt.tb.is_defined(d.name_str()))
      return d.name_str();
    if (auto it = rhs_index.find(d); it != rhs_index.end()) return it->second;
    char hex[13];
    std::snprintf(hex, sizeof hex, "%012llx",
                  static_cast<unsigned long long>(fnv1a(d.to_string()) & 0xffffffffffffull));
    const std::string base = std::string("B$") + hex;
    std::string n = base;
    for (int salt = 2; taken(n); ++salt) n = base + "_" + std::to_string(salt);
    ct.names.push_back(n);
    ct.original_rhs.emplace(n, d);
    rhs_index.emplace(d, n);
    pending.push_back(n);
    return n;
  };

  while (!pending.empty()) {
    if (ct.names.size() > 100000) throw std::logic_error("closure keeps growing, giving up");
    const std::string b1 = pending.front();
    pending.pop_front();
    const Dnf d = dnf1(ct.original_rhs.at(b1), vt);

    std::set<std::string>& ord = ct.order[b1];
    Dnf closed;
    for (const Clause& s : d) {
      const PceaPartition p = pcea_partition(s, ct.sig);
      Clause out;
      for (const Concept& e : p.prop) out.insert(e);
      for (const Concept& e : p.csp) out.insert(e);
      for (const Concept& e : s) {  // general roles, one token per existential
        if (e.kind() != Kind::Some || !ct.sig.roles.count(e.role())) continue;
        std::set<std::string> u4;
        u4.insert(name_for(e.child()));
        if (auto it = p.all_bodies.find(e.role()); it != p.all_bodies.end())
          for (const Concept& a : it->second) u4.insert(name_for(a));
        std::vector<Concept> parts;
        for (const std::string& n : u4) parts.push_back(Concept::name(n));
        out.insert(Concept::some(e.role(), conj_all(parts)));
        ord.insert(u4.begin(), u4.end());
      }
      for (const auto& [f, bodies] : p.some_bodies) {  // features, one merged token
        if (!ct.sig.features.count(f)) continue;
        std::set<std::string> u4;
        for (const Concept& bdy : bodies) u4.insert(name_for(bdy));
        if (auto it = p.all_bodies.find(f); it != p.all_bodies.end())
          for (const Concept& a : it->second) u4.insert(name_for(a));
        std::vector<Concept> parts;
        for (const std::string& n : u4) parts.push_back(Concept::name(n));
        out.insert(Concept::some(f, conj_all(parts)));
        ord.insert(u4.begin(), u4.end());
      }
      closed.insert(out);
    }
    ct.axioms.emplace(b1, closed);
  }
  return ct;
}

ClosedTBox close(const ValidatedTBox& vt, const Concept& c) {
  return close_tbox(augment(vt, c), kInitialName);
}

TBox reencode(const ClosedTBox& ct) {
  TBox tb;
  tb.sig = ct.sig;
  for (const std::string& n : ct.names) tb.axioms.push_back({n, ct.original_rhs.at(n)});
  return tb;
}

AutomatonSignature derive_signature(const ClosedTBox& ct) {
  AutomatonSignature out;
  out.states = ct.names;
  std::map<std::string, Concept> rec;  // keyed by print so the order is textual
  std::set<std::string> af;
  for (const std::string& n : ct.names) {
    for (const Clause& s : ct.axioms.at(n)) {
      for (const Concept& e : s) {
        switch (e.kind()) {
          case Kind::Name:
            out.primitives.insert(e.name_str());
            break;
          case Kind::Not:
            out.primitives.insert(e.child().name_str());
            break;
          case Kind::Pred:
            for (const FeatureChain& ch : e.chains()) out.cfeatures.insert(ch.terminal);
            break;
          case Kind::Some:
            if (ct.sig.roles.count(e.role()))
              rec.emplace(e.to_string(), e);
            else
              af.insert(e.role());
            break;
          default:
            throw std::logic_error("closed clause holds a " + e.to_string());
        }
      }
    }
  }
  for (const auto& [print, tok] : rec) out.rec.push_back(tok);
  out.af.assign(af.begin(), af.end());
  return out;
}

}  // namespace stal
