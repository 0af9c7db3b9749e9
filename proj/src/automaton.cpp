#include "stal/automaton.hpp"

#include <stdexcept>

namespace stal {

std::string GroundArg::to_string() const {
  std::string out;
  for (int d : word) out += "d" + std::to_string(d + 1) + ".";
  return out + cfeature;
}

std::string GroundConstraint::to_string() const {
  std::string out = rel.to_string() + "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i].to_string();
  }
  return out + ")";
}

std::string TransitionClause::to_string() const {
  std::vector<std::string> parts;
  for (auto& [name, negated] : lits) parts.push_back(negated ? "(not " + name + ")" : name);
  for (auto& c : constraints) parts.push_back(c.to_string());
  for (auto& [d, q] : moves) parts.push_back("(d" + std::to_string(d + 1) + ", " + q + ")");
  if (parts.empty()) return "true";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " & " + parts[i];
  return out;
}

std::string to_string(const std::vector<TransitionClause>& delta) {
  if (delta.empty()) return "false";
  std::string out;
  for (size_t i = 0; i < delta.size(); ++i) {
    if (i) out += " | ";
    out += delta[i].to_string();
  }
  return out;
}

std::string Waa::direction_name(int d) const {
  const int r = static_cast<int>(sig.rec.size());
  if (d < r) return sig.rec[static_cast<size_t>(d)].to_string();
  return sig.af.at(static_cast<size_t>(d - r));
}

std::vector<std::string> body_names(const Concept& body) {
  std::vector<std::string> out;
  Concept c = body;
  while (c.kind() == Kind::And) {
    if (c.lhs().kind() != Kind::Name)
      throw std::logic_error("merged body conjunct is not a name: " + body.to_string());
    out.push_back(c.lhs().name_str());
    c = c.rhs();
  }
  if (c.kind() != Kind::Name)
    throw std::logic_error("merged body is not a name conjunction: " + body.to_string());
  out.push_back(c.name_str());
  return out;
}

Waa build_automaton(const ClosedTBox& ct) {
  Waa a;
  a.sig = derive_signature(ct);
  a.algebra = ct.sig.algebra;
  a.initial = ct.initial;
  a.order = ct.order;

  std::map<Concept, int> rec_dir;
  for (size_t i = 0; i < a.sig.rec.size(); ++i) rec_dir.emplace(a.sig.rec[i], static_cast<int>(i));
  std::map<std::string, int> af_dir;
  for (size_t i = 0; i < a.sig.af.size(); ++i)
    af_dir.emplace(a.sig.af[i], static_cast<int>(a.sig.rec.size() + i));

  auto feature_dir = [&](const std::string& f) {
    auto it = af_dir.find(f);
    if (it == af_dir.end())
      throw std::logic_error("feature " + f + " is not an automaton direction");
    return it->second;
  };

  for (const std::string& q : ct.names) {
    std::vector<TransitionClause>& disjuncts = a.delta[q];
    for (const Clause& s : ct.axioms.at(q)) {
      TransitionClause tc;
      for (const Concept& e : s) {
        switch (e.kind()) {
          case Kind::Name:
            tc.lits.emplace_back(e.name_str(), false);
            break;
          case Kind::Not:
            tc.lits.emplace_back(e.child().name_str(), true);
            break;
          case Kind::Pred: {
            GroundConstraint gc;
            gc.rel = e.relation();
            for (const FeatureChain& ch : e.chains()) {
              GroundArg arg;
              for (const std::string& f : ch.prefix) arg.word.push_back(feature_dir(f));
              arg.cfeature = ch.terminal;
              gc.args.push_back(std::move(arg));
            }
            tc.constraints.push_back(std::move(gc));
            break;
          }
          case Kind::Some: {
            int dir;
            if (ct.sig.roles.count(e.role())) {
              auto it = rec_dir.find(e);
              if (it == rec_dir.end())
                throw std::logic_error("token " + e.to_string() + " missing from rec");
              dir = it->second;
            } else {
              dir = feature_dir(e.role());
            }
            for (const std::string& b : body_names(e.child())) tc.moves.emplace_back(dir, b);
            break;
          }
          default:
            throw std::logic_error("closed clause holds a " + e.to_string());
        }
      }
      disjuncts.push_back(std::move(tc));
    }
  }

  for (const std::string& q : ct.names)
    if (!ct.eventualities.count(q)) a.accepting.insert(q);

  // reflexive transitive closure of the successor order
  for (const std::string& q : ct.names) a.reach[q].insert(q);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto& [q, rs] : a.reach) {
      std::set<std::string> add;
      for (const std::string& r : rs)
        if (auto it = a.order.find(r); it != a.order.end())
          for (const std::string& n : it->second)
            if (!rs.count(n)) add.insert(n);
      if (!add.empty()) {
        rs.insert(add.begin(), add.end());
        grew = true;
      }
    }
  }

  // weakness: moves follow the order, and the order is cycle-free modulo
  // self-loops
  for (auto& [q, disjuncts] : a.delta)
    for (const TransitionClause& tc : disjuncts)
      for (auto& [d, r] : tc.moves)
        if (!a.order.at(q).count(r))
          throw std::logic_error("move " + q + " -> " + r + " escapes the successor order");
  for (auto& [q, rs] : a.reach)
    for (const std::string& r : rs)
      if (r != q && a.reach.at(r).count(q))
        throw std::logic_error("states " + q + " and " + r + " are mutually reachable");

  return a;
}

}  // namespace stal
