#include "stal/json_io.hpp"

#include <json.hpp>

namespace stal {

namespace {

using nlohmann::json;

json dnf_array(const Dnf& d) {
  json out = json::array();
  for (const auto& clause : d) {
    json c = json::array();
    for (const auto& e : clause) c.push_back(e.to_string());
    out.push_back(std::move(c));
  }
  return out;
}

json signature_object(const Signature& sig) {
  json out;
  out["primitives"] = sig.primitives;
  out["roles"] = sig.roles;
  out["features"] = sig.features;
  out["cfeatures"] = sig.cfeatures;
  if (!sig.algebra_name.empty()) out["algebra"] = sig.algebra_name;
  return out;
}

json clause_object(const Waa& a, const TransitionClause& t) {
  json c;
  c["lits"] = json::array();
  for (const auto& [name, negated] : t.lits)
    c["lits"].push_back(negated ? "(not " + name + ")" : name);
  c["constraints"] = json::array();
  for (const auto& g : t.constraints) c["constraints"].push_back(g.to_string());
  c["moves"] = json::array();
  for (const auto& [d, q] : t.moves)
    c["moves"].push_back({{"direction", a.direction_name(d)}, {"state", q}});
  return c;
}

// constrained pairs are the off-diagonal edges tighter than the full relation
json csp_object(const Qcsp& csp) {
  json out;
  out["algebra"] = csp.algebra().name();
  out["variables"] = csp.variable_names();
  json cons = json::array();
  for (int x = 0; x < csp.size(); ++x)
    for (int y = x + 1; y < csp.size(); ++y) {
      if (csp.edge(x, y) == csp.algebra().full_mask()) continue;
      cons.push_back({{"x", csp.variable_names()[static_cast<size_t>(x)]},
                      {"y", csp.variable_names()[static_cast<size_t>(y)]},
                      {"rel", Relation{csp.algebra_ptr(), csp.edge(x, y)}.to_string()}});
    }
  out["constraints"] = std::move(cons);
  Qcsp scenario(csp.algebra_ptr());
  bool ok = csp.consistent(&scenario);
  out["consistent"] = ok;
  if (ok && scenario.size() == csp.size()) {
    json sc = json::array();
    for (int x = 0; x < scenario.size(); ++x)
      for (int y = x + 1; y < scenario.size(); ++y)
        sc.push_back({{"x", scenario.variable_names()[static_cast<size_t>(x)]},
                      {"y", scenario.variable_names()[static_cast<size_t>(y)]},
                      {"atom", Relation{scenario.algebra_ptr(), scenario.edge(x, y)}.to_string()}});
    out["scenario"] = std::move(sc);
  }
  return out;
}

}  // namespace

std::string classification_json(const ValidatedTBox& vt) {
  json out;
  out["axioms"] = json::array();
  for (const auto& ax : vt.tb.axioms) {
    const AxiomClass& cls = vt.class_of(ax.lhs);
    json row;
    row["name"] = ax.lhs;
    row["kind"] = to_string(cls.kind);
    row["rhs"] = ax.rhs.to_string();
    if (is_cyclic(cls.kind)) {
      row["role"] = cls.role_used;
      row["dual"] = cls.dual_of;
      row["c1"] = cls.part_c1.to_string();
      if (cls.kind == AxiomKind::NecessityB || cls.kind == AxiomKind::EventualityB)
        row["c2"] = cls.part_c2.to_string();
    }
    out["axioms"].push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

std::string dnf_json(const Dnf& d1, const Dnf& d2) {
  json out;
  out["dnf1"] = dnf_array(d1);
  out["dnf2"] = dnf_array(d2);
  return out.dump(2) + "\n";
}

std::string closure_json(const ClosedTBox& ct) {
  json out;
  out["initial"] = ct.initial;
  out["names"] = ct.names;
  out["signature"] = signature_object(ct.sig);
  out["axioms"] = json::object();
  for (const auto& [name, d] : ct.axioms) out["axioms"][name] = dnf_array(d);
  out["order"] = json::object();
  for (const auto& [name, succ] : ct.order) out["order"][name] = succ;
  out["eventualities"] = ct.eventualities;
  return out.dump(2) + "\n";
}

std::string automaton_json(const Waa& a) {
  json out;
  out["initial"] = a.initial;
  out["states"] = a.sig.states;
  out["accepting"] = a.accepting;
  json dirs = json::array();
  for (int d = 0; d < a.k(); ++d) dirs.push_back(a.direction_name(d));
  out["directions"] = std::move(dirs);
  out["delta"] = json::object();
  for (const auto& [q, clauses] : a.delta) {
    json arr = json::array();
    for (const auto& t : clauses) arr.push_back(clause_object(a, t));
    out["delta"][q] = std::move(arr);
  }
  out["order"] = json::object();
  for (const auto& [name, succ] : a.order) out["order"][name] = succ;
  return out.dump(2) + "\n";
}

std::string automaton_dot(const Waa& a) {
  std::string out = "digraph waa {\n  rankdir=LR;\n  node [shape=circle];\n";
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  out += "  __start [shape=point];\n";
  for (const auto& q : a.sig.states) {
    out += "  " + quoted(q);
    out += a.accepting.count(q) ? " [shape=doublecircle" : " [shape=circle";
    out += ", tooltip=" + quoted(to_string(a.delta.at(q))) + "];\n";
  }
  out += "  __start -> " + quoted(a.initial) + ";\n";
  for (const auto& [q, clauses] : a.delta)
    for (size_t i = 0; i < clauses.size(); ++i) {
      const TransitionClause& t = clauses[i];
      if (t.moves.empty() && t.constraints.empty() && t.lits.empty()) {
        out += "  " + quoted(q) + " -> " + quoted(q) + " [style=dotted, label=" +
               quoted(std::to_string(i) + ": true") + "];\n";
        continue;
      }
      for (const auto& [d, to] : t.moves)
        out += "  " + quoted(q) + " -> " + quoted(to) + " [label=" +
               quoted(std::to_string(i) + ": " + a.direction_name(d)) + "];\n";
    }
  out += "}\n";
  return out;
}

std::string csp_json(const Qcsp& csp) { return csp_object(csp).dump(2) + "\n"; }

std::string witness_json(const Waa& a, const SearchResult& r) {
  json out;
  out["verdict"] = to_string(r.verdict);
  out["stats"] = {{"nodes", r.stats.nodes},
                  {"combinations", r.stats.combinations},
                  {"csp_checks", r.stats.csp_checks},
                  {"bound_hit", r.stats.bound_hit}};
  if (r.verdict == Verdict::Sat) {
    json w;
    w["certificate"] = r.witness.csp_certificate;
    w["nodes"] = json::array();
    json lassos = json::array();
    for (const auto& n : r.witness.nodes) {
      json row;
      row["path"] = n.path;
      row["states"] = n.states;
      row["choice"] = n.choice;
      row["children"] = json::object();
      for (const auto& [d, child] : n.children)
        row["children"][a.direction_name(d)] = child;
      row["back_edge"] = n.back_edge;
      w["nodes"].push_back(std::move(row));
      if (n.back_edge >= 0 && n.back_edge < static_cast<int>(r.witness.nodes.size())) {
        const auto& stem = r.witness.nodes[static_cast<size_t>(n.back_edge)].path;
        if (stem.size() <= n.path.size())
          lassos.push_back(
              {{"stem", stem},
               {"cycle", std::vector<int>(n.path.begin() + static_cast<long>(stem.size()),
                                          n.path.end())}});
      }
    }
    w["lassos"] = std::move(lassos);
    if (a.algebra) {
      int unroll = 1;
      if (r.witness.csp_certificate.rfind("unrolled(", 0) == 0)
        unroll = std::stoi(r.witness.csp_certificate.substr(9));
      Qcsp csp(a.algebra);
      if (witness_csp(a, r.witness, &csp, unroll) && csp.size() > 0)
        w["csp"] = csp_object(csp);
    }
    out["witness"] = std::move(w);
  }
  return out.dump(2) + "\n";
}

}  // namespace stal
