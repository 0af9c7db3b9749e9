#include "stal/emptiness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stal {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "sat";
    case Verdict::Unsat: return "unsat";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::string path_key(const std::vector<int>& path) {
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

// csp variable for a grounded argument anchored at a tree node
std::string var_name(std::vector<int> node, const GroundArg& arg) {
  node.insert(node.end(), arg.word.begin(), arg.word.end());
  return path_key(node) + "|" + arg.cfeature;
}

struct AnchoredConstraint {
  std::vector<int> node;
  GroundConstraint gc;
};

bool is_prefix(const std::vector<int>& pre, const std::vector<int>& full) {
  return pre.size() <= full.size() &&
         std::equal(pre.begin(), pre.end(), full.begin());
}

struct OpenNode {
  std::vector<int> path;
  std::vector<std::string> states;  // sorted
  int depth = 0;
  int parent = -1;  // witness node index
};

struct Searcher {
  const Waa& a;
  SearchConfig cfg;
  SearchStats stats;
  bool aborted = false;  // node budget spent; unwind without trying alternatives
  std::vector<WitnessNode> nodes;
  std::vector<int> parents;  // per witness node
  std::vector<AnchoredConstraint> constraints;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> back_edges;

  Searcher(const Waa& a_, const SearchConfig& cfg_) : a(a_), cfg(cfg_) {}

  void add_all(Qcsp& csp) const {
    auto add = [&](const std::vector<int>& at, const GroundConstraint& gc) {
      int x = csp.variable(var_name(at, gc.args[0]));
      int y = csp.variable(var_name(at, gc.args[1]));
      csp.constrain(x, y, gc.rel.mask);
    };
    for (const auto& c : constraints) add(c.node, c.gc);
    for (const auto& [anc, rep] : back_edges) {
      std::vector<int> seg(rep.begin() + anc.size(), rep.end());
      for (const auto& c : constraints) {
        if (!is_prefix(anc, c.node)) continue;
        std::vector<int> shifted = c.node;
        for (int i = 0; i < cfg.lasso_unrollings; ++i) {
          shifted.insert(shifted.begin() + anc.size(), seg.begin(), seg.end());
          add(shifted, c.gc);
        }
      }
    }
  }

  bool csp_ok() {
    if (constraints.empty()) return true;
    ++stats.csp_checks;
    Qcsp csp(a.algebra);
    add_all(csp);
    return csp.consistent();
  }

  // whether every state threading constantly around the candidate loop is
  // accepting; seg holds the node indexes from the repeated ancestor down to
  // the parent of the repeat at `path`
  bool loop_accepting_seg(const std::vector<int>& seg,
                          const std::vector<int>& path) const {
    for (const auto& q : nodes[seg.front()].states) {
      bool loops = true;
      for (size_t j = 0; j < seg.size() && loops; ++j) {
        const WitnessNode& n = nodes[seg[j]];
        int dir = (j + 1 < seg.size()) ? nodes[seg[j + 1]].path.back()
                                       : path.back();
        auto ch = n.choice.find(q);
        loops = ch != n.choice.end() &&
                std::count(a.delta.at(q)[ch->second].moves.begin(),
                           a.delta.at(q)[ch->second].moves.end(),
                           std::make_pair(dir, q)) > 0;
      }
      if (loops && !a.accepting.count(q)) return false;
    }
    return true;
  }

  // chronological backtracking over all open nodes: pending.front() is
  // resolved by a back edge or by one clause choice per state, the rest
  // follows recursively, so a dead end anywhere revisits every earlier
  // alternative
  bool solve(std::vector<OpenNode> pending) {
    if (pending.empty()) return true;
    if (aborted) return false;
    const OpenNode cur = pending.front();
    pending.erase(pending.begin());

    ++stats.nodes;
    if (cfg.node_budget > 0 && stats.nodes > cfg.node_budget) {
      stats.bound_hit = true;
      aborted = true;
      return false;
    }
    const int my = (int)nodes.size();
    nodes.push_back({cur.path, cur.states, {}, {}, -1});
    parents.push_back(cur.parent);
    if (cur.parent >= 0) nodes[cur.parent].children[cur.path.back()] = my;
    const size_t cmark = constraints.size();
    const size_t bmark = back_edges.size();

    auto reset = [&] {
      constraints.resize(cmark);
      back_edges.resize(bmark);
      nodes.resize(my + 1);
      parents.resize(my + 1);
      nodes[my].choice.clear();
      nodes[my].children.clear();
      nodes[my].back_edge = -1;
    };

    // close on an accepting repeat, innermost ancestor first
    for (int i = cur.parent; i >= 0; i = parents[i]) {
      if (nodes[i].states != cur.states) continue;
      std::vector<int> seg = collect_segment_from(i, cur.parent);
      if (!loop_accepting_seg(seg, cur.path)) continue;
      back_edges.emplace_back(nodes[i].path, cur.path);
      nodes[my].back_edge = i;
      if (csp_ok() && solve(pending)) return true;
      reset();
      if (aborted) {
        unwind(my, cur);
        return false;
      }
    }

    // one clause per state, every combination
    std::vector<const std::vector<TransitionClause>*> options;
    options.reserve(cur.states.size());
    for (const auto& q : cur.states) {
      options.push_back(&a.delta.at(q));
      if (options.back()->empty()) {
        unwind(my, cur);
        return false;
      }
    }
    std::vector<size_t> pick(cur.states.size(), 0);
    while (true) {
      ++stats.combinations;
      if (try_combination(my, cur, pick, pending)) return true;
      reset();
      if (aborted) break;
      size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i]->size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    unwind(my, cur);
    return false;
  }

  std::vector<int> collect_segment_from(int from, int parent) const {
    std::vector<int> seg;
    for (int i = parent; i >= 0; i = parents[i]) {
      seg.push_back(i);
      if (i == from) break;
    }
    std::reverse(seg.begin(), seg.end());
    return seg;
  }

  void unwind(int my, const OpenNode& cur) {
    if (cur.parent >= 0) nodes[cur.parent].children.erase(cur.path.back());
    nodes.resize(my);
    parents.resize(my);
  }

  bool try_combination(int my, const OpenNode& cur,
                       const std::vector<size_t>& pick,
                       const std::vector<OpenNode>& pending) {
    std::map<std::string, bool> lits;
    std::map<int, std::set<std::string>> succ;
    bool added = false;
    for (size_t i = 0; i < cur.states.size(); ++i) {
      const TransitionClause& tc = a.delta.at(cur.states[i])[pick[i]];
      for (const auto& [name, neg] : tc.lits) {
        auto [it, fresh] = lits.emplace(name, neg);
        if (!fresh && it->second != neg) return false;
      }
      for (const auto& gc : tc.constraints) {
        constraints.push_back({cur.path, gc});
        added = true;
      }
      for (const auto& [d, q] : tc.moves) succ[d].insert(q);
      nodes[my].choice[cur.states[i]] = (int)pick[i];
    }
    if (added && !csp_ok()) return false;
    if (!succ.empty() && cur.depth >= cfg.depth_bound) {
      stats.bound_hit = true;
      return false;
    }
    std::vector<OpenNode> next;
    next.reserve(succ.size() + pending.size());
    for (const auto& [d, qs] : succ) {
      std::vector<int> child_path = cur.path;
      child_path.push_back(d);
      next.push_back({child_path, {qs.begin(), qs.end()}, cur.depth + 1, my});
    }
    next.insert(next.end(), pending.begin(), pending.end());
    return solve(std::move(next));
  }

  std::string certificate() {
    if (constraints.empty()) return "none";
    Qcsp csp(a.algebra);
    add_all(csp);
    Qcsp scenario(a.algebra);
    if (!csp.consistent(&scenario))
      throw std::logic_error("the witness csp lost consistency");
    bool touched = false;
    bool periodic = true;
    for (const auto& [anc, rep] : back_edges) {
      std::vector<int> seg(rep.begin() + anc.size(), rep.end());
      // one representative anchored arg per variable under the ancestor
      std::map<std::string, std::pair<std::vector<int>, GroundArg>> vars;
      for (const auto& c : constraints) {
        if (!is_prefix(anc, c.node)) continue;
        for (const auto& arg : c.gc.args)
          vars.emplace(var_name(c.node, arg), std::make_pair(c.node, arg));
      }
      if (vars.empty()) continue;
      touched = true;
      auto shifted = [&](const std::pair<std::vector<int>, GroundArg>& v) {
        std::vector<int> node = v.first;
        node.insert(node.begin() + anc.size(), seg.begin(), seg.end());
        return var_name(node, v.second);
      };
      for (auto x = vars.begin(); x != vars.end() && periodic; ++x)
        for (auto y = std::next(x); y != vars.end() && periodic; ++y) {
          auto ix = scenario.find_variable(x->first);
          auto iy = scenario.find_variable(y->first);
          auto jx = scenario.find_variable(shifted(x->second));
          auto jy = scenario.find_variable(shifted(y->second));
          if (!ix || !iy || !jx || !jy)
            throw std::logic_error("a witness csp variable went missing");
          periodic = scenario.edge(*ix, *iy) == scenario.edge(*jx, *jy);
        }
      if (!periodic) break;
    }
    if (!touched) return "finite";
    if (periodic) return "periodic";
    return "unrolled(" + std::to_string(cfg.lasso_unrollings) + ")";
  }
};

}  // namespace

SearchResult decide_emptiness(const Waa& a, const SearchConfig& cfg) {
  Searcher s(a, cfg);
  SearchResult out;
  if (s.solve({{{}, {a.initial}, 0, -1}})) {
    out.verdict = Verdict::Sat;
    out.witness.nodes = std::move(s.nodes);
    out.witness.csp_certificate = s.certificate();
  } else {
    out.verdict = s.stats.bound_hit ? Verdict::Unknown : Verdict::Unsat;
  }
  out.stats = s.stats;
  return out;
}

namespace {

struct Verifier {
  const Waa& a;
  const Witness& w;
  std::string err;
  std::vector<AnchoredConstraint> constraints;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> back_edges;
  std::set<int> seen;

  bool fail(const std::string& m) {
    if (err.empty()) err = m;
    return false;
  }

  bool at(int idx, const std::vector<int>& path,
          const std::vector<std::string>& states, std::vector<int> branch) {
    if (idx < 0 || idx >= (int)w.nodes.size())
      return fail("child index out of range");
    if (!seen.insert(idx).second) return fail("a node is reached twice");
    const WitnessNode& n = w.nodes[idx];
    if (n.path != path) return fail("node path disagrees with its position");
    if (n.states != states) return fail("node states disagree with the run");
    for (const auto& q : states)
      if (!a.delta.count(q)) return fail("unknown state " + q);

    if (n.back_edge >= 0) {
      if (!n.choice.empty() || !n.children.empty())
        return fail("a back edge node must not expand");
      auto hit = std::find(branch.begin(), branch.end(), n.back_edge);
      if (hit == branch.end())
        return fail("back edge target is not an ancestor");
      const WitnessNode& anc = w.nodes[n.back_edge];
      if (anc.states != states) return fail("back edge changes the state set");
      for (const auto& q : states) {
        bool loops = true;
        for (auto it = hit; it != branch.end() && loops; ++it) {
          const WitnessNode& m = w.nodes[*it];
          int dir = (it + 1 != branch.end()) ? w.nodes[*(it + 1)].path.back()
                                             : path.back();
          auto ch = m.choice.find(q);
          loops = ch != m.choice.end() &&
                  std::count(a.delta.at(q)[ch->second].moves.begin(),
                             a.delta.at(q)[ch->second].moves.end(),
                             std::make_pair(dir, q)) > 0;
        }
        if (loops && !a.accepting.count(q))
          return fail("state " + q + " loops without accepting");
      }
      back_edges.emplace_back(anc.path, path);
      return true;
    }

    std::map<std::string, bool> lits;
    std::map<int, std::set<std::string>> succ;
    for (const auto& q : states) {
      auto ch = n.choice.find(q);
      if (ch == n.choice.end()) return fail("no clause chosen for " + q);
      const auto& clauses = a.delta.at(q);
      if (ch->second < 0 || ch->second >= (int)clauses.size())
        return fail("clause index out of range for " + q);
      const TransitionClause& tc = clauses[ch->second];
      for (const auto& [name, neg] : tc.lits) {
        auto [it, fresh] = lits.emplace(name, neg);
        if (!fresh && it->second != neg)
          return fail("clashing literals on " + name);
      }
      for (const auto& gc : tc.constraints) constraints.push_back({path, gc});
      for (const auto& [d, q2] : tc.moves) succ[d].insert(q2);
    }
    if (n.choice.size() != states.size())
      return fail("extra clause choices on a node");
    if (succ.size() != n.children.size())
      return fail("children disagree with the spawned directions");
    branch.push_back(idx);
    for (const auto& [d, qs] : succ) {
      auto ch = n.children.find(d);
      if (ch == n.children.end())
        return fail("missing child in direction " + std::to_string(d));
      std::vector<int> child_path = path;
      child_path.push_back(d);
      if (!at(ch->second, child_path, {qs.begin(), qs.end()}, branch))
        return false;
    }
    return true;
  }

  bool csp() {
    if (constraints.empty())
      return w.csp_certificate == "none" ||
             fail("certificate claims csp atoms that do not exist");
    if (w.csp_certificate == "none")
      return fail("csp atoms despite a none certificate");
    int unroll = 1;
    if (w.csp_certificate.rfind("unrolled(", 0) == 0)
      unroll = std::stoi(w.csp_certificate.substr(9));
    else if (w.csp_certificate != "finite" && w.csp_certificate != "periodic")
      return fail("unrecognized certificate " + w.csp_certificate);
    Searcher s(a, SearchConfig{0, unroll});
    s.constraints = constraints;
    s.back_edges = back_edges;
    Qcsp csp(a.algebra);
    s.add_all(csp);
    if (!csp.consistent()) return fail("the witness csp is inconsistent");
    std::string level = s.certificate();
    if (w.csp_certificate == "periodic" && level != "periodic")
      return fail("periodicity does not hold");
    if (w.csp_certificate == "finite" && level != "finite")
      return fail("a back edge touches the csp despite a finite certificate");
    return true;
  }
};

}  // namespace

bool verify_witness(const Waa& a, const Witness& w, std::string* why) {
  Verifier v{a, w, {}, {}, {}, {}};
  bool ok = !w.nodes.empty() || v.fail("empty witness");
  if (ok)
    ok = v.at(0, {}, {a.initial}, {}) &&
         ((int)v.seen.size() == (int)w.nodes.size() ||
          v.fail("unreachable nodes in the witness")) &&
         v.csp();
  if (!ok && why) *why = v.err;
  return ok;
}

bool witness_csp(const Waa& a, const Witness& w, Qcsp* out, int unrollings) {
  Verifier v{a, w, {}, {}, {}, {}};
  if (w.nodes.empty() || !v.at(0, {}, {a.initial}, {})) return false;
  if (v.constraints.empty()) return true;
  Searcher s{a, SearchConfig{0, unrollings}};
  s.constraints = v.constraints;
  s.back_edges = v.back_edges;
  s.add_all(*out);
  return true;
}

SearchResult check_satisfiable(const ValidatedTBox& vt, const Concept& c,
                               const SearchConfig& cfg) {
  return decide_emptiness(build_automaton(close(vt, c)), cfg);
}

}  // namespace stal
