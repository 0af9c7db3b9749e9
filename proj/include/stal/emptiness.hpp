#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stal/automaton.hpp"

namespace stal {

enum class Verdict : uint8_t { Sat, Unsat, Unknown };
const char* to_string(Verdict v);

struct SearchConfig {
  int depth_bound = 24;
  int lasso_unrollings = 1;   // extra periods checked beyond the witness tree
  long node_budget = 200000;  // expansion cap, 0 = unlimited; hitting it forfeits Unsat
};

/// One node of a witness tree. A node either picks one transition clause per
/// state and has a child per spawned direction, or it closes the branch with
/// a back edge to an ancestor carrying the same state set.
struct WitnessNode {
  std::vector<int> path;
  std::vector<std::string> states;    // sorted
  std::map<std::string, int> choice;  // clause index per state; empty on back edges
  std::map<int, int> children;        // direction -> node index
  int back_edge = -1;                 // ancestor node index, or -1
};

struct Witness {
  std::vector<WitnessNode> nodes;  // preorder, nodes[0] is the root
  // "none": no csp atoms; "finite": no back edge touches a constraint;
  // "periodic": the scenario repeats across the unrolling boundary;
  // "unrolled(n)": consistent on n extra periods, periodicity not established
  std::string csp_certificate = "none";
};

struct SearchStats {
  long nodes = 0;
  long combinations = 0;
  long csp_checks = 0;
  bool bound_hit = false;
};

struct SearchResult {
  Verdict verdict = Verdict::Unknown;
  Witness witness;  // filled for Sat
  SearchStats stats;
};

/// Bounded emptiness search. Branches close on leaves without moves or on
/// back edges whose looping states are all accepting; exhaustion without
/// hitting the depth bound is definitive emptiness.
SearchResult decide_emptiness(const Waa& a, const SearchConfig& cfg = {});

/// Rechecks a sat witness from scratch: tree shape, clause choices, literal
/// consistency, loop acceptance, and the csp at the strength named by the
/// certificate.
bool verify_witness(const Waa& a, const Witness& w, std::string* why = nullptr);

/// Rebuilds the ground constraint system of a witness into `out` (base
/// constraints plus shifted copies per back edge and unrolling). Returns
/// false when the witness does not walk the automaton.
bool witness_csp(const Waa& a, const Witness& w, Qcsp* out, int unrollings = 1);

/// Whole pipeline: close the TBox around the query, build the automaton and
/// decide emptiness.
SearchResult check_satisfiable(const ValidatedTBox& vt, const Concept& c,
                               const SearchConfig& cfg = {});

}  // namespace stal
