#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stal/algebra.hpp"
#include "stal/closure.hpp"

namespace stal {

/// A csp-atom argument grounded over the automaton directions: a word of
/// direction indices followed by a concrete feature.
struct GroundArg {
  std::vector<int> word;
  std::string cfeature;

  std::string to_string() const;
  friend auto operator<=>(const GroundArg&, const GroundArg&) = default;
};

struct GroundConstraint {
  Relation rel;
  std::vector<GroundArg> args;

  std::string to_string() const;
  friend bool operator==(const GroundConstraint&, const GroundConstraint&) = default;
};

/// One conjunct of a transition in set representation: literals over the
/// primitive concepts, grounded csp atoms, and moves (direction, state).
struct TransitionClause {
  std::vector<std::pair<std::string, bool>> lits;  // (primitive, negated)
  std::vector<GroundConstraint> constraints;
  std::vector<std::pair<int, std::string>> moves;

  std::string to_string() const;
  friend bool operator==(const TransitionClause&, const TransitionClause&) = default;
};

std::string to_string(const std::vector<TransitionClause>& delta);

/// Weak alternating automaton over k-ary trees with qualitative constraints.
/// Directions 0..k-1 are the rec tokens of the signature followed by its
/// abstract features.
struct Waa {
  AutomatonSignature sig;
  std::shared_ptr<const QualitativeAlgebra> algebra;  // null without csp atoms
  std::string initial;
  std::map<std::string, std::vector<TransitionClause>> delta;  // disjuncts per state
  std::set<std::string> accepting;
  std::map<std::string, std::set<std::string>> order;  // direct successors
  std::map<std::string, std::set<std::string>> reach;  // reflexive transitive closure

  int k() const { return sig.k(); }
  std::string direction_name(int d) const;
};

/// The conjunct names of a merged existential body (a right-folded
/// conjunction of defined names, or a single one).
std::vector<std::string> body_names(const Concept& body);

/// Builds the automaton of a closed TBox and verifies its weakness: moves
/// stay inside the successor order and the order has no cycle besides
/// self-loops. A violation is a defect, not bad input.
Waa build_automaton(const ClosedTBox& ct);

}  // namespace stal
