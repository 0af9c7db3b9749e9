#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stal/analysis.hpp"
#include "stal/normal_form.hpp"
#include "stal/syntax.hpp"

namespace stal {

/// Name of the axiom introduced for the concept under test.
extern const char* kInitialName;

/// A TBox rewritten so that every axiom maps a defined name to a set of
/// clauses whose elements are primitive literals, concrete-domain atoms and
/// merged existential tokens over conjunctions of defined names.
struct ClosedTBox {
  Signature sig;
  std::vector<std::string> names;  // in the order axioms were added
  std::map<std::string, Dnf> axioms;
  std::map<std::string, Concept> original_rhs;  // rhs each axiom was introduced with
  std::string initial;
  std::map<std::string, std::set<std::string>> order;  // successor names per axiom
  std::set<std::string> eventualities;

  friend bool operator==(const ClosedTBox& a, const ClosedTBox& b);
};

/// Adds the axiom kInitialName = c. Fails if the name is already taken.
ValidatedTBox augment(const ValidatedTBox& vt, const Concept& c);

/// Rewrites every axiom of vt into closed form, minting names for existential
/// bodies that no axiom covers yet. `initial` must be a defined name.
ClosedTBox close_tbox(const ValidatedTBox& vt, const std::string& initial);

/// close_tbox of the augmented TBox; the usual entry point.
ClosedTBox close(const ValidatedTBox& vt, const Concept& c);

/// The closure as an ordinary TBox: each axiom paired with the rhs it was
/// introduced with. Revalidating and re-closing this reproduces ct exactly.
TBox reencode(const ClosedTBox& ct);

/// Vocabulary the automaton construction reads off a closed TBox.
struct AutomatonSignature {
  std::set<std::string> primitives;  // primitive names used in literals
  std::set<std::string> cfeatures;   // chain terminals of csp atoms
  std::vector<std::string> states;   // all defined names, in ct order
  std::vector<Concept> rec;          // merged tokens over general roles, sorted
  std::vector<std::string> af;       // features with an existential token, sorted
  int k() const { return static_cast<int>(rec.size() + af.size()); }
};

AutomatonSignature derive_signature(const ClosedTBox& ct);

}  // namespace stal
