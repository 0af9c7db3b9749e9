#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stal/analysis.hpp"

namespace stal {

/// A clause is a conjunction of concepts, a Dnf a disjunction of clauses.
/// {} is the empty disjunction (bot), {{}} the empty conjunction (top).
using Clause = std::set<Concept>;
using Dnf = std::set<Clause>;

std::string to_string(const Clause& s);
std::string to_string(const Dnf& d);

Concept clause_concept(const Clause& s);
Concept dnf_concept(const Dnf& d);

/// Feature-successor existence asserted by a chain: nothing for a bare
/// concrete feature, otherwise (some f1 (some f2 ... top)).
std::optional<Concept> exists_chain(const FeatureChain& u);

/// Pairwise clause unions, dropping any clause holding a name and its
/// negation.
Dnf pi_product(const Dnf& a, const Dnf& b);

/// First normal form: clauses of literals, unexpanded some/all tokens and
/// predicates. Acyclic names are expanded, cyclic names unfolded one step.
Dnf dnf1(const Concept& c, const ValidatedTBox& vt);
Dnf dnf1_negated(const Concept& c, const ValidatedTBox& vt);

struct PceaPartition {
  std::vector<Concept> prop;
  std::vector<Concept> csp;
  std::map<std::string, std::vector<Concept>> some_bodies;
  std::map<std::string, std::vector<Concept>> all_bodies;
};

/// Splits a dnf1 clause by element form. Throws logic_error on anything a
/// dnf1 clause cannot hold.
PceaPartition pcea_partition(const Clause& s, const Signature& sig);

/// One merged existential per some-token for general roles, one per feature
/// with at least one some-token. All-tokens are absorbed or dropped.
Clause merge_clause(const Clause& s, const Signature& sig);

Dnf dnf2_of(const Dnf& d, const Signature& sig);
Dnf dnf2(const Concept& c, const ValidatedTBox& vt);

}  // namespace stal
