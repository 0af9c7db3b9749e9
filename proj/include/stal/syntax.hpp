#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stal/algebra.hpp"

namespace stal {

enum class Kind : uint8_t { Top, Bot, Name, Not, And, Or, Some, All, Pred };

/// Feature chain of a concrete-domain atom: zero or more abstract features
/// followed by one concrete feature, written "(f1.f2.g)".
struct FeatureChain {
  std::vector<std::string> prefix;
  std::string terminal;

  std::string to_string() const;
  friend auto operator<=>(const FeatureChain&, const FeatureChain&) = default;
};

struct ConceptNode;

/// Immutable concept term with structural equality, a total structural order
/// and a cached hash. Cheap to copy (shared representation).
class Concept {
 public:
  Concept() = default;  // empty handle; only valid as a placeholder

  static Concept top();
  static Concept bot();
  static Concept name(std::string n);
  static Concept neg(Concept c);
  static Concept conj(Concept l, Concept r);
  static Concept disj(Concept l, Concept r);
  static Concept some(std::string role, Concept c);
  static Concept all(std::string role, Concept c);
  static Concept pred(std::vector<FeatureChain> chains, Relation rel);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  const std::string& name_str() const;   // Name
  const std::string& role() const;       // Some / All
  Concept child() const;                 // Not / Some / All
  Concept lhs() const;                   // And / Or
  Concept rhs() const;                   // And / Or
  const std::vector<FeatureChain>& chains() const;  // Pred
  const Relation& relation() const;                 // Pred

  size_t hash() const;
  std::string to_string() const;  // canonical grammar text

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  explicit Concept(std::shared_ptr<const ConceptNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ConceptNode> node_;
};

/// One-step negation: strips a top-level Not, otherwise wraps one.
Concept neg1(const Concept& c);

/// Negation normal form pushing Not inward through connectives, quantifiers
/// and Pred (relation complement). Names are treated as atomic.
Concept push_negation(const Concept& c);

/// All subconcepts of c, closed under the usual single-step rewrites of
/// negated quantifiers and negated Pred atoms.
std::set<Concept> subconcepts(const Concept& c);

/// Right-folded conjunction / disjunction of a non-empty ordered range;
/// empty ranges yield top / bot.
Concept conj_all(const std::vector<Concept>& parts);
Concept disj_all(const std::vector<Concept>& parts);

/// Sorts And/Or argument lists recursively; used for comparing concepts
/// modulo commutativity.
Concept sort_commutative(const Concept& c);

struct Signature {
  std::set<std::string> primitives;
  std::set<std::string> roles;      // general roles
  std::set<std::string> features;   // abstract (functional) features
  std::set<std::string> cfeatures;  // concrete features
  std::string algebra_name;
  std::shared_ptr<const QualitativeAlgebra> algebra;  // resolved, may be null

  bool is_role_name(const std::string& n) const { return roles.count(n) || features.count(n); }
  void check() const;  // pairwise disjointness of the name sets
};

struct Axiom {
  std::string lhs;
  Concept rhs;
};

struct TBox {
  Signature sig;
  std::vector<Axiom> axioms;

  bool is_defined(const std::string& n) const;
  const Axiom* find(const std::string& n) const;
  std::string to_string() const;  // textual TBox format
};

}  // namespace stal
