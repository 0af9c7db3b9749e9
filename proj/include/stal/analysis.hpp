#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stal/syntax.hpp"

namespace stal {

enum class AxiomKind : uint8_t { Acyclic, NecessityA, NecessityB, EventualityA, EventualityB };

const char* to_string(AxiomKind k);
inline bool is_cyclic(AxiomKind k) { return k != AxiomKind::Acyclic; }
inline bool is_eventuality(AxiomKind k) {
  return k == AxiomKind::EventualityA || k == AxiomKind::EventualityB;
}

/// How a defined concept recurses, if it does. For NecessityA and
/// EventualityA only part_c1 is set; B forms also carry part_c2.
struct AxiomClass {
  AxiomKind kind = AxiomKind::Acyclic;
  std::string role_used;
  std::string dual_of;
  Concept part_c1;
  Concept part_c2;
};

struct Validation {
  bool ok = false;
  std::vector<std::string> errors;
  std::map<std::string, AxiomClass> classes;
};

/// Modal depths (count of some/all above the occurrence) at which `name`
/// occurs in `c`.
std::set<int> name_depths(const std::string& name, const Concept& c);

/// All concept names occurring in `c`.
std::set<std::string> names_in(const Concept& c);

/// Removes every (not (not ...)) pair, leaving the rest of the tree alone.
Concept strip_double_negation(const Concept& c);

/// Equality after negation normal form and sorting of and/or operand runs.
bool equivalent_commutative(const Concept& a, const Concept& b);

Validation validate(const TBox& tb);
bool is_weakly_cyclic(const TBox& tb);

struct ValidatedTBox {
  TBox tb;
  std::map<std::string, AxiomClass> classes;
  const AxiomClass& class_of(const std::string& name) const { return classes.at(name); }
};

/// Throws InputError with the joined diagnostics if validation fails.
ValidatedTBox validated(TBox tb);

}  // namespace stal
