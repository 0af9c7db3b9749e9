#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stal {

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A JEPD relation algebra given by finite tables: atoms, identity atom,
/// converse and composition. Loaded from JSON data and checked against the
/// algebra axioms (converse involution, identity laws, Peircean coherence)
/// before use.
class QualitativeAlgebra {
 public:
  static std::shared_ptr<const QualitativeAlgebra> from_json_text(const std::string& text);

  /// Built-in algebras ("rcc8", "cda"), overridable by $STAL_ALGEBRA_DIR/<name>.json.
  static std::shared_ptr<const QualitativeAlgebra> load(const std::string& name);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  int atom_index(const std::string& atom) const;
  const std::string& atom_name(int i) const { return atoms_.at(i); }
  int identity_atom() const { return identity_; }

  uint32_t full_mask() const { return (atoms_.size() >= 32) ? ~0u : ((1u << atoms_.size()) - 1u); }
  uint32_t converse_mask(uint32_t mask) const;
  uint32_t compose_mask(uint32_t a, uint32_t b) const;

 private:
  QualitativeAlgebra() = default;
  void check_axioms() const;

  std::string name_;
  int arity_ = 2;
  std::vector<std::string> atoms_;
  std::map<std::string, int> atom_index_;
  int identity_ = -1;
  std::vector<int> converse_;                  // atom -> atom
  std::vector<std::vector<uint32_t>> comp_;    // atom x atom -> mask
};

/// A (possibly disjunctive) relation of one algebra, as an atom bitmask.
struct Relation {
  std::shared_ptr<const QualitativeAlgebra> algebra;
  uint32_t mask = 0;

  bool empty() const { return mask == 0; }
  std::string to_string() const;  // "{DC,EC}" in declared atom order

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.algebra->name() == b.algebra->name() && a.mask == b.mask;
  }
  friend std::strong_ordering operator<=>(const Relation& a, const Relation& b) {
    if (auto c = a.algebra->name() <=> b.algebra->name(); c != 0) return c;
    return a.mask <=> b.mask;
  }
};

Relation complement(const Relation& r);
Relation converse(const Relation& r);
Relation compose(const Relation& a, const Relation& b);
Relation relation_from_atoms(std::shared_ptr<const QualitativeAlgebra> alg,
                             const std::vector<std::string>& atoms);

/// Binary constraint network over one algebra. At most one constraint is
/// stored per unordered variable pair; the other orientation is derived via
/// converse. The diagonal is pinned to the identity atom.
class Qcsp {
 public:
  explicit Qcsp(std::shared_ptr<const QualitativeAlgebra> alg) : alg_(std::move(alg)) {}

  int add_variable(const std::string& name);
  int variable(const std::string& name);                 // adds if missing
  std::optional<int> find_variable(const std::string& name) const;
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const QualitativeAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const QualitativeAlgebra> algebra_ptr() const { return alg_; }

  void constrain(int x, int y, uint32_t mask);
  uint32_t edge(int x, int y) const;

  /// Local consistency refinement: C(i,j) <- C(i,j) ∩ C(i,k);C(k,j) to a
  /// fixpoint. Returns false iff some edge became empty. Refines in place.
  bool path_consistency();

  /// Full decision: path consistency plus backtracking over atomic
  /// refinements. On success optionally yields a consistent atomic scenario.
  bool consistent(Qcsp* scenario_out = nullptr) const;

 private:
  std::shared_ptr<const QualitativeAlgebra> alg_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<uint32_t> edges_;  // row-major size() x size()

  void grow(int n);
  uint32_t& at(int x, int y) { return edges_[static_cast<size_t>(x) * names_.size() + y]; }
  uint32_t at(int x, int y) const { return edges_[static_cast<size_t>(x) * names_.size() + y]; }
};

inline bool csp_consistent(const Qcsp& csp) { return csp.consistent(); }

}  // namespace stal
