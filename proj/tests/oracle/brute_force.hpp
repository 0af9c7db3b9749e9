#pragma once

#include <set>

#include "stal/analysis.hpp"

namespace oracle {

enum class ModelVerdict { Sat, Unsat, Unknown };

/// Decides satisfiability of `c` under the axioms by enumerating bounded
/// partial trees straight from the semantics: pessimistic trees must
/// discharge every existential demand within the depth (sound for sat, since
/// roles may simply stop past the frontier), optimistic trees excuse frontier
/// demands (sound for unsat, since truncating a real model passes). Throws
/// std::invalid_argument on csp atoms.
ModelVerdict brute_force_models(const stal::ValidatedTBox& vt,
                                const stal::Concept& c, int max_depth);

}  // namespace oracle
