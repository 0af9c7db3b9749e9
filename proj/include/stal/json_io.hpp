#pragma once

#include <string>

#include "stal/analysis.hpp"
#include "stal/automaton.hpp"
#include "stal/closure.hpp"
#include "stal/emptiness.hpp"
#include "stal/normal_form.hpp"

namespace stal {

/// Machine output used by the command line tool. Keys are emitted sorted and
/// containers are already canonically ordered, so equal inputs always yield
/// byte-identical text.

std::string classification_json(const ValidatedTBox& vt);
std::string dnf_json(const Dnf& d1, const Dnf& d2);
std::string closure_json(const ClosedTBox& ct);
std::string automaton_json(const Waa& a);
std::string automaton_dot(const Waa& a);
std::string csp_json(const Qcsp& csp);
std::string witness_json(const Waa& a, const SearchResult& r);

}  // namespace stal
