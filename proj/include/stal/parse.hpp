#pragma once

#include <string>

#include "stal/syntax.hpp"

namespace stal {

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int col)
      : InputError("line " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line, col;
};

/// Parses a single concept against the signature and defined names of tb.
Concept parse_concept(const std::string& text, const TBox& tb);

/// Parses a TBox file: declaration lines first (primitive/role/feature/
/// cfeature/algebra), then axiom lines "B := <concept>;". '#' starts a
/// comment. The declared algebra is resolved eagerly.
TBox parse_tbox(const std::string& text);

/// Parses a constraint list "x y {DC,EC};" per line into a network over
/// alg. Repeated pairs intersect. Variables appear in first-use order.
Qcsp parse_csp(const std::string& text, std::shared_ptr<const QualitativeAlgebra> alg);

}  // namespace stal
