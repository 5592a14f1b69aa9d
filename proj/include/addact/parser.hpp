#pragma once

// Text formats: algebra presentations "Q[S1,S2]/(S1*S2, S1^3 - S2^2)",
// polynomial expressions over a known ring, and line-based
// structure-constant tables. All parsers report 1-based line/column
// positions on failure.

#include <string>
#include <string_view>

#include "addact/groebner.hpp"
#include "addact/local_algebra.hpp"
#include "addact/polynomial.hpp"

namespace addact {

// presentation := "Q" "[" ident ("," ident)* "]" "/" "(" poly ("," poly)* ")"
IdealPresentation parse_presentation(std::string_view text);

// A single polynomial over a given ring; unknown identifiers are rejected.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Structure-constant document:
//   dim 5
//   basis 1 s1 s2 s3 s4
//   s1*s1 = s3
//   s1*s3 = s4
//   s2*s2 = s4
// Omitted pairs are zero; '#' starts a comment; pairs may appear in either
// order but not twice.
AlgebraPtr parse_structure_table(std::string_view text);
std::string format_structure_table(const LocalAlgebra& a);

}  // namespace addact
