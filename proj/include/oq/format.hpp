#pragma once

#include <string>
#include <vector>

#include "oq/cpoly.hpp"
#include "oq/liealg.hpp"
#include "oq/pbw.hpp"

namespace oq {

// Shared polynomial text form used by every renderer and the parser:
//
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)? | 'h' ('^' nat)?
//   coeff  := int ('/' nat)?
//   var    := 'x' + basis label (xE, xH1, xE12, ...) or positional x1..xN
//
// Whitespace insensitive; a sign before the first term is also accepted, so
// every rendered polynomial parses back to an equal one. Rendering is
// canonical: terms ascend by total degree then by graded-lex position, the
// parameter power ascends within a monomial, and factors appear as
// rational * h-power * variables with '*' joiners.

std::string render_rational(const Rational& c);
std::string render_hpoly(const HPoly& p);
std::string render_cpoly(const CPoly& f, const std::vector<std::string>& labels);
std::string render_pbw(const PBWElement& u, const std::vector<std::string>& labels);

// Inverse of render_cpoly over the same grammar. Errors: ParseError with
// line/column and the expected tokens; UnknownVariable for identifiers that
// name no basis variable.
CPoly parse_poly(const std::string& text, const LieAlgebraData& alg);

}  // namespace oq
