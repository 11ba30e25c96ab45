#pragma once

#include <string>
#include <string_view>

#include "intnfa/interaction.hpp"
#include "intnfa/signature.hpp"

namespace intnfa {

struct Model {
  Signature signature;
  Interaction term;
};

/// Parses
///
///   lifelines l1 l2 ...; messages m1 ...; <term>
///
/// where a term is `0`, an action `l!m` / `l?m`, `strict|seq|alt|par(t, t, ...)`
/// (at least two operands, nested to the right), `loopS(t)`, or
/// `coreg[l ...](t, t)`. `#` starts a comment running to the end of the line.
/// Throws ParseError with a line:column position.
Model parse_model(std::string_view text);

/// Parses a term alone against a known signature.
Interaction parse_term(const Signature& sig, std::string_view text);

/// Text accepted by parse_model, term on a single line.
std::string print_model(const Model& m);

}  // namespace intnfa
