#pragma once

#include <string_view>
#include <vector>

#include "ldlfmon/alphabet.hpp"
#include "ldlfmon/ltlf.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon {

// Concrete grammar (EBNF in README.md). Precedence, tightest first:
//   unary (! X WX F G <p> [p]) > U R > && > || > -> > <->
// `->` is right associative, every other binary operator is left associative.
//
// All parsers throw SyntaxError carrying the byte offset of the problem and,
// when an alphabet is supplied, UnknownSymbol for names outside it.

/// LDLf formula. Bare propositional formulas are read as <phi>tt; `end` and
/// `last` expand to [true]ff and <true>end; `->` and `<->` are eliminated.
Ldlf parse_ldlf(std::string_view text, const Alphabet* alphabet = nullptr);
inline Ldlf parse_ldlf(std::string_view text, const Alphabet& alphabet) {
    return parse_ldlf(text, &alphabet);
}

/// LTLf formula with prefix temporal operators X, WX, F, G and infix U, R.
Ltlf parse_ltlf(std::string_view text, const Alphabet* alphabet = nullptr);
inline Ltlf parse_ltlf(std::string_view text, const Alphabet& alphabet) {
    return parse_ltlf(text, &alphabet);
}

/// Path expression / regular expression: `;` `+` `*` and tests `phi?`.
Path parse_re(std::string_view text, const Alphabet* alphabet = nullptr);
inline Path parse_re(std::string_view text, const Alphabet& alphabet) {
    return parse_re(text, &alphabet);
}

/// Plain propositional formula.
Prop parse_prop(std::string_view text, const Alphabet* alphabet = nullptr);

/// Proposition names mentioned anywhere in a term, in first-occurrence order.
std::vector<std::string> collect_props(Ldlf f);
std::vector<std::string> collect_props(Path p);
std::vector<std::string> collect_props(const Ltlf& f);

}  // namespace ldlfmon
