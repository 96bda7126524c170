#pragma once

#include <cstddef>
#include <set>

#include "ldlfmon/alphabet.hpp"
#include "ldlfmon/ltlf.hpp"
#include "ldlfmon/rv_state.hpp"
#include "ldlfmon/terms.hpp"

// Direct, deliberately naive evaluation of formulas over explicit traces.
// Nothing here touches automata; the automata pipeline is checked against it.

namespace ldlfmon {

/// Propositional satisfaction of p by one interpretation.
bool satisfies(Interpretation i, Prop p, const Alphabet& alphabet);

/// pi, i |= f for a marker-free, meta-free LDLf formula. Positions at or past
/// the end of the trace are allowed.
bool eval_ldlf(const Trace& trace, std::size_t i, Ldlf f, const Alphabet& alphabet);

inline bool eval_ldlf(const Trace& trace, Ldlf f, const Alphabet& alphabet) {
    return eval_ldlf(trace, 0, f, alphabet);
}

/// Positions j such that pi(i, j) is in L(p).
std::set<std::size_t> path_targets(const Trace& trace, std::size_t i, Path p,
                                   const Alphabet& alphabet);

/// pi(i, j) in L(p).
bool path_matches(const Trace& trace, std::size_t i, std::size_t j, Path p,
                  const Alphabet& alphabet);

/// pi, i |= f for LTLf, including the out-of-range cases (i >= length).
bool eval_ltlf(const Trace& trace, std::size_t i, const Ltlf& f, const Alphabet& alphabet);

inline bool eval_ltlf(const Trace& trace, const Ltlf& f, const Alphabet& alphabet) {
    return eval_ltlf(trace, 0, f, alphabet);
}

/// RV state of f on a trace prefix, by enumerating every continuation over the
/// alphabet's letters up to `horizon` extra steps. Exact whenever `horizon` is
/// at least the number of states of the minimal DFA of f minus one; for smaller
/// horizons temp_* verdicts are exact and perm_* verdicts are approximations.
RVState rv_state_oracle(const Trace& trace, Ldlf f, const Alphabet& alphabet,
                        std::size_t horizon);

/// Every trace over the alphabet's letters of length at most max_length, in
/// length-lexicographic order (the empty trace first).
std::vector<Trace> all_traces(const Alphabet& alphabet, std::size_t max_length);

}  // namespace ldlfmon
