#pragma once

#include "ldlfmon/automaton.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon {

/// Forward construction of the NFA of an LDLf formula. States are macro-states
/// (sets of quoted subformulas, read conjunctively); the initial state is
/// {nnf(f)} and the empty macro-state is final and absorbing. A macro-state
/// steps on a letter to each minimal model of the conjunction of delta over its
/// members, and is final iff every member has delta_epsilon true.
///
/// State labels carry the printed macro-state. f must be marker-free and
/// meta-free.
Nfa ldlf_to_nfa(Ldlf f, const Alphabet& alphabet);

/// canonical_dfa(ldlf_to_nfa(f)): minimal, complete, canonically numbered.
Dfa ldlf_to_dfa(Ldlf f, const Alphabet& alphabet);

}  // namespace ldlfmon
