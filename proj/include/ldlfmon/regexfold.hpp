#pragma once

#include <vector>

#include "ldlfmon/automaton.hpp"
#include "ldlfmon/rv_state.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon {

/// A propositional formula true on exactly the given letters, among the
/// letters of the alphabet. Letters outside the alphabet's letter set are
/// unconstrained. Output is a small sum of cubes found greedily.
Prop compress_guard(const std::vector<Interpretation>& letters, const Alphabet& alphabet);

/// Test-free regular expression for the language of n, by state elimination.
/// Empty language gives the step `false`; the empty word alone gives `false*`.
Path automaton_to_regex(const Nfa& n);

/// Regular expression of the possibly-good prefixes of f:
/// the traces that can still be extended into a model of f.
Path pref_regex(Ldlf f, const Alphabet& alphabet);

/// Regular expression of the traces that put f in RV state s.
Path regex_for_rv(Ldlf f, RVState s, const Alphabet& alphabet);

/// Smart constructors used by the folding: they drop neutral elements,
/// absorb the empty language and merge duplicates, nothing more.
Path regex_empty();
Path regex_epsilon();
bool is_regex_empty(Path p);
bool is_regex_epsilon(Path p);
Path regex_alt(Path a, Path b);
Path regex_seq(Path a, Path b);
Path regex_star(Path p);

}  // namespace ldlfmon
