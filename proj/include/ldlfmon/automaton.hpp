#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldlfmon/alphabet.hpp"

namespace ldlfmon {

using StateId = std::uint32_t;
inline constexpr StateId no_state = static_cast<StateId>(-1);

/// Nondeterministic automaton over the letters of an alphabet. Transitions
/// are stored per state and letter index as a sorted list of successors.
class Nfa {
public:
    Nfa() = default;
    explicit Nfa(Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return final_.size(); }
    std::size_t letter_count() const noexcept { return alphabet_.letter_count(); }

    StateId add_state(bool final = false, std::string label = {});
    void add_transition(StateId from, std::size_t letter, StateId to);

    StateId initial() const noexcept { return initial_; }
    void set_initial(StateId s) { initial_ = s; }
    bool is_final(StateId s) const { return final_[s]; }
    void set_final(StateId s, bool f) { final_[s] = f; }

    const std::vector<StateId>& successors(StateId s, std::size_t letter) const {
        return delta_[s * letter_count() + letter];
    }
    const std::string& label(StateId s) const { return labels_[s]; }
    void set_label(StateId s, std::string label) { labels_[s] = std::move(label); }

    std::size_t transition_count() const;
    /// At most one successor per state and letter.
    bool is_deterministic() const;

private:
    Alphabet alphabet_;
    StateId initial_ = 0;
    std::vector<bool> final_;
    std::vector<std::string> labels_;
    std::vector<std::vector<StateId>> delta_;
};

/// Deterministic automaton; a missing transition is `no_state`. The
/// automata handed to monitors are always complete.
class Dfa {
public:
    Dfa() = default;
    explicit Dfa(Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return final_.size(); }
    std::size_t letter_count() const noexcept { return alphabet_.letter_count(); }

    StateId add_state(bool final = false, std::string label = {});
    void set_transition(StateId from, std::size_t letter, StateId to) {
        delta_[from * letter_count() + letter] = to;
    }
    StateId next(StateId s, std::size_t letter) const { return delta_[s * letter_count() + letter]; }

    StateId initial() const noexcept { return initial_; }
    void set_initial(StateId s) { initial_ = s; }
    bool is_final(StateId s) const { return final_[s]; }
    void set_final(StateId s, bool f) { final_[s] = f; }
    const std::string& label(StateId s) const { return labels_[s]; }
    void set_label(StateId s, std::string label) { labels_[s] = std::move(label); }

    bool is_complete() const;
    /// State reached from the initial state, or no_state if the run blocks.
    StateId run(const Trace& trace) const;

    Nfa to_nfa() const;

private:
    Alphabet alphabet_;
    StateId initial_ = 0;
    std::vector<bool> final_;
    std::vector<std::string> labels_;
    std::vector<StateId> delta_;
};

/// How a product combines the acceptance of its two components.
enum class Acceptance : std::uint8_t { intersection, union_, difference, symmetric_difference };

/// Subset construction from the initial state. The empty subset is dropped,
/// so the result may be partial; `complete` adds the trap.
Dfa determinize(const Nfa& n);
/// Adds a non-final trap state if some transition is missing.
Dfa complete(const Dfa& d);
/// Swaps final and non-final states. Throws InvariantViolation when d is partial.
Dfa complement(const Dfa& d);
/// Synchronized product restricted to reachable pairs. Throws AlphabetMismatch.
Dfa product(const Dfa& a, const Dfa& b, Acceptance acceptance = Acceptance::intersection);
/// Minimal complete DFA, states numbered breadth-first from the initial state
/// in letter order, so that equal languages give identical automata.
Dfa minimize(const Dfa& d);
/// determinize + complete + minimize.
Dfa canonical_dfa(const Nfa& n);

/// Same states and transitions; final = can reach an original final state.
Nfa prefix_closure(const Nfa& n);
Dfa prefix_closure(const Dfa& d);
/// Restricts to states that are reachable and co-reachable; the initial state
/// is always kept.
Nfa trim(const Nfa& n);

std::vector<bool> reachable_states(const Nfa& n);
/// States from which some state in `targets` is reachable (length >= 0).
std::vector<bool> coreachable_states(const Nfa& n, const std::vector<bool>& targets);

bool is_empty(const Nfa& n);
bool is_empty(const Dfa& d);
bool accepts(const Dfa& d, const Trace& trace);
bool accepts(const Nfa& n, const Trace& trace);
/// Exact language equality via emptiness of the symmetric difference.
bool equivalent(const Dfa& a, const Dfa& b);
bool equivalent(const Nfa& a, const Nfa& b);

/// Shortest accepted trace, if any.
std::optional<Trace> shortest_accepted(const Dfa& d);

}  // namespace ldlfmon
