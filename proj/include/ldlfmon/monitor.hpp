#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ldlfmon/automaton.hpp"
#include "ldlfmon/rv_state.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon {

/// Complete DFA whose states each carry the RV state of the prefixes ending in it.
class ColoredDfa {
public:
    ColoredDfa(Dfa dfa, std::vector<RVState> colors);

    const Dfa& dfa() const noexcept { return dfa_; }
    const Alphabet& alphabet() const noexcept { return dfa_.alphabet(); }
    RVState color(StateId s) const { return colors_[s]; }
    const std::vector<RVState>& colors() const noexcept { return colors_; }
    std::size_t state_count() const noexcept { return dfa_.state_count(); }

private:
    Dfa dfa_;
    std::vector<RVState> colors_;
};

/// Colors every state of a complete DFA by what it can reach (itself
/// included):
///   final,     reaches a non-final -> temp_true
///   final,     reaches only finals -> perm_true
///   non-final, reaches a final     -> temp_false
///   non-final, reaches no final    -> perm_false
/// Throws InvariantViolation if d is partial.
ColoredDfa color(const Dfa& d);

/// Colored minimal DFA of a formula.
ColoredDfa colored_automaton(Ldlf f, const Alphabet& alphabet);

/// The LDLf formula true exactly on the traces that put f in RV state s:
///   temp_true  : f && <pref(!f)>end
///   temp_false : !f && <pref(f)>end
///   perm_true  : <pref(f)>end && !<pref(!f)>end
///   perm_false : <pref(!f)>end && !<pref(f)>end
/// where pref(g) is the regular expression of the possibly-good prefixes of g.
/// The expressions are folded over the alphabet's letters, so the result is
/// meaningful for traces over that alphabet.
Ldlf rv_formula(Ldlf f, RVState s, const Alphabet& alphabet);

/// A bijection between the states of two automata preserving the initial
/// state and all transitions in both directions; final states are ignored.
/// `mapping[s]` is the image of state s of `a`.
std::optional<std::vector<StateId>> shape_equivalent(const Nfa& a, const Nfa& b);

/// Whether `mapping` witnesses a ~ b.
bool is_shape_bijection(const Nfa& a, const Nfa& b, const std::vector<StateId>& mapping);

/// Online monitor: a colored automaton with a cursor.
class Monitor {
public:
    enum class ReachMode : std::uint8_t { eager, lazy };

    explicit Monitor(std::shared_ptr<const ColoredDfa> automaton);
    /// Monitor over the raw DFA that computes reachability per visited state on
    /// demand instead of using precomputed colors.
    static Monitor lazy(std::shared_ptr<const Dfa> dfa);

    /// Advances by one letter and returns the new RV state.
    /// Throws UnknownSymbol if e is not a letter of the alphabet.
    RVState step(Interpretation e);
    /// Steps on the singleton letter of a task.
    RVState step_task(std::string_view task);

    RVState current_rv() const;
    StateId current_state() const noexcept { return current_; }
    const std::vector<RVState>& history() const noexcept { return history_; }
    const Alphabet& alphabet() const noexcept { return dfa().alphabet(); }
    const Dfa& dfa() const;
    ReachMode mode() const noexcept { return lazy_ ? ReachMode::lazy : ReachMode::eager; }

    /// Whether the trace seen so far satisfies the formula, as judged when the
    /// trace is declared complete.
    bool accepting() const { return dfa().is_final(current_); }

    /// Letters whose one-step successor is colored perm_false. Empty when the
    /// current state is perm_true, every letter when it is perm_false.
    std::vector<Interpretation> forbidden_symbols() const;

    /// RV state of an arbitrary automaton state under this monitor's mode.
    RVState color_of(StateId s) const;

    void reset();

private:
    Monitor() = default;

    std::shared_ptr<const ColoredDfa> colored_;
    std::shared_ptr<const Dfa> raw_;
    bool lazy_ = false;
    mutable std::vector<std::optional<RVState>> lazy_colors_;
    StateId current_ = 0;
    std::vector<RVState> history_;
};

/// Monitor for a formula, using the colored minimal DFA.
Monitor make_monitor(Ldlf f, const Alphabet& alphabet,
                     Monitor::ReachMode mode = Monitor::ReachMode::eager);

}  // namespace ldlfmon
