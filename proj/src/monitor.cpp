#include "ldlfmon/monitor.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "ldlfmon/construction.hpp"
#include "ldlfmon/errors.hpp"
#include "ldlfmon/regexfold.hpp"

namespace ldlfmon {

ColoredDfa::ColoredDfa(Dfa dfa, std::vector<RVState> colors) : dfa_(std::move(dfa)), colors_(std::move(colors)) {
    if (colors_.size() != dfa_.state_count()) throw InvariantViolation("one color per state expected");
}

namespace {

RVState classify(bool final, bool reaches_final, bool reaches_nonfinal) {
    if (final) return reaches_nonfinal ? RVState::temp_true : RVState::perm_true;
    return reaches_final ? RVState::temp_false : RVState::perm_false;
}

}  // namespace

ColoredDfa color(const Dfa& d) {
    if (!d.is_complete()) throw InvariantViolation("coloring needs a complete DFA");
    const Nfa n = d.to_nfa();
    std::vector<bool> finals(d.state_count()), nonfinals(d.state_count());
    for (StateId s = 0; s < d.state_count(); ++s) {
        finals[s] = d.is_final(s);
        nonfinals[s] = !d.is_final(s);
    }
    const auto to_final = coreachable_states(n, finals);
    const auto to_nonfinal = coreachable_states(n, nonfinals);
    std::vector<RVState> colors(d.state_count());
    for (StateId s = 0; s < d.state_count(); ++s) colors[s] = classify(d.is_final(s), to_final[s], to_nonfinal[s]);

    // Permanent colors must be closed under successors.
    for (StateId s = 0; s < d.state_count(); ++s)
        if (is_permanent(colors[s]))
            for (std::size_t l = 0; l < d.letter_count(); ++l)
                if (colors[d.next(s, l)] != colors[s]) throw InvariantViolation("unstable permanent color");
    return ColoredDfa(d, std::move(colors));
}

ColoredDfa colored_automaton(Ldlf f, const Alphabet& alphabet) { return color(ldlf_to_dfa(f, alphabet)); }

Ldlf rv_formula(Ldlf f, RVState s, const Alphabet& alphabet) {
    const Ldlf pref_f = diamond(pref_regex(f, alphabet), at_end());
    const Ldlf pref_not_f = diamond(pref_regex(lnot(f), alphabet), at_end());
    switch (s) {
        case RVState::temp_true: return land(f, pref_not_f);
        case RVState::temp_false: return land(lnot(f), pref_f);
        case RVState::perm_true: return land(pref_f, lnot(pref_not_f));
        case RVState::perm_false: return land(pref_not_f, lnot(pref_f));
    }
    throw InvariantViolation("unknown RV state");
}

bool is_shape_bijection(const Nfa& a, const Nfa& b, const std::vector<StateId>& h) {
    if (!(a.alphabet() == b.alphabet())) return false;
    if (a.state_count() != b.state_count() || h.size() != a.state_count()) return false;
    std::vector<bool> hit(b.state_count(), false);
    for (StateId t : h) {
        if (t >= b.state_count() || hit[t]) return false;
        hit[t] = true;
    }
    if (h[a.initial()] != b.initial()) return false;
    for (StateId s = 0; s < a.state_count(); ++s)
        for (std::size_t l = 0; l < a.letter_count(); ++l) {
            std::vector<StateId> image;
            for (StateId t : a.successors(s, l)) image.push_back(h[t]);
            std::sort(image.begin(), image.end());
            if (image != b.successors(h[s], l)) return false;
        }
    return true;
}

namespace {

class ShapeSearch {
public:
    ShapeSearch(const Nfa& a, const Nfa& b) : a_(a), b_(b) {}

    std::optional<std::vector<StateId>> run() {
        std::vector<StateId> h(a_.state_count(), no_state), inv(b_.state_count(), no_state);
        if (!assign(h, inv, a_.initial(), b_.initial())) return std::nullopt;
        if (solve(h, inv)) return result_;
        return std::nullopt;
    }

private:
    static bool assign(std::vector<StateId>& h, std::vector<StateId>& inv, StateId s, StateId t) {
        if (h[s] == t && inv[t] == s) return true;
        if (h[s] != no_state || inv[t] != no_state) return false;
        h[s] = t;
        inv[t] = s;
        return true;
    }

    // Propagates forced pairs; reports the first choice point left open.
    bool propagate(std::vector<StateId>& h, std::vector<StateId>& inv,
                   std::optional<std::pair<std::vector<StateId>, std::vector<StateId>>>& choice) {
        bool changed = true;
        while (changed) {
            changed = false;
            choice.reset();
            for (StateId s = 0; s < a_.state_count(); ++s) {
                if (h[s] == no_state) continue;
                for (std::size_t l = 0; l < a_.letter_count(); ++l) {
                    const auto& A = a_.successors(s, l);
                    const auto& B = b_.successors(h[s], l);
                    if (A.size() != B.size()) return false;
                    std::vector<StateId> free_a, free_b;
                    for (StateId x : A) {
                        if (h[x] == no_state) free_a.push_back(x);
                        else if (!std::binary_search(B.begin(), B.end(), h[x])) return false;
                    }
                    for (StateId y : B)
                        if (inv[y] == no_state) free_b.push_back(y);
                        else if (!std::binary_search(A.begin(), A.end(), inv[y])) return false;
                    if (free_a.size() != free_b.size()) return false;
                    if (free_a.size() == 1) {
                        if (!assign(h, inv, free_a[0], free_b[0])) return false;
                        changed = true;
                    } else if (free_a.size() > 1 && !choice) {
                        choice.emplace(free_a, free_b);
                    }
                }
            }
        }
        return true;
    }

    bool solve(std::vector<StateId> h, std::vector<StateId> inv) {
        if (++steps_ > 200000) return false;
        std::optional<std::pair<std::vector<StateId>, std::vector<StateId>>> choice;
        if (!propagate(h, inv, choice)) return false;
        std::vector<StateId> candidates_a, candidates_b;
        if (choice) {
            candidates_a = {choice->first.front()};
            candidates_b = choice->second;
        } else {
            for (StateId s = 0; s < a_.state_count(); ++s)
                if (h[s] == no_state) {
                    candidates_a = {s};
                    break;
                }
            if (candidates_a.empty()) {
                if (!is_shape_bijection(a_, b_, h)) return false;
                result_ = h;
                return true;
            }
            for (StateId t = 0; t < b_.state_count(); ++t)
                if (inv[t] == no_state) candidates_b.push_back(t);
        }
        for (StateId t : candidates_b) {
            auto h2 = h;
            auto inv2 = inv;
            if (assign(h2, inv2, candidates_a.front(), t) && solve(std::move(h2), std::move(inv2))) return true;
        }
        return false;
    }

    const Nfa& a_;
    const Nfa& b_;
    std::vector<StateId> result_;
    std::size_t steps_ = 0;
};

}  // namespace

std::optional<std::vector<StateId>> shape_equivalent(const Nfa& a, const Nfa& b) {
    if (!(a.alphabet() == b.alphabet())) return std::nullopt;
    if (a.state_count() != b.state_count() || a.transition_count() != b.transition_count()) return std::nullopt;
    if (a.state_count() == 0) return std::vector<StateId>{};
    return ShapeSearch(a, b).run();
}

Monitor::Monitor(std::shared_ptr<const ColoredDfa> automaton) : colored_(std::move(automaton)) {
    if (!colored_) throw std::invalid_argument("monitor without automaton");
    reset();
}

Monitor Monitor::lazy(std::shared_ptr<const Dfa> dfa) {
    if (!dfa) throw std::invalid_argument("monitor without automaton");
    if (!dfa->is_complete()) throw InvariantViolation("monitoring needs a complete DFA");
    Monitor m;
    m.raw_ = std::move(dfa);
    m.lazy_ = true;
    m.lazy_colors_.assign(m.raw_->state_count(), std::nullopt);
    m.reset();
    return m;
}

const Dfa& Monitor::dfa() const { return colored_ ? colored_->dfa() : *raw_; }

void Monitor::reset() {
    current_ = dfa().initial();
    history_.assign(1, current_rv());
}

RVState Monitor::color_of(StateId s) const {
    if (!lazy_) return colored_->color(s);
    if (lazy_colors_[s]) return *lazy_colors_[s];
    // Forward search from s only, the on-demand counterpart of the eager
    // reverse sweep.
    const Dfa& d = *raw_;
    std::vector<bool> seen(d.state_count(), false);
    std::deque<StateId> work{s};
    seen[s] = true;
    bool reaches_final = false, reaches_nonfinal = false;
    while (!work.empty()) {
        StateId x = work.front();
        work.pop_front();
        (d.is_final(x) ? reaches_final : reaches_nonfinal) = true;
        for (std::size_t l = 0; l < d.letter_count(); ++l) {
            StateId y = d.next(x, l);
            if (!seen[y]) {
                seen[y] = true;
                work.push_back(y);
            }
        }
    }
    RVState c = classify(d.is_final(s), reaches_final, reaches_nonfinal);
    lazy_colors_[s] = c;
    return c;
}

RVState Monitor::current_rv() const { return color_of(current_); }

RVState Monitor::step(Interpretation e) {
    auto l = alphabet().letter_index(e);
    if (!l) throw UnknownSymbol(alphabet().format(e));
    current_ = dfa().next(current_, *l);
    RVState c = current_rv();
    history_.push_back(c);
    return c;
}

RVState Monitor::step_task(std::string_view task) { return step(alphabet().task(task)); }

std::vector<Interpretation> Monitor::forbidden_symbols() const {
    const RVState now = current_rv();
    std::vector<Interpretation> out;
    if (now == RVState::perm_true) return out;
    const auto& letters = alphabet().letters();
    for (std::size_t l = 0; l < letters.size(); ++l)
        if (now == RVState::perm_false || color_of(dfa().next(current_, l)) == RVState::perm_false)
            out.push_back(letters[l]);
    return out;
}

Monitor make_monitor(Ldlf f, const Alphabet& alphabet, Monitor::ReachMode mode) {
    Dfa d = ldlf_to_dfa(f, alphabet);
    if (mode == Monitor::ReachMode::lazy) return Monitor::lazy(std::make_shared<const Dfa>(std::move(d)));
    return Monitor(std::make_shared<const ColoredDfa>(color(d)));
}

}  // namespace ldlfmon
