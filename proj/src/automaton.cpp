#include "ldlfmon/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "ldlfmon/errors.hpp"

namespace ldlfmon {

Nfa::Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

StateId Nfa::add_state(bool final, std::string label) {
    auto s = static_cast<StateId>(final_.size());
    final_.push_back(final);
    labels_.push_back(std::move(label));
    delta_.resize(delta_.size() + letter_count());
    return s;
}

void Nfa::add_transition(StateId from, std::size_t letter, StateId to) {
    auto& v = delta_[from * letter_count() + letter];
    auto it = std::lower_bound(v.begin(), v.end(), to);
    if (it == v.end() || *it != to) v.insert(it, to);
}

std::size_t Nfa::transition_count() const {
    std::size_t n = 0;
    for (const auto& v : delta_) n += v.size();
    return n;
}

bool Nfa::is_deterministic() const {
    return std::all_of(delta_.begin(), delta_.end(), [](const auto& v) { return v.size() <= 1; });
}

Dfa::Dfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

StateId Dfa::add_state(bool final, std::string label) {
    auto s = static_cast<StateId>(final_.size());
    final_.push_back(final);
    labels_.push_back(std::move(label));
    delta_.resize(delta_.size() + letter_count(), no_state);
    return s;
}

bool Dfa::is_complete() const {
    return std::find(delta_.begin(), delta_.end(), no_state) == delta_.end();
}

StateId Dfa::run(const Trace& trace) const {
    StateId s = initial_;
    for (Interpretation e : trace) {
        auto l = alphabet_.letter_index(e);
        if (!l) throw AlphabetMismatch("interpretation " + std::to_string(e) + " is not a letter");
        s = next(s, *l);
        if (s == no_state) return no_state;
    }
    return s;
}

Nfa Dfa::to_nfa() const {
    Nfa n(alphabet_);
    for (StateId s = 0; s < state_count(); ++s) n.add_state(final_[s], labels_[s]);
    for (StateId s = 0; s < state_count(); ++s)
        for (std::size_t l = 0; l < letter_count(); ++l)
            if (next(s, l) != no_state) n.add_transition(s, l, next(s, l));
    n.set_initial(initial_);
    return n;
}

Dfa determinize(const Nfa& n) {
    Dfa d(n.alphabet());
    std::map<std::vector<StateId>, StateId> ids;
    std::deque<std::vector<StateId>> work;
    auto intern = [&](std::vector<StateId> subset) {
        if (auto it = ids.find(subset); it != ids.end()) return it->second;
        bool final = std::any_of(subset.begin(), subset.end(), [&](StateId s) { return n.is_final(s); });
        StateId id = d.add_state(final);
        ids.emplace(subset, id);
        work.push_back(std::move(subset));
        return id;
    };
    d.set_initial(intern({n.initial()}));
    while (!work.empty()) {
        std::vector<StateId> subset = std::move(work.front());
        work.pop_front();
        const StateId from = ids.at(subset);
        for (std::size_t l = 0; l < n.letter_count(); ++l) {
            std::vector<StateId> next;
            for (StateId s : subset) {
                const auto& succ = n.successors(s, l);
                next.insert(next.end(), succ.begin(), succ.end());
            }
            if (next.empty()) continue;
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            d.set_transition(from, l, intern(std::move(next)));
        }
    }
    return d;
}

Dfa complete(const Dfa& d) {
    if (d.is_complete()) return d;
    Dfa out = d;
    StateId trap = out.add_state(false, "trap");
    for (StateId s = 0; s < out.state_count(); ++s)
        for (std::size_t l = 0; l < out.letter_count(); ++l)
            if (out.next(s, l) == no_state) out.set_transition(s, l, trap);
    return out;
}

Dfa complement(const Dfa& d) {
    if (!d.is_complete()) throw InvariantViolation("complement of a partial DFA");
    Dfa out = d;
    for (StateId s = 0; s < out.state_count(); ++s) out.set_final(s, !d.is_final(s));
    return out;
}

Dfa product(const Dfa& a0, const Dfa& b0, Acceptance acceptance) {
    if (!(a0.alphabet() == b0.alphabet())) throw AlphabetMismatch("product of automata over different alphabets");
    const Dfa a = complete(a0);
    const Dfa b = complete(b0);
    auto accept = [&](StateId x, StateId y) {
        bool fa = a.is_final(x), fb = b.is_final(y);
        switch (acceptance) {
            case Acceptance::intersection: return fa && fb;
            case Acceptance::union_: return fa || fb;
            case Acceptance::difference: return fa && !fb;
            case Acceptance::symmetric_difference: return fa != fb;
        }
        return false;
    };
    Dfa out(a.alphabet());
    std::map<std::pair<StateId, StateId>, StateId> ids;
    std::deque<std::pair<StateId, StateId>> work;
    auto intern = [&](StateId x, StateId y) {
        auto key = std::make_pair(x, y);
        if (auto it = ids.find(key); it != ids.end()) return it->second;
        StateId id = out.add_state(accept(x, y));
        ids.emplace(key, id);
        work.push_back(key);
        return id;
    };
    out.set_initial(intern(a.initial(), b.initial()));
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        const StateId from = ids.at({x, y});
        for (std::size_t l = 0; l < a.letter_count(); ++l) out.set_transition(from, l, intern(a.next(x, l), b.next(y, l)));
    }
    return out;
}

Dfa minimize(const Dfa& d0) {
    const Dfa d = complete(d0);
    const std::size_t L = d.letter_count();

    // Reachable part, in breadth-first order.
    std::vector<StateId> order{d.initial()};
    std::vector<bool> seen(d.state_count(), false);
    seen[d.initial()] = true;
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t l = 0; l < L; ++l) {
            StateId t = d.next(order[k], l);
            if (!seen[t]) {
                seen[t] = true;
                order.push_back(t);
            }
        }

    // Moore refinement: split classes by the classes of their successors
    // until the partition stops changing.
    std::vector<std::size_t> cls(d.state_count(), 0);
    for (StateId s : order) cls[s] = d.is_final(s) ? 1 : 0;
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> sig_ids;
        std::vector<std::size_t> next_cls(d.state_count(), 0);
        for (StateId s : order) {
            std::vector<std::size_t> sig{cls[s]};
            for (std::size_t l = 0; l < L; ++l) sig.push_back(cls[d.next(s, l)]);
            auto [it, inserted] = sig_ids.emplace(std::move(sig), sig_ids.size());
            next_cls[s] = it->second;
        }
        cls = std::move(next_cls);
        if (sig_ids.size() == count) break;
        count = sig_ids.size();
    }

    // Canonical numbering: breadth-first from the initial class, letters in order.
    std::vector<StateId> number(count, no_state);
    std::vector<StateId> rep;
    Dfa out(d.alphabet());
    auto visit = [&](StateId s) {
        std::size_t c = cls[s];
        if (number[c] == no_state) {
            number[c] = out.add_state(d.is_final(s));
            rep.push_back(s);
        }
        return number[c];
    };
    out.set_initial(visit(d.initial()));
    for (std::size_t k = 0; k < rep.size(); ++k)
        for (std::size_t l = 0; l < L; ++l) out.set_transition(static_cast<StateId>(k), l, visit(d.next(rep[k], l)));
    return out;
}

Dfa canonical_dfa(const Nfa& n) { return minimize(complete(determinize(n))); }

std::vector<bool> reachable_states(const Nfa& n) {
    std::vector<bool> seen(n.state_count(), false);
    if (n.state_count() == 0) return seen;
    std::deque<StateId> work{n.initial()};
    seen[n.initial()] = true;
    while (!work.empty()) {
        StateId s = work.front();
        work.pop_front();
        for (std::size_t l = 0; l < n.letter_count(); ++l)
            for (StateId t : n.successors(s, l))
                if (!seen[t]) {
                    seen[t] = true;
                    work.push_back(t);
                }
    }
    return seen;
}

std::vector<bool> coreachable_states(const Nfa& n, const std::vector<bool>& targets) {
    std::vector<std::vector<StateId>> rev(n.state_count());
    for (StateId s = 0; s < n.state_count(); ++s)
        for (std::size_t l = 0; l < n.letter_count(); ++l)
            for (StateId t : n.successors(s, l)) rev[t].push_back(s);
    std::vector<bool> seen(n.state_count(), false);
    std::deque<StateId> work;
    for (StateId s = 0; s < n.state_count(); ++s)
        if (targets[s]) {
            seen[s] = true;
            work.push_back(s);
        }
    while (!work.empty()) {
        StateId t = work.front();
        work.pop_front();
        for (StateId s : rev[t])
            if (!seen[s]) {
                seen[s] = true;
                work.push_back(s);
            }
    }
    return seen;
}

namespace {
std::vector<bool> finals_of(const Nfa& n) {
    std::vector<bool> f(n.state_count());
    for (StateId s = 0; s < n.state_count(); ++s) f[s] = n.is_final(s);
    return f;
}
}  // namespace

Nfa prefix_closure(const Nfa& n) {
    Nfa out = n;
    auto co = coreachable_states(n, finals_of(n));
    for (StateId s = 0; s < n.state_count(); ++s) out.set_final(s, co[s]);
    return out;
}

Dfa prefix_closure(const Dfa& d) {
    Dfa out = d;
    auto co = coreachable_states(d.to_nfa(), finals_of(d.to_nfa()));
    for (StateId s = 0; s < d.state_count(); ++s) out.set_final(s, co[s]);
    return out;
}

Nfa trim(const Nfa& n) {
    auto reach = reachable_states(n);
    auto co = coreachable_states(n, finals_of(n));
    std::vector<StateId> map(n.state_count(), no_state);
    Nfa out(n.alphabet());
    for (StateId s = 0; s < n.state_count(); ++s)
        if ((reach[s] && co[s]) || s == n.initial()) map[s] = out.add_state(n.is_final(s), n.label(s));
    for (StateId s = 0; s < n.state_count(); ++s) {
        if (map[s] == no_state) continue;
        for (std::size_t l = 0; l < n.letter_count(); ++l)
            for (StateId t : n.successors(s, l))
                if (map[t] != no_state) out.add_transition(map[s], l, map[t]);
    }
    out.set_initial(map[n.initial()]);
    return out;
}

bool is_empty(const Nfa& n) {
    auto reach = reachable_states(n);
    for (StateId s = 0; s < n.state_count(); ++s)
        if (reach[s] && n.is_final(s)) return false;
    return true;
}

bool is_empty(const Dfa& d) { return is_empty(d.to_nfa()); }

bool accepts(const Dfa& d, const Trace& trace) {
    StateId s = d.run(trace);
    return s != no_state && d.is_final(s);
}

bool accepts(const Nfa& n, const Trace& trace) {
    std::vector<StateId> current{n.initial()};
    for (Interpretation e : trace) {
        auto l = n.alphabet().letter_index(e);
        if (!l) throw AlphabetMismatch("interpretation " + std::to_string(e) + " is not a letter");
        std::vector<StateId> next;
        for (StateId s : current) {
            const auto& succ = n.successors(s, *l);
            next.insert(next.end(), succ.begin(), succ.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    return std::any_of(current.begin(), current.end(), [&](StateId s) { return n.is_final(s); });
}

bool equivalent(const Dfa& a, const Dfa& b) {
    return is_empty(product(a, b, Acceptance::symmetric_difference));
}

bool equivalent(const Nfa& a, const Nfa& b) { return equivalent(determinize(a), determinize(b)); }

std::optional<Trace> shortest_accepted(const Dfa& d) {
    if (d.state_count() == 0) return std::nullopt;
    std::vector<std::pair<StateId, std::size_t>> parent(d.state_count(), {no_state, 0});
    std::vector<bool> seen(d.state_count(), false);
    std::deque<StateId> work{d.initial()};
    seen[d.initial()] = true;
    while (!work.empty()) {
        StateId s = work.front();
        work.pop_front();
        if (d.is_final(s)) {
            Trace t;
            for (StateId x = s; x != d.initial(); x = parent[x].first)
                t.push_back(d.alphabet().letters()[parent[x].second]);
            std::reverse(t.begin(), t.end());
            return t;
        }
        for (std::size_t l = 0; l < d.letter_count(); ++l) {
            StateId t = d.next(s, l);
            if (t != no_state && !seen[t]) {
                seen[t] = true;
                parent[t] = {s, l};
                work.push_back(t);
            }
        }
    }
    return std::nullopt;
}

}  // namespace ldlfmon
