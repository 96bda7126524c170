#include "ldlfmon/regexfold.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ldlfmon/construction.hpp"
#include "ldlfmon/monitor.hpp"

namespace ldlfmon {

Path regex_empty() { return step(prop_false()); }
Path regex_epsilon() { return star(step(prop_false())); }
bool is_regex_empty(Path p) { return p == regex_empty(); }
bool is_regex_epsilon(Path p) { return p == regex_epsilon(); }

Path regex_alt(Path a, Path b) {
    if (is_regex_empty(a)) return b;
    if (is_regex_empty(b)) return a;
    if (a == b) return a;
    if (is_regex_epsilon(a) && b.kind() == Kind::Star) return b;
    if (is_regex_epsilon(b) && a.kind() == Kind::Star) return a;
    return alt(a, b);
}

Path regex_seq(Path a, Path b) {
    if (is_regex_empty(a) || is_regex_empty(b)) return regex_empty();
    if (is_regex_epsilon(a)) return b;
    if (is_regex_epsilon(b)) return a;
    return seq(a, b);
}

Path regex_star(Path p) {
    if (is_regex_empty(p) || is_regex_epsilon(p)) return regex_epsilon();
    if (p.kind() == Kind::Star) return p;
    return star(p);
}

namespace {

struct Cube {
    Interpretation care;
    Interpretation value;
    bool operator<(const Cube& o) const { return care != o.care ? care < o.care : value < o.value; }
    bool operator==(const Cube& o) const { return care == o.care && value == o.value; }
    bool covers(Interpretation i) const { return (i & care) == value; }
};

Prop cube_to_prop(const Cube& c, const Alphabet& alphabet) {
    Prop out;
    for (std::size_t b = 0; b < alphabet.size(); ++b) {
        const Interpretation bit = Interpretation{1} << b;
        if (!(c.care & bit)) continue;
        Prop lit = prop_atom(alphabet.props()[b]);
        if (!(c.value & bit)) lit = prop_not(lit);
        out = out.valid() ? prop_and(out, lit) : lit;
    }
    return out.valid() ? out : prop_true();
}

Prop disjunction(const std::vector<Prop>& parts) {
    Prop out;
    for (Prop p : parts) out = out.valid() ? prop_or(out, p) : p;
    return out;
}

// Prime implicants by iterated merging, then a greedy cover.
Prop full_guard(const std::set<Interpretation>& target, const Alphabet& alphabet) {
    const Interpretation all = (Interpretation{1} << alphabet.size()) - 1;
    std::set<Cube> level;
    for (Interpretation i : target) level.insert({all, i});
    std::vector<Cube> primes;
    while (!level.empty()) {
        std::set<Cube> next;
        std::set<Cube> merged;
        for (auto x = level.begin(); x != level.end(); ++x)
            for (auto y = std::next(x); y != level.end(); ++y) {
                if (x->care != y->care) continue;
                Interpretation diff = x->value ^ y->value;
                if (diff == 0 || (diff & (diff - 1)) != 0) continue;
                next.insert({x->care & ~diff, x->value & ~diff});
                merged.insert(*x);
                merged.insert(*y);
            }
        for (const Cube& c : level)
            if (!merged.count(c)) primes.push_back(c);
        level = std::move(next);
    }
    std::set<Interpretation> uncovered = target;
    std::vector<Prop> parts;
    while (!uncovered.empty()) {
        const Cube* best = nullptr;
        std::size_t best_gain = 0;
        for (const Cube& c : primes) {
            std::size_t gain = 0;
            for (Interpretation i : uncovered) gain += c.covers(i);
            if (gain > best_gain ||
                (gain == best_gain && best && __builtin_popcountll(c.care) < __builtin_popcountll(best->care))) {
                best = &c;
                best_gain = gain;
            }
        }
        for (auto it = uncovered.begin(); it != uncovered.end();)
            it = best->covers(*it) ? uncovered.erase(it) : std::next(it);
        parts.push_back(cube_to_prop(*best, alphabet));
    }
    return disjunction(parts);
}

Prop task_guard(const std::set<Interpretation>& target, const Alphabet& alphabet) {
    std::vector<Prop> positives, negatives;
    for (std::size_t b = 0; b < alphabet.size(); ++b) {
        Prop atom = prop_atom(alphabet.props()[b]);
        if (target.count(Interpretation{1} << b)) positives.push_back(atom);
        else negatives.push_back(prop_not(atom));
    }
    if (negatives.size() < positives.size()) {
        Prop out;
        for (Prop p : negatives) out = out.valid() ? prop_and(out, p) : p;
        return out;
    }
    return disjunction(positives);
}

}  // namespace

Prop compress_guard(const std::vector<Interpretation>& letters, const Alphabet& alphabet) {
    std::set<Interpretation> target;
    for (Interpretation i : letters)
        if (alphabet.letter_index(i)) target.insert(i);
    if (target.empty()) return prop_false();
    if (target.size() == alphabet.letter_count()) return prop_true();
    if (alphabet.mode() == Alphabet::Mode::tasks) return task_guard(target, alphabet);
    return full_guard(target, alphabet);
}

Path automaton_to_regex(const Nfa& input) {
    const Nfa n = trim(input);
    const auto N = static_cast<StateId>(n.state_count());
    const StateId start = N, accept = N + 1;
    std::map<std::pair<StateId, StateId>, Path> edge;
    auto add = [&](StateId p, StateId q, Path r) {
        auto [it, fresh] = edge.emplace(std::make_pair(p, q), r);
        if (!fresh) it->second = regex_alt(it->second, r);
    };

    add(start, n.initial(), regex_epsilon());
    for (StateId s = 0; s < N; ++s) {
        if (n.is_final(s)) add(s, accept, regex_epsilon());
        std::map<StateId, std::vector<Interpretation>> by_target;
        for (std::size_t l = 0; l < n.letter_count(); ++l)
            for (StateId t : n.successors(s, l)) by_target[t].push_back(n.alphabet().letters()[l]);
        for (const auto& [t, letters] : by_target) add(s, t, step(compress_guard(letters, n.alphabet())));
    }

    std::vector<bool> gone(N, false);
    for (StateId round = 0; round < N; ++round) {
        StateId victim = no_state;
        std::size_t best = 0;
        for (StateId q = 0; q < N; ++q) {
            if (gone[q]) continue;
            std::size_t in = 0, out = 0;
            for (const auto& [key, r] : edge) {
                if (key.first == key.second) continue;
                in += key.second == q;
                out += key.first == q;
            }
            if (victim == no_state || in * out < best) {
                victim = q;
                best = in * out;
            }
        }
        gone[victim] = true;
        Path loop = regex_epsilon();
        if (auto it = edge.find({victim, victim}); it != edge.end()) {
            loop = regex_star(it->second);
            edge.erase(it);
        }
        std::vector<std::pair<StateId, Path>> ins, outs;
        for (const auto& [key, r] : edge) {
            if (key.second == victim) ins.emplace_back(key.first, r);
            if (key.first == victim) outs.emplace_back(key.second, r);
        }
        for (auto it = edge.begin(); it != edge.end();)
            it = (it->first.first == victim || it->first.second == victim) ? edge.erase(it) : std::next(it);
        for (const auto& [p, rin] : ins)
            for (const auto& [r, rout] : outs) add(p, r, regex_seq(regex_seq(rin, loop), rout));
    }
    if (auto it = edge.find({start, accept}); it != edge.end()) return it->second;
    return regex_empty();
}

Path pref_regex(Ldlf f, const Alphabet& alphabet) {
    return automaton_to_regex(prefix_closure(ldlf_to_dfa(f, alphabet)).to_nfa());
}

Path regex_for_rv(Ldlf f, RVState s, const Alphabet& alphabet) {
    const ColoredDfa c = colored_automaton(f, alphabet);
    Nfa n = c.dfa().to_nfa();
    for (StateId q = 0; q < n.state_count(); ++q) n.set_final(q, c.color(q) == s);
    return automaton_to_regex(n);
}

}  // namespace ldlfmon
