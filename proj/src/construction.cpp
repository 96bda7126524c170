#include "ldlfmon/construction.hpp"

#include <deque>
#include <map>
#include <unordered_map>

#include "ldlfmon/delta.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/transform.hpp"

namespace ldlfmon {
namespace {

std::string macro_label(const MacroState& q) {
    std::string out = "{";
    bool first = true;
    for (Ldlf f : q) {
        if (!first) out += ", ";
        first = false;
        out += to_string(f);
    }
    return out + "}";
}

struct PairHash {
    std::size_t operator()(const std::pair<const Node*, std::size_t>& p) const noexcept {
        return std::hash<const void*>{}(p.first) * 31 + p.second;
    }
};

}  // namespace

Nfa ldlf_to_nfa(Ldlf f, const Alphabet& alphabet) {
    const Ldlf root = to_nnf(f);
    Nfa nfa(alphabet);
    std::map<MacroState, StateId> ids;
    std::deque<std::pair<MacroState, StateId>> work;

    auto intern = [&](const MacroState& q) {
        if (auto it = ids.find(q); it != ids.end()) return it->second;
        bool final = true;
        for (Ldlf psi : q) final = final && delta_epsilon(psi);
        StateId s = nfa.add_state(final, macro_label(q));
        ids.emplace(q, s);
        work.emplace_back(q, s);
        return s;
    };

    nfa.set_initial(intern(root.kind() == Kind::Tt ? MacroState{} : MacroState{root}));
    intern(MacroState{});

    std::unordered_map<std::pair<const Node*, std::size_t>, PosBool, PairHash> cache;
    const auto& letters = alphabet.letters();
    while (!work.empty()) {
        auto [q, s] = work.front();
        work.pop_front();
        for (std::size_t l = 0; l < letters.size(); ++l) {
            PosBool all = PosBool::top();
            for (Ldlf psi : q) {
                auto key = std::make_pair(psi.node(), l);
                auto it = cache.find(key);
                if (it == cache.end()) it = cache.emplace(key, delta(psi, letters[l], alphabet)).first;
                all = PosBool::conj(all, it->second);
                if (all.is_bottom()) break;
            }
            for (const MacroState& next : minimal_models(all)) nfa.add_transition(s, l, intern(next));
        }
    }
    return nfa;
}

Dfa ldlf_to_dfa(Ldlf f, const Alphabet& alphabet) { return canonical_dfa(ldlf_to_nfa(f, alphabet)); }

}  // namespace ldlfmon
