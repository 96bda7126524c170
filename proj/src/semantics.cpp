#include "ldlfmon/semantics.hpp"

#include <deque>
#include <stdexcept>

namespace ldlfmon {

bool satisfies(Interpretation i, Prop p, const Alphabet& alphabet) {
    switch (p.kind()) {
        case Kind::PropTrue: return true;
        case Kind::PropFalse: return false;
        case Kind::PropAtom: return (i >> alphabet.index_of(atom_name(p))) & 1U;
        case Kind::PropNot: return !satisfies(i, prop_lhs(p), alphabet);
        case Kind::PropAnd:
            return satisfies(i, prop_lhs(p), alphabet) && satisfies(i, prop_rhs(p), alphabet);
        case Kind::PropOr:
            return satisfies(i, prop_lhs(p), alphabet) || satisfies(i, prop_rhs(p), alphabet);
        default: throw std::invalid_argument("not a propositional formula");
    }
}

bool eval_ldlf(const Trace& trace, std::size_t i, Ldlf f, const Alphabet& alphabet) {
    switch (f.kind()) {
        case Kind::Tt: return true;
        case Kind::Ff: return false;
        case Kind::Not: return !eval_ldlf(trace, i, ldlf_lhs(f), alphabet);
        case Kind::And:
            return eval_ldlf(trace, i, ldlf_lhs(f), alphabet) && eval_ldlf(trace, i, ldlf_rhs(f), alphabet);
        case Kind::Or:
            return eval_ldlf(trace, i, ldlf_lhs(f), alphabet) || eval_ldlf(trace, i, ldlf_rhs(f), alphabet);
        case Kind::Diamond:
            for (std::size_t j : path_targets(trace, i, modal_path(f), alphabet))
                if (eval_ldlf(trace, j, modal_body(f), alphabet)) return true;
            return false;
        case Kind::Box:
            for (std::size_t j : path_targets(trace, i, modal_path(f), alphabet))
                if (!eval_ldlf(trace, j, modal_body(f), alphabet)) return false;
            return true;
        default: throw std::invalid_argument("evaluation of a marker or RV atom");
    }
}

std::set<std::size_t> path_targets(const Trace& trace, std::size_t i, Path p, const Alphabet& alphabet) {
    std::set<std::size_t> out;
    switch (p.kind()) {
        case Kind::Step:
            if (i < trace.size() && satisfies(trace[i], step_prop(p), alphabet)) out.insert(i + 1);
            return out;
        case Kind::Test:
            if (eval_ldlf(trace, i, test_formula(p), alphabet)) out.insert(i);
            return out;
        case Kind::Union:
            out = path_targets(trace, i, path_lhs(p), alphabet);
            out.merge(path_targets(trace, i, path_rhs(p), alphabet));
            return out;
        case Kind::Concat:
            for (std::size_t k : path_targets(trace, i, path_lhs(p), alphabet))
                out.merge(path_targets(trace, k, path_rhs(p), alphabet));
            return out;
        case Kind::Star: {
            // Closure over positions: each position is expanded once, so bodies
            // that match the empty word cannot loop.
            std::deque<std::size_t> work{i};
            out.insert(i);
            while (!work.empty()) {
                std::size_t k = work.front();
                work.pop_front();
                for (std::size_t j : path_targets(trace, k, path_lhs(p), alphabet))
                    if (out.insert(j).second) work.push_back(j);
            }
            return out;
        }
        default: throw std::invalid_argument("evaluation of an RV path atom");
    }
}

bool path_matches(const Trace& trace, std::size_t i, std::size_t j, Path p, const Alphabet& alphabet) {
    return path_targets(trace, i, p, alphabet).count(j) > 0;
}

bool eval_ltlf(const Trace& trace, std::size_t i, const Ltlf& f, const Alphabet& alphabet) {
    using Op = Ltlf::Op;
    const std::size_t n = trace.size();
    auto at = [&](std::size_t k, const Ltlf& g) { return eval_ltlf(trace, k, g, alphabet); };
    switch (f.op()) {
        case Op::prop: return i < n && satisfies(trace[i], f.prop(), alphabet);
        case Op::negation: return !at(i, f.lhs());
        case Op::conjunction: return at(i, f.lhs()) && at(i, f.rhs());
        case Op::disjunction: return at(i, f.lhs()) || at(i, f.rhs());
        case Op::implication: return !at(i, f.lhs()) || at(i, f.rhs());
        case Op::equivalence: return at(i, f.lhs()) == at(i, f.rhs());
        case Op::next: return i + 1 < n && at(i + 1, f.lhs());
        case Op::weak_next: return i + 1 >= n || at(i + 1, f.lhs());
        case Op::eventually:
            for (std::size_t j = i; j < n; ++j)
                if (at(j, f.lhs())) return true;
            return false;
        case Op::always:
            for (std::size_t j = i; j < n; ++j)
                if (!at(j, f.lhs())) return false;
            return true;
        case Op::until:
            for (std::size_t j = i; j < n; ++j) {
                if (at(j, f.rhs())) return true;
                if (!at(j, f.lhs())) return false;
            }
            return false;
        case Op::release:
            for (std::size_t j = i; j < n; ++j) {
                if (!at(j, f.rhs())) return false;
                if (at(j, f.lhs())) return true;
            }
            return true;
    }
    return false;
}

RVState rv_state_oracle(const Trace& trace, Ldlf f, const Alphabet& alphabet, std::size_t horizon) {
    const bool now = eval_ldlf(trace, f, alphabet);
    bool flips = false;
    Trace ext = trace;
    // Depth-first over continuations, stopping at the first one that changes
    // the truth value.
    auto search = [&](auto&& self, std::size_t remaining) -> void {
        if (flips || remaining == 0) return;
        for (Interpretation letter : alphabet.letters()) {
            ext.push_back(letter);
            if (eval_ldlf(ext, f, alphabet) != now) flips = true;
            self(self, remaining - 1);
            ext.pop_back();
            if (flips) return;
        }
    };
    search(search, horizon);
    if (now) return flips ? RVState::temp_true : RVState::perm_true;
    return flips ? RVState::temp_false : RVState::perm_false;
}

std::vector<Trace> all_traces(const Alphabet& alphabet, std::size_t max_length) {
    std::vector<Trace> out{Trace{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
        const std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k)
            for (Interpretation letter : alphabet.letters()) {
                Trace t = out[k];
                t.push_back(letter);
                out.push_back(std::move(t));
            }
        begin = end;
    }
    return out;
}

}  // namespace ldlfmon
