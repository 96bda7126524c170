#include "ldlfmon/delta.hpp"

#include <algorithm>
#include <stdexcept>

#include "ldlfmon/semantics.hpp"
#include "ldlfmon/transform.hpp"

namespace ldlfmon {

PosBool PosBool::top() {
    static const PosBool t = [] {
        PosBool p;
        p.node_ = std::make_shared<const Node>(Node{Op::top, Ldlf{}, nullptr, nullptr});
        return p;
    }();
    return t;
}

PosBool PosBool::bottom() {
    static const PosBool b = [] {
        PosBool p;
        p.node_ = std::make_shared<const Node>(Node{Op::bottom, Ldlf{}, nullptr, nullptr});
        return p;
    }();
    return b;
}

PosBool PosBool::atom(Ldlf f) {
    if (f.kind() == Kind::Tt) return top();
    if (f.kind() == Kind::Ff) return bottom();
    PosBool p;
    p.node_ = std::make_shared<const Node>(Node{Op::atom, f, nullptr, nullptr});
    return p;
}

PosBool PosBool::conj(PosBool a, PosBool b) {
    if (a.is_bottom() || b.is_bottom()) return bottom();
    if (a.is_top()) return b;
    if (b.is_top()) return a;
    if (a.node_ == b.node_) return a;
    PosBool p;
    p.node_ = std::make_shared<const Node>(Node{Op::conj, Ldlf{}, std::make_shared<const PosBool>(std::move(a)),
                                                std::make_shared<const PosBool>(std::move(b))});
    return p;
}

PosBool PosBool::disj(PosBool a, PosBool b) {
    if (a.is_top() || b.is_top()) return top();
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    if (a.node_ == b.node_) return a;
    PosBool p;
    p.node_ = std::make_shared<const Node>(Node{Op::disj, Ldlf{}, std::make_shared<const PosBool>(std::move(a)),
                                                std::make_shared<const PosBool>(std::move(b))});
    return p;
}

bool PosBool::satisfied_by(const std::set<Ldlf>& atoms) const {
    switch (op()) {
        case Op::top: return true;
        case Op::bottom: return false;
        case Op::atom: return atoms.count(formula()) > 0;
        case Op::conj: return lhs().satisfied_by(atoms) && rhs().satisfied_by(atoms);
        case Op::disj: return lhs().satisfied_by(atoms) || rhs().satisfied_by(atoms);
    }
    return false;
}

std::set<Ldlf> PosBool::atoms() const {
    std::set<Ldlf> out;
    auto walk = [&](auto&& self, const PosBool& p) -> void {
        switch (p.op()) {
            case Op::atom: out.insert(p.formula()); break;
            case Op::conj:
            case Op::disj:
                self(self, p.lhs());
                self(self, p.rhs());
                break;
            default: break;
        }
    };
    walk(walk, *this);
    return out;
}

namespace {

class DeltaComputer {
public:
    DeltaComputer(Interpretation letter, const Alphabet& alphabet) : letter_(letter), alphabet_(alphabet) {}

    PosBool operator()(Ldlf f) {
        switch (f.kind()) {
            case Kind::Tt:
            case Kind::MarkT: return PosBool::top();
            case Kind::Ff:
            case Kind::MarkF: return PosBool::bottom();
            case Kind::And: return PosBool::conj((*this)(ldlf_lhs(f)), (*this)(ldlf_rhs(f)));
            case Kind::Or: return PosBool::disj((*this)(ldlf_lhs(f)), (*this)(ldlf_rhs(f)));
            case Kind::Diamond: return diamond_case(modal_path(f), modal_body(f));
            case Kind::Box: return box_case(modal_path(f), modal_body(f));
            default: throw std::invalid_argument("delta needs a formula in negation normal form");
        }
    }

private:
    PosBool diamond_case(Path p, Ldlf body) {
        switch (p.kind()) {
            case Kind::Step:
                if (satisfies(letter_, step_prop(p), alphabet_)) return PosBool::atom(strip_markers(body));
                return PosBool::bottom();
            case Kind::Test: return PosBool::conj((*this)(test_formula(p)), (*this)(body));
            case Kind::Union:
                return PosBool::disj(diamond_case(path_lhs(p), body), diamond_case(path_rhs(p), body));
            case Kind::Concat: return diamond_case(path_lhs(p), diamond(path_rhs(p), body));
            case Kind::Star:
                return PosBool::disj((*this)(body), diamond_case(path_lhs(p), mark_f(diamond(p, body))));
            default: throw std::invalid_argument("delta of an RV path atom");
        }
    }

    PosBool box_case(Path p, Ldlf body) {
        switch (p.kind()) {
            case Kind::Step:
                if (satisfies(letter_, step_prop(p), alphabet_)) return PosBool::atom(strip_markers(body));
                return PosBool::top();
            case Kind::Test: return PosBool::disj((*this)(negate_nnf(test_formula(p))), (*this)(body));
            case Kind::Union:
                return PosBool::conj(box_case(path_lhs(p), body), box_case(path_rhs(p), body));
            case Kind::Concat: return box_case(path_lhs(p), box(path_rhs(p), body));
            case Kind::Star:
                return PosBool::conj((*this)(body), box_case(path_lhs(p), mark_t(box(p, body))));
            default: throw std::invalid_argument("delta of an RV path atom");
        }
    }

    Interpretation letter_;
    const Alphabet& alphabet_;
};

bool eps(Ldlf f);

bool eps_diamond(Path p, Ldlf body) {
    switch (p.kind()) {
        case Kind::Step: return false;
        case Kind::Test: return eps(test_formula(p)) && eps(body);
        case Kind::Union: return eps_diamond(path_lhs(p), body) || eps_diamond(path_rhs(p), body);
        case Kind::Concat: return eps_diamond(path_lhs(p), diamond(path_rhs(p), body));
        case Kind::Star: return eps(body) || eps_diamond(path_lhs(p), mark_f(diamond(p, body)));
        default: throw std::invalid_argument("delta of an RV path atom");
    }
}

bool eps_box(Path p, Ldlf body) {
    switch (p.kind()) {
        case Kind::Step: return true;
        case Kind::Test: return eps(negate_nnf(test_formula(p))) || eps(body);
        case Kind::Union: return eps_box(path_lhs(p), body) && eps_box(path_rhs(p), body);
        case Kind::Concat: return eps_box(path_lhs(p), box(path_rhs(p), body));
        case Kind::Star: return eps(body) && eps_box(path_lhs(p), mark_t(box(p, body)));
        default: throw std::invalid_argument("delta of an RV path atom");
    }
}

bool eps(Ldlf f) {
    switch (f.kind()) {
        case Kind::Tt:
        case Kind::MarkT: return true;
        case Kind::Ff:
        case Kind::MarkF: return false;
        case Kind::And: return eps(ldlf_lhs(f)) && eps(ldlf_rhs(f));
        case Kind::Or: return eps(ldlf_lhs(f)) || eps(ldlf_rhs(f));
        case Kind::Diamond: return eps_diamond(modal_path(f), modal_body(f));
        case Kind::Box: return eps_box(modal_path(f), modal_body(f));
        default: throw std::invalid_argument("delta needs a formula in negation normal form");
    }
}

using Clauses = std::vector<MacroState>;

bool is_subset(const MacroState& a, const MacroState& b) {
    return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Clauses minimize(Clauses cs) {
    std::sort(cs.begin(), cs.end(), [](const MacroState& a, const MacroState& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    Clauses out;
    for (auto& c : cs) {
        bool absorbed = false;
        for (const auto& kept : out)
            if (is_subset(kept, c)) {
                absorbed = true;
                break;
            }
        if (!absorbed) out.push_back(std::move(c));
    }
    return out;
}

Clauses dnf(const PosBool& f) {
    switch (f.op()) {
        case PosBool::Op::top: return {MacroState{}};
        case PosBool::Op::bottom: return {};
        case PosBool::Op::atom: return {MacroState{f.formula()}};
        case PosBool::Op::disj: {
            Clauses a = dnf(f.lhs());
            Clauses b = dnf(f.rhs());
            a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
            return minimize(std::move(a));
        }
        case PosBool::Op::conj: {
            Clauses a = dnf(f.lhs());
            Clauses b = dnf(f.rhs());
            Clauses out;
            for (const auto& x : a)
                for (const auto& y : b) {
                    MacroState u = x;
                    u.insert(y.begin(), y.end());
                    out.push_back(std::move(u));
                }
            return minimize(std::move(out));
        }
    }
    return {};
}

}  // namespace

PosBool delta(Ldlf psi, Interpretation letter, const Alphabet& alphabet) {
    return DeltaComputer(letter, alphabet)(psi);
}

bool delta_epsilon(Ldlf psi) { return eps(psi); }

std::vector<MacroState> minimal_models(const PosBool& f) { return dnf(f); }

}  // namespace ldlfmon
