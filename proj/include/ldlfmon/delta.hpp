#pragma once

#include <memory>
#include <set>
#include <vector>

#include "ldlfmon/alphabet.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon {

/// Positive boolean formula whose atoms are quoted LDLf formulas.
class PosBool {
public:
    enum class Op : std::uint8_t { top, bottom, atom, conj, disj };

    static PosBool top();
    static PosBool bottom();
    static PosBool atom(Ldlf f);
    /// Simplifying constructors: absorb top/bottom.
    static PosBool conj(PosBool a, PosBool b);
    static PosBool disj(PosBool a, PosBool b);

    Op op() const { return node_->op; }
    Ldlf formula() const { return node_->atom; }
    const PosBool& lhs() const { return *node_->lhs; }
    const PosBool& rhs() const { return *node_->rhs; }

    bool is_top() const { return op() == Op::top; }
    bool is_bottom() const { return op() == Op::bottom; }

    /// Whether the set of atoms taken as true satisfies the formula.
    bool satisfied_by(const std::set<Ldlf>& atoms) const;
    std::set<Ldlf> atoms() const;

private:
    struct Node {
        Op op;
        Ldlf atom;
        std::shared_ptr<const PosBool> lhs;
        std::shared_ptr<const PosBool> rhs;
    };
    std::shared_ptr<const Node> node_;
};

/// A conjunction of quoted formulas; the empty set reads as true.
using MacroState = std::set<Ldlf>;

/// delta(psi, letter) for psi in negation normal form (markers allowed).
/// Atoms of the result are marker-free: markers reached while consuming a
/// letter are replaced by the formula they stand for.
PosBool delta(Ldlf psi, Interpretation letter, const Alphabet& alphabet);

/// delta(psi, epsilon): the same recursion with <phi>f = false and [phi]f = true
/// for propositional steps; always a constant.
bool delta_epsilon(Ldlf psi);

/// All and only the subset-minimal atom sets satisfying f, in a deterministic
/// order (by size, then lexicographically by atom id).
std::vector<MacroState> minimal_models(const PosBool& f);

}  // namespace ldlfmon
