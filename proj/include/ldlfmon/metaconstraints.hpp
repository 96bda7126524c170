#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "ldlfmon/alphabet.hpp"
#include "ldlfmon/rv_state.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon {

/// A metaconstraint is an Ldlf term that may contain rv_atom(f, s) atoms and
/// rv_path(f, s) path atoms. Expansion turns it into a plain LDLf formula.
using MetaExpr = Ldlf;

/// Expands metaconstraints over one alphabet, caching the formula and regular
/// expression computed for each (formula, state) pair. Safe to share between
/// threads.
class MetaExpander {
public:
    explicit MetaExpander(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    /// Replaces every rv_atom by its RV formula and every rv_path by its
    /// regular expression, innermost first.
    Ldlf expand(MetaExpr m);

    const Alphabet& alphabet() const noexcept { return alphabet_; }

private:
    Ldlf atom_formula(Ldlf f, RVState s);
    Path atom_regex(Ldlf f, RVState s);
    Path expand_path(Path p);

    Alphabet alphabet_;
    std::mutex mutex_;
    std::map<std::pair<std::uint32_t, RVState>, Ldlf> formulas_;
    std::map<std::pair<std::uint32_t, RVState>, Path> regexes_;
};

/// One-shot expansion without a shared cache.
Ldlf expand(MetaExpr m, const Alphabet& alphabet);

/// [re(ctx = s)](<!a>tt || end): task a never happens right after a prefix that
/// puts ctx in state s.
MetaExpr contextual_absence(Ldlf ctx, RVState s, std::string_view task);

/// Non-reactive: (default = perm_false) -> comp.
/// Reactive:     (default = perm_false) -> <re(default = perm_false)>comp.
MetaExpr compensation(Ldlf default_constraint, Ldlf comp, bool reactive);

/// (a && b = perm_false) && !(a = perm_false) && !(b = perm_false)
MetaExpr conflict(Ldlf a, Ldlf b);

/// <re(preferred && other = perm_false)>tt -> preferred
MetaExpr preference(Ldlf preferred, Ldlf other);

}  // namespace ldlfmon
