#include "ldlfmon/metaconstraints.hpp"

#include "ldlfmon/monitor.hpp"
#include "ldlfmon/regexfold.hpp"

namespace ldlfmon {

Ldlf MetaExpander::expand(MetaExpr m) {
    switch (m.kind()) {
        case Kind::RvAtom: return atom_formula(expand(ldlf_lhs(m)), rv_of(m));
        case Kind::Not: return lnot(expand(ldlf_lhs(m)));
        case Kind::And: return land(expand(ldlf_lhs(m)), expand(ldlf_rhs(m)));
        case Kind::Or: return lor(expand(ldlf_lhs(m)), expand(ldlf_rhs(m)));
        case Kind::Diamond: return diamond(expand_path(modal_path(m)), expand(modal_body(m)));
        case Kind::Box: return box(expand_path(modal_path(m)), expand(modal_body(m)));
        default: return m;
    }
}

Path MetaExpander::expand_path(Path p) {
    switch (p.kind()) {
        case Kind::RvPath: return atom_regex(expand(rv_path_formula(p)), rv_of(p));
        case Kind::Test: return test(expand(test_formula(p)));
        case Kind::Union: return alt(expand_path(path_lhs(p)), expand_path(path_rhs(p)));
        case Kind::Concat: return seq(expand_path(path_lhs(p)), expand_path(path_rhs(p)));
        case Kind::Star: return star(expand_path(path_lhs(p)));
        default: return p;
    }
}

Ldlf MetaExpander::atom_formula(Ldlf f, RVState s) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(f.id(), s);
    if (auto it = formulas_.find(key); it != formulas_.end()) return it->second;
    Ldlf r = rv_formula(f, s, alphabet_);
    formulas_.emplace(key, r);
    return r;
}

Path MetaExpander::atom_regex(Ldlf f, RVState s) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(f.id(), s);
    if (auto it = regexes_.find(key); it != regexes_.end()) return it->second;
    Path r = regex_for_rv(f, s, alphabet_);
    regexes_.emplace(key, r);
    return r;
}

Ldlf expand(MetaExpr m, const Alphabet& alphabet) { return MetaExpander(alphabet).expand(m); }

MetaExpr contextual_absence(Ldlf ctx, RVState s, std::string_view task) {
    return box(rv_path(ctx, s), lor(holds(prop_not(prop_atom(task))), at_end()));
}

MetaExpr compensation(Ldlf default_constraint, Ldlf comp, bool reactive) {
    const Ldlf violated = rv_atom(default_constraint, RVState::perm_false);
    if (!reactive) return implies(violated, comp);
    return implies(violated, diamond(rv_path(default_constraint, RVState::perm_false), comp));
}

MetaExpr conflict(Ldlf a, Ldlf b) {
    return land(land(rv_atom(land(a, b), RVState::perm_false), lnot(rv_atom(a, RVState::perm_false))),
                lnot(rv_atom(b, RVState::perm_false)));
}

MetaExpr preference(Ldlf preferred, Ldlf other) {
    return implies(diamond(rv_path(land(preferred, other), RVState::perm_false), tt()), preferred);
}

}  // namespace ldlfmon
