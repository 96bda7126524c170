#include "ldlfmon/transform.hpp"

#include <stdexcept>
#include <unordered_map>

namespace ldlfmon {
namespace {

class NnfBuilder {
public:
    Ldlf pos(Ldlf f) {
        if (auto it = pos_.find(f.node()); it != pos_.end()) return Ldlf(it->second);
        Ldlf r;
        switch (f.kind()) {
            case Kind::Tt:
            case Kind::Ff: r = f; break;
            case Kind::Not: r = neg(ldlf_lhs(f)); break;
            case Kind::And: r = land(pos(ldlf_lhs(f)), pos(ldlf_rhs(f))); break;
            case Kind::Or: r = lor(pos(ldlf_lhs(f)), pos(ldlf_rhs(f))); break;
            case Kind::Diamond: r = diamond(path(modal_path(f)), pos(modal_body(f))); break;
            case Kind::Box: r = box(path(modal_path(f)), pos(modal_body(f))); break;
            default: throw std::invalid_argument("negation normal form of a marker or RV atom");
        }
        pos_.emplace(f.node(), r.node());
        return r;
    }

    Ldlf neg(Ldlf f) {
        if (auto it = neg_.find(f.node()); it != neg_.end()) return Ldlf(it->second);
        Ldlf r;
        switch (f.kind()) {
            case Kind::Tt: r = ff(); break;
            case Kind::Ff: r = tt(); break;
            case Kind::Not: r = pos(ldlf_lhs(f)); break;
            case Kind::And: r = lor(neg(ldlf_lhs(f)), neg(ldlf_rhs(f))); break;
            case Kind::Or: r = land(neg(ldlf_lhs(f)), neg(ldlf_rhs(f))); break;
            case Kind::Diamond: r = box(path(modal_path(f)), neg(modal_body(f))); break;
            case Kind::Box: r = diamond(path(modal_path(f)), neg(modal_body(f))); break;
            default: throw std::invalid_argument("negation normal form of a marker or RV atom");
        }
        neg_.emplace(f.node(), r.node());
        return r;
    }

    Path path(Path p) {
        switch (p.kind()) {
            case Kind::Step: return p;
            case Kind::Test: return test(pos(test_formula(p)));
            case Kind::Union: return alt(path(path_lhs(p)), path(path_rhs(p)));
            case Kind::Concat: return seq(path(path_lhs(p)), path(path_rhs(p)));
            case Kind::Star: return star(path(path_lhs(p)));
            default: throw std::invalid_argument("negation normal form of an RV path atom");
        }
    }

private:
    std::unordered_map<const Node*, const Node*> pos_;
    std::unordered_map<const Node*, const Node*> neg_;
};

Ldlf not_end() { return lnot(at_end()); }

Ldlf translate(const Ltlf& f) {
    using Op = Ltlf::Op;
    switch (f.op()) {
        case Op::prop: return holds(f.prop());
        case Op::negation: return lnot(translate(f.lhs()));
        case Op::conjunction: return land(translate(f.lhs()), translate(f.rhs()));
        case Op::disjunction: return lor(translate(f.lhs()), translate(f.rhs()));
        case Op::implication: return implies(translate(f.lhs()), translate(f.rhs()));
        case Op::equivalence: return equiv(translate(f.lhs()), translate(f.rhs()));
        case Op::next:
            return diamond(step(prop_true()), land(translate(f.lhs()), not_end()));
        case Op::weak_next:
            return lnot(diamond(step(prop_true()), land(lnot(translate(f.lhs())), not_end())));
        case Op::eventually:
            return diamond(star(step(prop_true())), land(translate(f.lhs()), not_end()));
        case Op::always:
            return lnot(diamond(star(step(prop_true())), land(lnot(translate(f.lhs())), not_end())));
        case Op::until:
            return diamond(star(seq(test(translate(f.lhs())), step(prop_true()))),
                           land(translate(f.rhs()), not_end()));
        case Op::release:
            return lnot(diamond(star(seq(test(lnot(translate(f.lhs()))), step(prop_true()))),
                                land(lnot(translate(f.rhs())), not_end())));
    }
    throw std::logic_error("unhandled LTLf operator");
}

class MarkerStripper {
public:
    Ldlf formula(Ldlf f) {
        if (auto it = memo_.find(f.node()); it != memo_.end()) return Ldlf(it->second);
        Ldlf r;
        switch (f.kind()) {
            case Kind::MarkT:
            case Kind::MarkF: r = formula(ldlf_lhs(f)); break;
            case Kind::Not: r = lnot(formula(ldlf_lhs(f))); break;
            case Kind::And: r = land(formula(ldlf_lhs(f)), formula(ldlf_rhs(f))); break;
            case Kind::Or: r = lor(formula(ldlf_lhs(f)), formula(ldlf_rhs(f))); break;
            case Kind::Diamond: r = diamond(path(modal_path(f)), formula(modal_body(f))); break;
            case Kind::Box: r = box(path(modal_path(f)), formula(modal_body(f))); break;
            case Kind::RvAtom: r = rv_atom(formula(ldlf_lhs(f)), rv_of(f)); break;
            default: r = f; break;
        }
        memo_.emplace(f.node(), r.node());
        return r;
    }

    Path path(Path p) {
        switch (p.kind()) {
            case Kind::Test: return test(formula(test_formula(p)));
            case Kind::Union: return alt(path(path_lhs(p)), path(path_rhs(p)));
            case Kind::Concat: return seq(path(path_lhs(p)), path(path_rhs(p)));
            case Kind::Star: return star(path(path_lhs(p)));
            case Kind::RvPath: return rv_path(formula(rv_path_formula(p)), rv_of(p));
            default: return p;
        }
    }

private:
    std::unordered_map<const Node*, const Node*> memo_;
};

}  // namespace

Ldlf to_nnf(Ldlf f) { return NnfBuilder().pos(f); }

Ldlf negate_nnf(Ldlf f) { return NnfBuilder().neg(f); }

Ldlf ltlf_to_ldlf(const Ltlf& f) { return translate(f); }

Ldlf re_to_ldlf(Path p) { return diamond(p, at_end()); }

Ldlf strip_markers(Ldlf f) { return MarkerStripper().formula(f); }

}  // namespace ldlfmon
