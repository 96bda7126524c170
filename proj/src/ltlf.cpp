#include "ldlfmon/ltlf.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldlfmon {

Ltlf Ltlf::atom(Prop p) {
    Ltlf f;
    f.node_ = std::make_shared<const Node>(Node{Op::prop, p, nullptr, nullptr});
    return f;
}

Ltlf Ltlf::unary(Op op, Ltlf a) {
    Ltlf f;
    f.node_ = std::make_shared<const Node>(Node{op, Prop{}, std::make_shared<const Ltlf>(std::move(a)), nullptr});
    if (!f.is_unary()) throw std::invalid_argument("not a unary LTLf operator");
    return f;
}

Ltlf Ltlf::binary(Op op, Ltlf a, Ltlf b) {
    Ltlf f;
    f.node_ = std::make_shared<const Node>(Node{op, Prop{}, std::make_shared<const Ltlf>(std::move(a)),
                                                std::make_shared<const Ltlf>(std::move(b))});
    if (!f.is_binary()) throw std::invalid_argument("not a binary LTLf operator");
    return f;
}

bool Ltlf::is_unary() const {
    switch (op()) {
        case Op::negation:
        case Op::next:
        case Op::weak_next:
        case Op::eventually:
        case Op::always:
            return true;
        default:
            return false;
    }
}

bool Ltlf::is_binary() const {
    switch (op()) {
        case Op::conjunction:
        case Op::disjunction:
        case Op::implication:
        case Op::equivalence:
        case Op::until:
        case Op::release:
            return true;
        default:
            return false;
    }
}

bool operator==(const Ltlf& a, const Ltlf& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    if (a.op() == Ltlf::Op::prop) return a.prop() == b.prop();
    if (a.is_unary()) return a.lhs() == b.lhs();
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

using Op = Ltlf::Op;

Ltlf lt_atom(std::string_view name) { return Ltlf::atom(prop_atom(name)); }
Ltlf lt_not(Ltlf f) { return Ltlf::unary(Op::negation, std::move(f)); }
Ltlf lt_and(Ltlf a, Ltlf b) { return Ltlf::binary(Op::conjunction, std::move(a), std::move(b)); }
Ltlf lt_or(Ltlf a, Ltlf b) { return Ltlf::binary(Op::disjunction, std::move(a), std::move(b)); }
Ltlf lt_implies(Ltlf a, Ltlf b) { return Ltlf::binary(Op::implication, std::move(a), std::move(b)); }
Ltlf lt_next(Ltlf f) { return Ltlf::unary(Op::next, std::move(f)); }
Ltlf lt_weak_next(Ltlf f) { return Ltlf::unary(Op::weak_next, std::move(f)); }
Ltlf lt_until(Ltlf a, Ltlf b) { return Ltlf::binary(Op::until, std::move(a), std::move(b)); }
Ltlf lt_release(Ltlf a, Ltlf b) { return Ltlf::binary(Op::release, std::move(a), std::move(b)); }
Ltlf lt_eventually(Ltlf f) { return Ltlf::unary(Op::eventually, std::move(f)); }
Ltlf lt_always(Ltlf f) { return Ltlf::unary(Op::always, std::move(f)); }

std::size_t depth(const Ltlf& f) {
    if (f.op() == Op::prop) return 0;
    if (f.is_unary()) return 1 + depth(f.lhs());
    return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
}

}  // namespace ldlfmon
