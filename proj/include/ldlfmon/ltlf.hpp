#pragma once

#include <memory>
#include <string>

#include "ldlfmon/terms.hpp"

namespace ldlfmon {

/// LTLf syntax tree. Implication and equivalence are kept as written so that
/// printing reproduces the input; they are eliminated by the LDLf translation.
class Ltlf {
public:
    enum class Op : std::uint8_t {
        prop,
        negation,
        conjunction,
        disjunction,
        implication,
        equivalence,
        next,
        weak_next,
        until,
        release,
        eventually,
        always,
    };

    static Ltlf atom(Prop p);
    static Ltlf unary(Op op, Ltlf f);
    static Ltlf binary(Op op, Ltlf a, Ltlf b);

    Op op() const { return node_->op; }
    Prop prop() const { return node_->prop; }
    const Ltlf& lhs() const { return *node_->lhs; }
    const Ltlf& rhs() const { return *node_->rhs; }
    bool is_unary() const;
    bool is_binary() const;

    friend bool operator==(const Ltlf& a, const Ltlf& b);

private:
    struct Node {
        Op op;
        Prop prop;
        std::shared_ptr<const Ltlf> lhs;
        std::shared_ptr<const Ltlf> rhs;
    };
    std::shared_ptr<const Node> node_;
};

// Convenience builders used by the Declare catalog and tests.
Ltlf lt_atom(std::string_view name);
Ltlf lt_not(Ltlf f);
Ltlf lt_and(Ltlf a, Ltlf b);
Ltlf lt_or(Ltlf a, Ltlf b);
Ltlf lt_implies(Ltlf a, Ltlf b);
Ltlf lt_next(Ltlf f);
Ltlf lt_weak_next(Ltlf f);
Ltlf lt_until(Ltlf a, Ltlf b);
Ltlf lt_release(Ltlf a, Ltlf b);
Ltlf lt_eventually(Ltlf f);
Ltlf lt_always(Ltlf f);

std::size_t depth(const Ltlf& f);

}  // namespace ldlfmon
