#include "ldlfmon/print.hpp"

#include <ostream>

namespace ldlfmon {
namespace {

// Binding levels, loosest first. A child printed below the level its parent
// requires gets parentheses.
enum PropLevel { p_or, p_and, p_unary };

void print_prop(std::string& out, Prop p, int level) {
    switch (p.kind()) {
        case Kind::PropTrue: out += "true"; return;
        case Kind::PropFalse: out += "false"; return;
        case Kind::PropAtom: out += atom_name(p); return;
        case Kind::PropNot:
            out += "!";
            print_prop(out, prop_lhs(p), p_unary);
            return;
        case Kind::PropAnd:
        case Kind::PropOr: {
            const bool is_and = p.kind() == Kind::PropAnd;
            const int mine = is_and ? p_and : p_or;
            if (level > mine) out += "(";
            print_prop(out, prop_lhs(p), mine);
            out += is_and ? " & " : " | ";
            print_prop(out, prop_rhs(p), mine + 1);
            if (level > mine) out += ")";
            return;
        }
        default: out += "<?>"; return;
    }
}

enum FormulaLevel { f_or, f_and, f_unary };
enum PathLevel { r_alt, r_seq, r_postfix };

void print_path(std::string& out, Path p, int level);

void print_formula(std::string& out, Ldlf f, int level) {
    switch (f.kind()) {
        case Kind::Tt: out += "tt"; return;
        case Kind::Ff: out += "ff"; return;
        case Kind::Not:
            out += "!";
            print_formula(out, ldlf_lhs(f), f_unary);
            return;
        case Kind::And:
        case Kind::Or: {
            const bool is_and = f.kind() == Kind::And;
            const int mine = is_and ? f_and : f_or;
            if (level > mine) out += "(";
            print_formula(out, ldlf_lhs(f), mine);
            out += is_and ? " && " : " || ";
            print_formula(out, ldlf_rhs(f), mine + 1);
            if (level > mine) out += ")";
            return;
        }
        case Kind::Diamond:
        case Kind::Box: {
            const bool is_diamond = f.kind() == Kind::Diamond;
            out += is_diamond ? "<" : "[";
            print_path(out, modal_path(f), r_alt);
            out += is_diamond ? ">" : "]";
            print_formula(out, modal_body(f), f_unary);
            return;
        }
        case Kind::MarkT:
        case Kind::MarkF:
            out += f.kind() == Kind::MarkT ? "T{" : "F{";
            print_formula(out, ldlf_lhs(f), f_or);
            out += "}";
            return;
        case Kind::RvAtom:
            out += "{";
            print_formula(out, ldlf_lhs(f), f_or);
            out += " = ";
            out += to_string(rv_of(f));
            out += "}";
            return;
        default: out += "<?>"; return;
    }
}

bool is_simple_prop(Prop p) {
    return p.kind() == Kind::PropAtom || p.kind() == Kind::PropTrue || p.kind() == Kind::PropFalse;
}

void print_path(std::string& out, Path p, int level) {
    switch (p.kind()) {
        case Kind::Step:
            if (is_simple_prop(step_prop(p))) {
                print_prop(out, step_prop(p), p_unary);
            } else {
                out += "(";
                print_prop(out, step_prop(p), p_or);
                out += ")";
            }
            return;
        case Kind::Test:
            out += "(";
            print_formula(out, test_formula(p), f_or);
            out += ")?";
            return;
        case Kind::Star:
            print_path(out, path_lhs(p), r_postfix);
            out += "*";
            return;
        case Kind::Union:
        case Kind::Concat: {
            const bool is_alt = p.kind() == Kind::Union;
            const int mine = is_alt ? r_alt : r_seq;
            if (level > mine) out += "(";
            print_path(out, path_lhs(p), mine);
            out += is_alt ? " + " : ";";
            print_path(out, path_rhs(p), mine + 1);
            if (level > mine) out += ")";
            return;
        }
        case Kind::RvPath:
            out += "re{";
            print_formula(out, rv_path_formula(p), f_or);
            out += " = ";
            out += to_string(rv_of(p));
            out += "}";
            return;
        default: out += "<?>"; return;
    }
}

enum LtlfLevel { l_equiv, l_impl, l_or, l_and, l_temporal, l_unary };

void print_ltlf(std::string& out, const Ltlf& f, int level) {
    using Op = Ltlf::Op;
    auto binary = [&](int mine, const char* sym, int left, int right) {
        if (level > mine) out += "(";
        print_ltlf(out, f.lhs(), left);
        out += sym;
        print_ltlf(out, f.rhs(), right);
        if (level > mine) out += ")";
    };
    auto unary = [&](const char* sym) {
        out += sym;
        print_ltlf(out, f.lhs(), l_unary);
    };
    switch (f.op()) {
        case Op::prop: print_prop(out, f.prop(), p_unary); return;
        case Op::negation: unary("!"); return;
        case Op::next: unary("X "); return;
        case Op::weak_next: unary("WX "); return;
        case Op::eventually: unary("F "); return;
        case Op::always: unary("G "); return;
        case Op::conjunction: binary(l_and, " & ", l_and, l_temporal); return;
        case Op::disjunction: binary(l_or, " | ", l_or, l_and); return;
        case Op::implication: binary(l_impl, " -> ", l_or, l_impl); return;
        case Op::equivalence: binary(l_equiv, " <-> ", l_equiv, l_impl); return;
        case Op::until: binary(l_temporal, " U ", l_temporal, l_unary); return;
        case Op::release: binary(l_temporal, " R ", l_temporal, l_unary); return;
    }
}

}  // namespace

std::string to_string(Prop p) {
    std::string out;
    print_prop(out, p, p_or);
    return out;
}

std::string to_string(Ldlf f) {
    std::string out;
    print_formula(out, f, f_or);
    return out;
}

std::string to_string(Path p) {
    std::string out;
    print_path(out, p, r_alt);
    return out;
}

std::string to_string(const Ltlf& f) {
    std::string out;
    print_ltlf(out, f, l_equiv);
    return out;
}

std::ostream& operator<<(std::ostream& os, Prop p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, Ldlf f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, Path p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Ltlf& f) { return os << to_string(f); }

}  // namespace ldlfmon
