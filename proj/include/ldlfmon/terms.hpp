// ============================================================================
// ldlfmon/terms.hpp - hash-consed syntax for propositions, LDLf and paths
// ============================================================================
//
// Every term lives in a process-wide interning table: two structurally equal
// terms are the same node, so equality is a pointer comparison and hashing is
// the node id. Nodes are immutable once created and are never freed.
//
// Three handle types share the table:
//   Prop - propositional formulas over proposition names
//   Ldlf - LDLf formulas: tt, ff, not, and, or, <path>f, [path]f, plus the
//          T/F markers used while computing delta and the RV atoms of
//          metaconstraints
//   Path - path expressions: steps, tests, union, concatenation, star, plus
//          RV path atoms of metaconstraints
//
// ============================================================================

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "ldlfmon/rv_state.hpp"

namespace ldlfmon {

enum class Kind : std::uint8_t {
    // propositional
    PropTrue,
    PropFalse,
    PropAtom,
    PropNot,
    PropAnd,
    PropOr,
    // LDLf
    Tt,
    Ff,
    Not,
    And,
    Or,
    Diamond,  // lhs: path, rhs: formula
    Box,      // lhs: path, rhs: formula
    MarkT,    // lhs: the formula the marker stands for
    MarkF,
    RvAtom,   // lhs: formula, rv: state
    // paths
    Step,     // lhs: prop
    Test,     // lhs: formula
    Union,
    Concat,
    Star,
    RvPath,   // lhs: formula, rv: state
};

struct Node {
    Kind kind;
    RVState rv;
    std::string name;
    const Node* lhs;
    const Node* rhs;
    std::size_t hash;
    std::uint32_t id;
};

namespace detail {
const Node* intern(Kind kind, const Node* lhs = nullptr, const Node* rhs = nullptr,
                   std::string_view name = {}, RVState rv = RVState::perm_true);
}

template <class Tag>
class Term {
public:
    Term() = default;
    explicit Term(const Node* n) : node_(n) {}

    const Node* node() const noexcept { return node_; }
    Kind kind() const noexcept { return node_->kind; }
    std::uint32_t id() const noexcept { return node_->id; }
    bool valid() const noexcept { return node_ != nullptr; }

    friend bool operator==(Term a, Term b) noexcept { return a.node_ == b.node_; }
    friend bool operator!=(Term a, Term b) noexcept { return a.node_ != b.node_; }
    /// Creation order; stable within one process for a deterministic program.
    friend bool operator<(Term a, Term b) noexcept { return a.node_->id < b.node_->id; }

private:
    const Node* node_ = nullptr;
};

struct PropTag {};
struct LdlfTag {};
struct PathTag {};

using Prop = Term<PropTag>;
using Ldlf = Term<LdlfTag>;
using Path = Term<PathTag>;

// -- propositional ------------------------------------------------------------

Prop prop_true();
Prop prop_false();
Prop prop_atom(std::string_view name);
Prop prop_not(Prop p);
Prop prop_and(Prop a, Prop b);
Prop prop_or(Prop a, Prop b);

inline std::string_view atom_name(Prop p) { return p.node()->name; }
inline Prop prop_lhs(Prop p) { return Prop(p.node()->lhs); }
inline Prop prop_rhs(Prop p) { return Prop(p.node()->rhs); }

// -- LDLf -----------------------------------------------------------------------

Ldlf tt();
Ldlf ff();
Ldlf lnot(Ldlf f);
Ldlf land(Ldlf a, Ldlf b);
Ldlf lor(Ldlf a, Ldlf b);
Ldlf diamond(Path p, Ldlf f);
Ldlf box(Path p, Ldlf f);
Ldlf mark_t(Ldlf f);
Ldlf mark_f(Ldlf f);
Ldlf rv_atom(Ldlf f, RVState s);

/// !a || b
Ldlf implies(Ldlf a, Ldlf b);
/// (a -> b) && (b -> a)
Ldlf equiv(Ldlf a, Ldlf b);
/// `end`, i.e. [true]ff: the remaining trace is empty.
Ldlf at_end();
/// `last`, i.e. <true>end: the current step is the last one.
Ldlf at_last();
/// <p>tt, the reading of a bare proposition as an LDLf formula.
Ldlf holds(Prop p);

inline Ldlf ldlf_lhs(Ldlf f) { return Ldlf(f.node()->lhs); }
inline Ldlf ldlf_rhs(Ldlf f) { return Ldlf(f.node()->rhs); }
/// Path of a diamond or box.
inline Path modal_path(Ldlf f) { return Path(f.node()->lhs); }
/// Body of a diamond or box.
inline Ldlf modal_body(Ldlf f) { return Ldlf(f.node()->rhs); }
inline RVState rv_of(Ldlf f) { return f.node()->rv; }

// -- paths ----------------------------------------------------------------------

Path step(Prop p);
Path test(Ldlf f);
Path alt(Path a, Path b);
Path seq(Path a, Path b);
Path star(Path p);
Path rv_path(Ldlf f, RVState s);

inline Path path_lhs(Path p) { return Path(p.node()->lhs); }
inline Path path_rhs(Path p) { return Path(p.node()->rhs); }
inline Prop step_prop(Path p) { return Prop(p.node()->lhs); }
inline Ldlf test_formula(Path p) { return Ldlf(p.node()->lhs); }
inline Ldlf rv_path_formula(Path p) { return Ldlf(p.node()->lhs); }
inline RVState rv_of(Path p) { return p.node()->rv; }

// -- queries ----------------------------------------------------------------------

/// True when no MarkT/MarkF node occurs anywhere below f.
bool is_marker_free(Ldlf f);
/// True when no RvAtom/RvPath occurs anywhere below f.
bool is_meta_free(Ldlf f);
/// True when p contains no tests (and hence no nested formulas).
bool is_test_free(Path p);
/// Operator depth (leaves count 0).
std::size_t depth(Ldlf f);
/// Nesting depth of star operators.
std::size_t star_depth(Ldlf f);
/// Number of nodes when printed as a tree.
std::size_t size(Ldlf f);
std::size_t size(Path p);

}  // namespace ldlfmon

template <class Tag>
struct std::hash<ldlfmon::Term<Tag>> {
    std::size_t operator()(ldlfmon::Term<Tag> t) const noexcept { return t.node()->hash; }
};
