#include "ldlfmon/terms.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

namespace ldlfmon {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t node_hash(Kind kind, const Node* lhs, const Node* rhs, std::string_view name, RVState rv) {
    std::size_t h = static_cast<std::size_t>(kind);
    h = mix(h, lhs ? lhs->hash : 0x51);
    h = mix(h, rhs ? rhs->hash : 0x73);
    h = mix(h, std::hash<std::string_view>{}(name));
    return mix(h, static_cast<std::size_t>(rv));
}

struct Probe {
    Kind kind;
    const Node* lhs;
    const Node* rhs;
    std::string_view name;
    RVState rv;
    std::size_t hash;
};

struct NodeHash {
    using is_transparent = void;
    std::size_t operator()(const Node* n) const noexcept { return n->hash; }
    std::size_t operator()(const Probe& p) const noexcept { return p.hash; }
};

struct NodeEq {
    using is_transparent = void;
    static bool same(Kind k, const Node* l, const Node* r, std::string_view name, RVState rv,
                     const Node* n) {
        return n->kind == k && n->lhs == l && n->rhs == r && n->name == name && n->rv == rv;
    }
    bool operator()(const Node* a, const Node* b) const noexcept { return a == b; }
    bool operator()(const Probe& p, const Node* n) const noexcept {
        return same(p.kind, p.lhs, p.rhs, p.name, p.rv, n);
    }
    bool operator()(const Node* n, const Probe& p) const noexcept {
        return same(p.kind, p.lhs, p.rhs, p.name, p.rv, n);
    }
};

struct Table {
    std::mutex mutex;
    std::deque<Node> nodes;
    std::unordered_set<const Node*, NodeHash, NodeEq> index;
};

Table& table() {
    static Table t;
    return t;
}

}  // namespace

namespace detail {

const Node* intern(Kind kind, const Node* lhs, const Node* rhs, std::string_view name, RVState rv) {
    Table& t = table();
    Probe probe{kind, lhs, rhs, name, rv, node_hash(kind, lhs, rhs, name, rv)};
    std::lock_guard lock(t.mutex);
    if (auto it = t.index.find(probe); it != t.index.end()) return *it;
    auto id = static_cast<std::uint32_t>(t.nodes.size());
    t.nodes.push_back(Node{kind, rv, std::string(name), lhs, rhs, probe.hash, id});
    const Node* n = &t.nodes.back();
    t.index.insert(n);
    return n;
}

}  // namespace detail

using detail::intern;

Prop prop_true() { return Prop(intern(Kind::PropTrue)); }
Prop prop_false() { return Prop(intern(Kind::PropFalse)); }
Prop prop_atom(std::string_view name) { return Prop(intern(Kind::PropAtom, nullptr, nullptr, name)); }
Prop prop_not(Prop p) { return Prop(intern(Kind::PropNot, p.node())); }
Prop prop_and(Prop a, Prop b) { return Prop(intern(Kind::PropAnd, a.node(), b.node())); }
Prop prop_or(Prop a, Prop b) { return Prop(intern(Kind::PropOr, a.node(), b.node())); }

Ldlf tt() { return Ldlf(intern(Kind::Tt)); }
Ldlf ff() { return Ldlf(intern(Kind::Ff)); }
Ldlf lnot(Ldlf f) { return Ldlf(intern(Kind::Not, f.node())); }
Ldlf land(Ldlf a, Ldlf b) { return Ldlf(intern(Kind::And, a.node(), b.node())); }
Ldlf lor(Ldlf a, Ldlf b) { return Ldlf(intern(Kind::Or, a.node(), b.node())); }
Ldlf diamond(Path p, Ldlf f) { return Ldlf(intern(Kind::Diamond, p.node(), f.node())); }
Ldlf box(Path p, Ldlf f) { return Ldlf(intern(Kind::Box, p.node(), f.node())); }
Ldlf mark_t(Ldlf f) { return Ldlf(intern(Kind::MarkT, f.node())); }
Ldlf mark_f(Ldlf f) { return Ldlf(intern(Kind::MarkF, f.node())); }
Ldlf rv_atom(Ldlf f, RVState s) { return Ldlf(intern(Kind::RvAtom, f.node(), nullptr, {}, s)); }

Ldlf implies(Ldlf a, Ldlf b) { return lor(lnot(a), b); }
Ldlf equiv(Ldlf a, Ldlf b) { return land(implies(a, b), implies(b, a)); }
Ldlf at_end() { return box(step(prop_true()), ff()); }
Ldlf at_last() { return diamond(step(prop_true()), at_end()); }
Ldlf holds(Prop p) { return diamond(step(p), tt()); }

Path step(Prop p) { return Path(intern(Kind::Step, p.node())); }
Path test(Ldlf f) { return Path(intern(Kind::Test, f.node())); }
Path alt(Path a, Path b) { return Path(intern(Kind::Union, a.node(), b.node())); }
Path seq(Path a, Path b) { return Path(intern(Kind::Concat, a.node(), b.node())); }
Path star(Path p) { return Path(intern(Kind::Star, p.node())); }
Path rv_path(Ldlf f, RVState s) { return Path(intern(Kind::RvPath, f.node(), nullptr, {}, s)); }

namespace {

bool is_prop_kind(Kind k) { return k <= Kind::PropOr; }

bool any_node(const Node* n, bool (*pred)(Kind)) {
    if (!n) return false;
    if (pred(n->kind)) return true;
    if (is_prop_kind(n->kind)) return false;
    return any_node(n->lhs, pred) || any_node(n->rhs, pred);
}

std::size_t node_depth(const Node* n) {
    if (!n || is_prop_kind(n->kind)) return 0;
    switch (n->kind) {
        case Kind::Tt:
        case Kind::Ff:
        case Kind::Step:
            return 0;
        default:
            break;
    }
    return 1 + std::max(node_depth(n->lhs), node_depth(n->rhs));
}

std::size_t node_star_depth(const Node* n) {
    if (!n || is_prop_kind(n->kind)) return 0;
    std::size_t below = std::max(node_star_depth(n->lhs), node_star_depth(n->rhs));
    return n->kind == Kind::Star ? below + 1 : below;
}

std::size_t node_size(const Node* n) {
    if (!n) return 0;
    return 1 + node_size(n->lhs) + node_size(n->rhs);
}

}  // namespace

bool is_marker_free(Ldlf f) {
    return !any_node(f.node(), [](Kind k) { return k == Kind::MarkT || k == Kind::MarkF; });
}

bool is_meta_free(Ldlf f) {
    return !any_node(f.node(), [](Kind k) { return k == Kind::RvAtom || k == Kind::RvPath; });
}

bool is_test_free(Path p) {
    return !any_node(p.node(), [](Kind k) { return k == Kind::Test || k == Kind::RvPath; });
}

std::size_t depth(Ldlf f) { return node_depth(f.node()); }
std::size_t star_depth(Ldlf f) { return node_star_depth(f.node()); }
std::size_t size(Ldlf f) { return node_size(f.node()); }
std::size_t size(Path p) { return node_size(p.node()); }

}  // namespace ldlfmon
