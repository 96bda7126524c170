#include "ldlfmon/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <unordered_set>

#include "ldlfmon/errors.hpp"

namespace ldlfmon {
namespace {

struct Token {
    enum class Type { ident, symbol, eof } type;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
    static const char* const symbols[] = {"<->", "->", "&&", "||", "<", ">", "[", "]", "(",
                                          ")",   "!",  "&",  "|",  "+", ";", "*", "?"};
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i + 1;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Type::ident, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        bool matched = false;
        for (const char* s : symbols) {
            std::string_view sv(s);
            if (text.substr(i, sv.size()) == sv) {
                out.push_back({Token::Type::symbol, std::string(sv), i});
                i += sv.size();
                matched = true;
                break;
            }
        }
        if (!matched)
            throw SyntaxError("unexpected character '" + std::string(1, text[i]) + "' at offset " +
                                  std::to_string(i),
                              i);
    }
    out.push_back({Token::Type::eof, "", text.size()});
    return out;
}

class ParserBase {
protected:
    explicit ParserBase(std::string_view text) : tokens_(tokenize(text)) {}

    const Token& peek() const { return tokens_[pos_]; }
    bool at_symbol(std::string_view s) const {
        return peek().type == Token::Type::symbol && peek().text == s;
    }
    bool at_ident(std::string_view s) const {
        return peek().type == Token::Type::ident && peek().text == s;
    }
    bool accept(std::string_view s) {
        if (at_symbol(s)) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        std::string found = t.type == Token::Type::eof ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(what + ", found " + found + " at offset " + std::to_string(t.offset),
                          t.offset);
    }
    void expect(std::string_view s) {
        if (!accept(s)) fail("expected '" + std::string(s) + "'");
    }
    void expect_eof() {
        if (peek().type != Token::Type::eof) fail("unexpected trailing input");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

bool is_ldlf_reserved(std::string_view s) {
    return s == "tt" || s == "ff" || s == "end" || s == "last" || s == "true" || s == "false";
}

bool is_ltlf_reserved(std::string_view s) {
    return s == "X" || s == "WX" || s == "F" || s == "G" || s == "U" || s == "R" || s == "true" ||
           s == "false";
}

class LdlfParser : ParserBase {
public:
    explicit LdlfParser(std::string_view text) : ParserBase(text) {}

    Ldlf whole_formula() {
        Ldlf f = formula();
        expect_eof();
        return f;
    }
    Path whole_path() {
        Path p = path();
        expect_eof();
        return p;
    }
    Prop whole_prop() {
        Prop p = prop_or();
        expect_eof();
        return p;
    }

private:
    struct Memo {
        bool ok;
        const Node* node;
        std::size_t end;
        std::optional<SyntaxError> error;
    };

    Ldlf formula() {
        Ldlf f = implication();
        while (accept("<->")) f = equiv(f, implication());
        return f;
    }

    Ldlf implication() {
        Ldlf f = disjunction();
        if (accept("->")) return implies(f, implication());
        return f;
    }

    Ldlf disjunction() {
        Ldlf f = conjunction();
        while (accept("||") || accept("|")) f = lor(f, conjunction());
        return f;
    }

    Ldlf conjunction() {
        Ldlf f = unary();
        while (accept("&&") || accept("&")) f = land(f, unary());
        return f;
    }

    Ldlf unary() {
        return Ldlf(memoized(unary_memo_, [this] { return unary_uncached().node(); }));
    }

    Ldlf unary_uncached() {
        if (accept("!")) return lnot(unary());
        if (accept("<")) {
            Path p = path();
            expect(">");
            return diamond(p, unary());
        }
        if (accept("[")) {
            Path p = path();
            expect("]");
            return box(p, unary());
        }
        return atom();
    }

    Ldlf atom() {
        if (accept("(")) {
            Ldlf f = formula();
            expect(")");
            return f;
        }
        if (peek().type != Token::Type::ident) fail("expected a formula");
        std::string name = peek().text;
        ++pos_;
        if (name == "tt") return tt();
        if (name == "ff") return ff();
        if (name == "end") return at_end();
        if (name == "last") return at_last();
        if (name == "true") return holds(prop_true());
        if (name == "false") return holds(prop_false());
        return holds(prop_atom(name));
    }

    Path path() {
        Path p = sequence();
        while (accept("+")) p = alt(p, sequence());
        return p;
    }

    Path sequence() {
        Path p = postfix();
        while (accept(";")) p = seq(p, postfix());
        return p;
    }

    Path postfix() {
        Path p = primary();
        while (accept("*")) p = star(p);
        return p;
    }

    Path primary() {
        return Path(memoized(primary_memo_, [this] { return primary_uncached().node(); }));
    }

    // A primary is a test `phi?`, a propositional step, or a parenthesized
    // path. The three readings overlap on their first tokens, so each is
    // tried in turn and the deepest error is reported if none fits.
    Path primary_uncached() {
        const std::size_t start = pos_;
        std::optional<SyntaxError> best;
        auto remember = [&](const SyntaxError& e) {
            if (!best || e.offset() > best->offset()) best = e;
        };
        try {
            Ldlf f = unary();
            if (accept("?")) return test(f);
            fail("expected '?'");
        } catch (const SyntaxError& e) {
            remember(e);
        }
        pos_ = start;
        try {
            return step(prop_or());
        } catch (const SyntaxError& e) {
            remember(e);
        }
        pos_ = start;
        try {
            expect("(");
            Path p = path();
            expect(")");
            return p;
        } catch (const SyntaxError& e) {
            remember(e);
        }
        pos_ = start;
        throw *best;
    }

    Prop prop_or() {
        Prop p = prop_and();
        while (accept("|") || accept("||")) p = ldlfmon::prop_or(p, prop_and());
        return p;
    }

    Prop prop_and() {
        Prop p = prop_unary();
        while (accept("&") || accept("&&")) p = ldlfmon::prop_and(p, prop_unary());
        return p;
    }

    Prop prop_unary() {
        if (accept("!")) return prop_not(prop_unary());
        if (accept("(")) {
            Prop p = prop_or();
            expect(")");
            return p;
        }
        if (peek().type != Token::Type::ident) fail("expected a proposition");
        std::string name = peek().text;
        if (name == "true") return ++pos_, prop_true();
        if (name == "false") return ++pos_, prop_false();
        if (is_ldlf_reserved(name)) fail("reserved word used as a proposition");
        ++pos_;
        return prop_atom(name);
    }

    template <class Fn>
    const Node* memoized(std::map<std::size_t, Memo>& memo, Fn&& fn) {
        const std::size_t start = pos_;
        if (auto it = memo.find(start); it != memo.end()) {
            if (!it->second.ok) throw *it->second.error;
            pos_ = it->second.end;
            return it->second.node;
        }
        try {
            const Node* n = fn();
            memo[start] = Memo{true, n, pos_, std::nullopt};
            return n;
        } catch (const SyntaxError& e) {
            memo[start] = Memo{false, nullptr, 0, e};
            throw;
        }
    }

    std::map<std::size_t, Memo> unary_memo_;
    std::map<std::size_t, Memo> primary_memo_;
};

class LtlfParser : ParserBase {
public:
    explicit LtlfParser(std::string_view text) : ParserBase(text) {}

    Ltlf whole() {
        Ltlf f = equivalence();
        expect_eof();
        return f;
    }

private:
    using Op = Ltlf::Op;

    Ltlf equivalence() {
        Ltlf f = implication();
        while (accept("<->")) f = Ltlf::binary(Op::equivalence, f, implication());
        return f;
    }

    Ltlf implication() {
        Ltlf f = disjunction();
        if (accept("->")) return Ltlf::binary(Op::implication, f, implication());
        return f;
    }

    Ltlf disjunction() {
        Ltlf f = conjunction();
        while (accept("|") || accept("||")) f = Ltlf::binary(Op::disjunction, f, conjunction());
        return f;
    }

    Ltlf conjunction() {
        Ltlf f = temporal();
        while (accept("&") || accept("&&")) f = Ltlf::binary(Op::conjunction, f, temporal());
        return f;
    }

    Ltlf temporal() {
        Ltlf f = unary();
        for (;;) {
            if (at_ident("U")) {
                ++pos_;
                f = Ltlf::binary(Op::until, f, unary());
            } else if (at_ident("R")) {
                ++pos_;
                f = Ltlf::binary(Op::release, f, unary());
            } else {
                return f;
            }
        }
    }

    Ltlf unary() {
        if (accept("!")) return Ltlf::unary(Op::negation, unary());
        static const std::pair<const char*, Op> prefix[] = {
            {"X", Op::next}, {"WX", Op::weak_next}, {"F", Op::eventually}, {"G", Op::always}};
        for (auto [word, op] : prefix) {
            if (at_ident(word)) {
                ++pos_;
                return Ltlf::unary(op, unary());
            }
        }
        if (accept("(")) {
            Ltlf f = equivalence();
            expect(")");
            return f;
        }
        if (peek().type != Token::Type::ident) fail("expected an LTLf formula");
        std::string name = peek().text;
        if (name == "true") return ++pos_, Ltlf::atom(prop_true());
        if (name == "false") return ++pos_, Ltlf::atom(prop_false());
        if (is_ltlf_reserved(name) || is_ldlf_reserved(name))
            fail("reserved word used as a proposition");
        ++pos_;
        return Ltlf::atom(prop_atom(name));
    }
};

void check_alphabet(const std::vector<std::string>& names, const Alphabet* alphabet) {
    if (!alphabet) return;
    for (const auto& n : names)
        if (!alphabet->contains(n)) throw UnknownSymbol(n);
}

void collect(const Node* n, std::vector<std::string>& out, std::unordered_set<const Node*>& seen) {
    if (!n || !seen.insert(n).second) return;
    if (n->kind == Kind::PropAtom) {
        if (std::find(out.begin(), out.end(), n->name) == out.end()) out.push_back(n->name);
        return;
    }
    collect(n->lhs, out, seen);
    collect(n->rhs, out, seen);
}

void collect_ltlf(const Ltlf& f, std::vector<std::string>& out, std::unordered_set<const Node*>& seen) {
    if (f.op() == Ltlf::Op::prop) {
        collect(f.prop().node(), out, seen);
        return;
    }
    collect_ltlf(f.lhs(), out, seen);
    if (f.is_binary()) collect_ltlf(f.rhs(), out, seen);
}

}  // namespace

Ldlf parse_ldlf(std::string_view text, const Alphabet* alphabet) {
    Ldlf f = LdlfParser(text).whole_formula();
    check_alphabet(collect_props(f), alphabet);
    return f;
}

Ltlf parse_ltlf(std::string_view text, const Alphabet* alphabet) {
    Ltlf f = LtlfParser(text).whole();
    check_alphabet(collect_props(f), alphabet);
    return f;
}

Path parse_re(std::string_view text, const Alphabet* alphabet) {
    Path p = LdlfParser(text).whole_path();
    check_alphabet(collect_props(p), alphabet);
    return p;
}

Prop parse_prop(std::string_view text, const Alphabet* alphabet) {
    Prop p = LdlfParser(text).whole_prop();
    std::vector<std::string> names;
    std::unordered_set<const Node*> seen;
    collect(p.node(), names, seen);
    check_alphabet(names, alphabet);
    return p;
}

std::vector<std::string> collect_props(Ldlf f) {
    std::vector<std::string> out;
    std::unordered_set<const Node*> seen;
    collect(f.node(), out, seen);
    return out;
}

std::vector<std::string> collect_props(Path p) {
    std::vector<std::string> out;
    std::unordered_set<const Node*> seen;
    collect(p.node(), out, seen);
    return out;
}

std::vector<std::string> collect_props(const Ltlf& f) {
    std::vector<std::string> out;
    std::unordered_set<const Node*> seen;
    collect_ltlf(f, out, seen);
    return out;
}

}  // namespace ldlfmon
