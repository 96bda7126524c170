// Reference data shared by the unit tests and the acceptance runner: the
// colored automata and prefix expressions of the Declare template table, the
// booking model, and small helpers.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ldlfmon/construction.hpp"
#include "ldlfmon/declare.hpp"
#include "ldlfmon/monitor.hpp"
#include "ldlfmon/parser.hpp"
#include "ldlfmon/transform.hpp"

#ifndef LDLFMON_SOURCE_DIR
#error "LDLFMON_SOURCE_DIR must point at the repository root"
#endif

namespace ldlfmon::testkit {

inline std::string source_path(const std::string& rel) { return std::string(LDLFMON_SOURCE_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Dfa dfa_of(Ldlf f, const Alphabet& a) { return canonical_dfa(ldlf_to_nfa(f, a)); }

struct TemplateRow {
    std::string pattern;
    std::vector<std::string> args;
    /// Colors of s0, s1, ... as drawn.
    std::vector<RVState> colors;
    /// "from label to"; label is a task, "o", "true", or "!task".
    std::vector<std::string> edges;
    /// Prefix expression column, in path syntax.
    std::string pref;

    /// Arguments plus the catch-all task o.
    Alphabet alphabet() const {
        std::vector<std::string> tasks = args;
        tasks.push_back("o");
        return Alphabet::tasks(tasks);
    }

    Ldlf formula() const { return ltlf_to_ldlf(declare::pattern(pattern, args)); }

    /// The drawn automaton, states numbered as in the drawing.
    ColoredDfa drawn() const {
        Alphabet a = alphabet();
        Dfa d(a);
        for (RVState c : colors) d.add_state(is_satisfied(c));
        for (const auto& e : edges) {
            std::istringstream in(e);
            StateId from, to;
            std::string label;
            in >> from >> label >> to;
            for (std::size_t l = 0; l < a.letter_count(); ++l) {
                const std::string& task = a.props()[l];
                bool on = label == "true" || label == task || (label[0] == '!' && label.substr(1) != task);
                if (on) d.set_transition(from, l, to);
            }
        }
        return ColoredDfa(d, colors);
    }
};

inline const std::vector<TemplateRow>& template_table() {
    using S = RVState;
    static const std::vector<TemplateRow> rows = {
        {"existence", {"a"}, {S::temp_false, S::perm_true}, {"0 o 0", "0 a 1", "1 true 1"}, "true*"},
        {"absence", {"a"}, {S::temp_true, S::perm_false}, {"0 o 0", "0 a 1", "1 true 1"}, "o*"},
        {"absence2",
         {"a"},
         {S::temp_true, S::temp_true, S::perm_false},
         {"0 o 0", "0 a 1", "1 o 1", "1 a 2", "2 true 2"},
         "o* + (o*;a;o*)"},
        {"choice", {"a", "b"}, {S::temp_false, S::perm_true}, {"0 o 0", "0 a 1", "0 b 1", "1 true 1"}, "true*"},
        {"responded_existence",
         {"a", "b"},
         {S::temp_true, S::temp_false, S::perm_true},
         {"0 o 0", "0 a 1", "0 b 2", "1 !b 1", "1 b 2", "2 true 2"},
         "true*"},
        {"response", {"a", "b"}, {S::temp_true, S::temp_false}, {"0 !a 0", "0 a 1", "1 b 0", "1 !b 1"}, "true*"},
        {"precedence",
         {"a", "b"},
         {S::temp_true, S::perm_true, S::perm_false},
         {"0 o 0", "0 a 1", "1 true 1", "0 b 2", "2 true 2"},
         "(!b)* + (o*;a;true*)"},
        {"not_coexistence",
         {"a", "b"},
         {S::temp_true, S::temp_true, S::temp_true, S::perm_false},
         {"0 o 0", "0 a 1", "0 b 2", "1 !b 1", "2 !a 2", "1 b 3", "2 a 3", "3 true 3"},
         "(a + o)* + (b + o)*"},
    };
    return rows;
}

/// The same automaton as a Dfa, state numbers kept. n must be deterministic.
inline Dfa as_dfa(const Nfa& n) {
    Dfa d(n.alphabet());
    for (StateId s = 0; s < n.state_count(); ++s) d.add_state(n.is_final(s), n.label(s));
    d.set_initial(n.initial());
    for (StateId s = 0; s < n.state_count(); ++s)
        for (std::size_t l = 0; l < n.letter_count(); ++l)
            for (StateId t : n.successors(s, l)) d.set_transition(s, l, t);
    return d;
}

/// Whether two colored automata are isomorphic with colors preserved.
inline bool colored_isomorphic(const ColoredDfa& x, const ColoredDfa& y) {
    if (x.state_count() != y.state_count()) return false;
    auto h = shape_equivalent(x.dfa().to_nfa(), y.dfa().to_nfa());
    if (!h) return false;
    for (StateId s = 0; s < x.state_count(); ++s)
        if (x.color(s) != y.color((*h)[s])) return false;
    return true;
}

inline const char* booking_model_text() {
    return "tasks: acc, pay, get, cancel\n"
           "absence2(pay)\n"
           "responded_existence(pay, acc)\n"
           "precedence(pay, get)\n"
           "response(pay, get)\n"
           "not_coexistence(get, cancel)\n";
}

}  // namespace ldlfmon::testkit
