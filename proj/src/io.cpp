#include "ldlfmon/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "ldlfmon/errors.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/regexfold.hpp"

namespace ldlfmon {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

LineKind parse_event_line(std::string_view raw, const Alphabet& alphabet, std::size_t line_no, TraceEvent& out) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') return LineKind::skip;
    if (line == ":end") return LineKind::end;

    std::vector<std::string> names;
    bool as_list = false;
    if (line.front() == '[' || line.front() == '"') {
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ModelError("line " + std::to_string(line_no) + ": malformed event: " + e.what(), line_no);
        }
        if (j.is_string()) {
            if (j.get<std::string>() == ":end") return LineKind::end;
            names.push_back(j.get<std::string>());
        } else if (j.is_array()) {
            as_list = true;
            for (const auto& x : j) {
                if (!x.is_string())
                    throw ModelError("line " + std::to_string(line_no) + ": event lists hold proposition names",
                                     line_no);
                names.push_back(x.get<std::string>());
            }
        } else {
            throw ModelError("line " + std::to_string(line_no) + ": an event is a string or a list", line_no);
        }
    } else {
        if (line.find_first_of(" \t") != std::string::npos)
            throw ModelError("line " + std::to_string(line_no) + ": one task per line", line_no);
        names.push_back(line);
    }

    for (const auto& n : names)
        if (!alphabet.contains(n))
            throw ModelError("line " + std::to_string(line_no) + ": unknown task or proposition '" + n + "'", line_no);
    out.letter = alphabet.interpretation(names);
    out.line = line_no;
    if (!alphabet.letter_index(out.letter))
        throw ModelError("line " + std::to_string(line_no) + ": exactly one task per event is allowed", line_no);
    out.text = (as_list || alphabet.mode() == Alphabet::Mode::full) ? alphabet.format(out.letter) : names.front();
    return LineKind::event;
}

ParsedTrace read_trace(std::istream& in, const Alphabet& alphabet) {
    ParsedTrace t;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        TraceEvent e;
        switch (parse_event_line(line, alphabet, line_no, e)) {
            case LineKind::skip: break;
            case LineKind::end: t.terminated = true; return t;
            case LineKind::event: t.events.push_back(std::move(e)); break;
        }
    }
    return t;
}

namespace {

json alphabet_json(const Alphabet& a) {
    return {{"mode", a.mode() == Alphabet::Mode::full ? "full" : "tasks"}, {"props", a.props()}};
}

json transitions_json(const Nfa& n) {
    json out = json::array();
    for (StateId s = 0; s < n.state_count(); ++s) {
        std::map<StateId, std::vector<Interpretation>> by_target;
        for (std::size_t l = 0; l < n.letter_count(); ++l)
            for (StateId t : n.successors(s, l)) by_target[t].push_back(n.alphabet().letters()[l]);
        for (const auto& [t, letters] : by_target) {
            json lists = json::array();
            for (Interpretation i : letters) lists.push_back(n.alphabet().true_props(i));
            out.push_back({{"from", s},
                           {"to", t},
                           {"guard", to_string(compress_guard(letters, n.alphabet()))},
                           {"letters", lists}});
        }
    }
    return out;
}

std::string automaton_json_impl(const Nfa& n, const std::vector<RVState>* colors) {
    json states = json::array();
    for (StateId s = 0; s < n.state_count(); ++s) {
        json st = {{"id", s}, {"final", n.is_final(s)}};
        if (colors) st["color"] = std::string(to_string((*colors)[s]));
        if (!n.label(s).empty()) st["label"] = n.label(s);
        states.push_back(st);
    }
    json j = {{"alphabet", alphabet_json(n.alphabet())},
              {"initial", n.initial()},
              {"states", states},
              {"transitions", transitions_json(n)}};
    return j.dump(2) + "\n";
}

}  // namespace

std::string automaton_json(const Dfa& d, const std::vector<RVState>* colors) {
    return automaton_json_impl(d.to_nfa(), colors);
}

std::string automaton_json(const Nfa& n) { return automaton_json_impl(n, nullptr); }

LoadedAutomaton load_automaton_json(std::string_view text) {
    try {
        json j = json::parse(text);
        const auto& a = j.at("alphabet");
        auto props = a.at("props").get<std::vector<std::string>>();
        Alphabet alphabet =
            a.at("mode").get<std::string>() == "tasks" ? Alphabet::tasks(props) : Alphabet::full(props);
        Nfa n(alphabet);
        const auto& states = j.at("states");
        std::vector<RVState> colors;
        bool has_colors = true;
        for (std::size_t k = 0; k < states.size(); ++k) {
            const auto& st = states[k];
            if (st.at("id").get<std::size_t>() != k) throw ModelError("state ids must be 0, 1, 2, ...");
            n.add_state(st.at("final").get<bool>(), st.value("label", ""));
            if (st.contains("color")) {
                auto c = parse_rv_state(st["color"].get<std::string>());
                if (!c) throw ModelError("unknown color " + st["color"].dump());
                colors.push_back(*c);
            } else {
                has_colors = false;
            }
        }
        n.set_initial(j.at("initial").get<StateId>());
        for (const auto& tr : j.at("transitions")) {
            const auto from = tr.at("from").get<StateId>();
            const auto to = tr.at("to").get<StateId>();
            if (from >= n.state_count() || to >= n.state_count()) throw ModelError("transition to unknown state");
            for (const auto& names : tr.at("letters")) {
                auto l = alphabet.letter_index(alphabet.interpretation(names.get<std::vector<std::string>>()));
                if (!l) throw ModelError("transition letter outside the alphabet");
                n.add_transition(from, *l, to);
            }
        }
        LoadedAutomaton out{std::move(n), std::nullopt};
        if (has_colors && !colors.empty()) out.colors = std::move(colors);
        return out;
    } catch (const json::exception& e) {
        throw ModelError(std::string("malformed automaton JSON: ") + e.what());
    }
}

namespace {

const char* dot_style(RVState s) {
    switch (s) {
        case RVState::temp_true: return "color=orange, style=dashed";
        case RVState::perm_true: return "color=darkgreen, penwidth=3";
        case RVState::temp_false: return "color=blue";
        case RVState::perm_false: return "color=red, style=dotted";
    }
    return "";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string automaton_dot(const Nfa& n, const std::vector<RVState>* colors) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n";
    for (StateId s = 0; s < n.state_count(); ++s) {
        out << "  s" << s << " [shape=" << (n.is_final(s) ? "doublecircle" : "circle");
        if (colors) out << ", " << dot_style((*colors)[s]) << ", xlabel=\"" << to_string((*colors)[s]) << "\"";
        out << "];\n";
    }
    out << "  init -> s" << n.initial() << ";\n";
    for (StateId s = 0; s < n.state_count(); ++s) {
        std::map<StateId, std::vector<Interpretation>> by_target;
        for (std::size_t l = 0; l < n.letter_count(); ++l)
            for (StateId t : n.successors(s, l)) by_target[t].push_back(n.alphabet().letters()[l]);
        for (const auto& [t, letters] : by_target)
            out << "  s" << s << " -> s" << t << " [label=\""
                << dot_escape(to_string(compress_guard(letters, n.alphabet()))) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string automaton_dot(const ColoredDfa& c) { return automaton_dot(c.dfa().to_nfa(), &c.colors()); }

namespace {

const char* ansi_color(RVState s) {
    switch (s) {
        case RVState::temp_true: return "\x1b[33m";
        case RVState::perm_true: return "\x1b[1;32m";
        case RVState::temp_false: return "\x1b[34m";
        case RVState::perm_false: return "\x1b[31m";
    }
    return "";
}

}  // namespace

std::string render_ascii(const Timeline& t, bool ansi) {
    std::size_t label_width = 0;
    std::size_t cell_width = 0;
    for (const auto& c : t.columns) cell_width = std::max(cell_width, c.size());
    for (const auto& r : t.rows) {
        std::size_t indent = r.kind == Timeline::Row::Kind::heading ? 0 : 2;
        label_width = std::max(label_width, r.label.size() + indent);
        for (RVState s : r.states) cell_width = std::max(cell_width, to_string(s).size());
        for (const auto& c : r.cells) cell_width = std::max(cell_width, c.size());
    }
    label_width += 2;
    cell_width += 2;

    std::ostringstream out;
    auto pad = [&](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    auto finish = [&](std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    };

    std::string header = pad("", label_width);
    for (const auto& c : t.columns) header += pad(c, cell_width);
    finish(header);
    for (const auto& r : t.rows) {
        if (r.kind == Timeline::Row::Kind::heading) {
            finish(r.label);
            continue;
        }
        std::string line = pad("  " + r.label, label_width);
        if (r.kind == Timeline::Row::Kind::states) {
            for (RVState s : r.states) {
                std::string cell = pad(std::string(to_string(s)), cell_width);
                line += ansi ? std::string(ansi_color(s)) + cell + "\x1b[0m" : cell;
            }
        } else {
            for (const auto& c : r.cells) line += pad(c, cell_width);
        }
        finish(line);
    }
    if (!t.verdicts.empty()) {
        out << "\n";
        std::size_t w = 0;
        for (const auto& v : t.verdicts) w = std::max(w, v.first.size());
        for (const auto& [label, verdict] : t.verdicts) finish("verdict  " + pad(label, w + 2) + verdict);
    }
    return out.str();
}

namespace {

json row_timeline(const Timeline& t, const Timeline::Row& row) {
    json arr = json::array();
    for (std::size_t k = 0; k < row.states.size(); ++k)
        arr.push_back({{"step_index", k},
                       {"event", k < t.columns.size() ? t.columns[k] : ""},
                       {"rv_state", std::string(to_string(row.states[k]))}});
    return arr;
}

}  // namespace

std::string render_json(const Timeline& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        switch (r.kind) {
            case Timeline::Row::Kind::heading: rows.push_back({{"kind", "heading"}, {"label", r.label}}); break;
            case Timeline::Row::Kind::states:
                rows.push_back({{"kind", "states"}, {"label", r.label}, {"timeline", row_timeline(t, r)}});
                break;
            case Timeline::Row::Kind::text:
                rows.push_back({{"kind", "text"}, {"label", r.label}, {"cells", r.cells}});
                break;
        }
    }
    json verdicts = json::object();
    for (const auto& [label, v] : t.verdicts) verdicts[label] = v;
    json j = {{"columns", t.columns}, {"rows", rows}, {"verdicts", verdicts}};
    return j.dump(2) + "\n";
}

std::string render_json_row(const Timeline& t, const Timeline::Row& row) { return row_timeline(t, row).dump(2) + "\n"; }

}  // namespace ldlfmon
