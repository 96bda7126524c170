#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "ldlfmon/construction.hpp"
#include "ldlfmon/declare.hpp"
#include "ldlfmon/errors.hpp"
#include "ldlfmon/io.hpp"
#include "ldlfmon/monitor.hpp"
#include "ldlfmon/parser.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/semantics.hpp"
#include "ldlfmon/session.hpp"
#include "ldlfmon/transform.hpp"

using namespace ldlfmon;

namespace {

constexpr int exit_user = 1;
constexpr int exit_internal = 2;

struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UserError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// One formula per non-blank line; '#' starts a comment.
std::vector<std::string> read_formula_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

bool use_ansi() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)); }

// ---------------------------------------------------------------------------
// Formula input shared by compile, monitor and repl
// ---------------------------------------------------------------------------

struct FormulaOptions {
    std::vector<std::string> formulas;
    std::string file;
    std::string input = "ldlf";
    std::vector<std::string> props;
    bool tasks = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("formula", formulas, "Formula text (several are allowed)");
        cmd->add_option("-f,--file", file, "File with one formula per line, '#' comments");
        cmd->add_option("-i,--input", input, "Input language")
            ->check(CLI::IsMember({"ldlf", "ltlf", "re", "declare"}));
        cmd->add_option("-p,--props", props, "Propositions in alphabet order (default: as they occur)")
            ->delimiter(',')
            ->allow_extra_args(false);
        cmd->add_flag("-t,--tasks", tasks, "One task per step instead of arbitrary interpretations");
    }
};

struct LoadedFormula {
    std::string text;
    Ldlf formula;
};

struct FormulaSet {
    Alphabet alphabet;
    std::vector<LoadedFormula> formulas;
};

/// Parses "pattern(a, b)" into name and task list.
std::pair<std::string, std::vector<std::string>> split_pattern(const std::string& text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw SyntaxError("expected pattern(task, ...)", 0);
    std::string name = text.substr(0, open);
    while (!name.empty() && name.back() == ' ') name.pop_back();
    std::vector<std::string> args;
    std::string cur;
    for (char c : text.substr(open + 1, close - open - 1)) {
        if (c == ',') {
            args.push_back(cur);
            cur.clear();
        } else if (c != ' ' && c != '\t') {
            cur += c;
        }
    }
    if (!cur.empty() || !args.empty()) args.push_back(cur);
    return {name, args};
}

FormulaSet load_formulas(const FormulaOptions& o) {
    std::vector<std::string> texts = o.formulas;
    if (!o.file.empty())
        for (auto& t : read_formula_file(o.file)) texts.push_back(std::move(t));
    if (texts.empty()) throw UserError("no formula given");

    // First pass without an alphabet, to collect propositions in order.
    std::vector<std::string> props = o.props;
    if (props.empty()) {
        for (const auto& t : texts) {
            std::vector<std::string> found;
            if (o.input == "ldlf") found = collect_props(parse_ldlf(t));
            else if (o.input == "ltlf") found = collect_props(parse_ltlf(t));
            else if (o.input == "re") found = collect_props(parse_re(t));
            else found = split_pattern(t).second;
            for (auto& p : found)
                if (std::find(props.begin(), props.end(), p) == props.end()) props.push_back(p);
        }
    }
    FormulaSet set{o.tasks ? Alphabet::tasks(props) : Alphabet::full(props), {}};
    for (const auto& t : texts) {
        Ldlf f;
        if (o.input == "ldlf") {
            f = parse_ldlf(t, set.alphabet);
        } else if (o.input == "ltlf") {
            f = ltlf_to_ldlf(parse_ltlf(t, set.alphabet));
        } else if (o.input == "re") {
            f = re_to_ldlf(parse_re(t, set.alphabet));
        } else {
            auto [name, args] = split_pattern(t);
            for (const auto& a : args) set.alphabet.index_of(a);
            f = ltlf_to_ldlf(declare::pattern(name, args));
        }
        set.formulas.push_back({t, f});
    }
    return set;
}

// ---------------------------------------------------------------------------
// compile
// ---------------------------------------------------------------------------

struct CompileOptions {
    FormulaOptions in;
    std::string format = "dot";
    bool minimize = true;
    bool nfa = false;
    std::optional<std::size_t> horizon;
};

std::string ascii_automaton(const Nfa& n, const std::vector<RVState>* colors) {
    std::ostringstream out;
    out << "initial " << n.initial() << "\n";
    for (StateId s = 0; s < n.state_count(); ++s) {
        out << "state " << s << (n.is_final(s) ? " final" : "");
        if (colors) out << " " << to_string((*colors)[s]);
        if (!n.label(s).empty()) out << "  " << n.label(s);
        out << "\n";
        for (std::size_t l = 0; l < n.letter_count(); ++l)
            for (StateId t : n.successors(s, l))
                out << "  " << n.alphabet().format(n.alphabet().letters()[l]) << " -> " << t << "\n";
    }
    return out.str();
}

/// Compares each state's color against the bounded-continuation oracle on a
/// shortest access word. Returns the number of disagreements.
std::size_t check_against_oracle(const ColoredDfa& c, Ldlf f, std::size_t horizon) {
    const Dfa& d = c.dfa();
    std::vector<std::optional<Trace>> access(d.state_count());
    std::vector<StateId> queue{d.initial()};
    access[d.initial()] = Trace{};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        StateId s = queue[k];
        for (std::size_t l = 0; l < d.letter_count(); ++l) {
            StateId t = d.next(s, l);
            if (access[t]) continue;
            access[t] = *access[s];
            access[t]->push_back(d.alphabet().letters()[l]);
            queue.push_back(t);
        }
    }
    std::size_t bad = 0;
    for (StateId s = 0; s < d.state_count(); ++s) {
        if (!access[s]) continue;
        RVState o = rv_state_oracle(*access[s], f, d.alphabet(), horizon);
        if (o != c.color(s)) {
            std::cerr << "state " << s << ": automaton says " << to_string(c.color(s)) << ", oracle says "
                      << to_string(o) << "\n";
            ++bad;
        }
    }
    return bad;
}

int cmd_compile(const CompileOptions& o) {
    FormulaSet set = load_formulas(o.in);
    nlohmann::json json_out = nlohmann::json::array();
    bool first = true;
    for (const auto& lf : set.formulas) {
        if (o.nfa) {
            Nfa n = ldlf_to_nfa(lf.formula, set.alphabet);
            if (o.format == "json") json_out.push_back(nlohmann::json::parse(automaton_json(n)));
            else if (o.format == "dot") std::cout << automaton_dot(n);
            else std::cout << (first ? "" : "\n") << "# " << lf.text << "\n" << ascii_automaton(n, nullptr);
            first = false;
            continue;
        }
        ColoredDfa c = o.minimize ? colored_automaton(lf.formula, set.alphabet)
                                  : color(complete(determinize(ldlf_to_nfa(lf.formula, set.alphabet))));
        if (o.horizon && check_against_oracle(c, lf.formula, *o.horizon) != 0)
            throw InvariantViolation("colored automaton disagrees with the semantic oracle");
        if (o.format == "json") json_out.push_back(nlohmann::json::parse(automaton_json(c.dfa(), &c.colors())));
        else if (o.format == "dot") std::cout << automaton_dot(c);
        else std::cout << (first ? "" : "\n") << "# " << lf.text << "\n" << ascii_automaton(c.dfa().to_nfa(), &c.colors());
        first = false;
    }
    if (o.format == "json") std::cout << (json_out.size() == 1 ? json_out[0] : json_out).dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// monitor / declare / meta
// ---------------------------------------------------------------------------

struct TraceOptions {
    std::string trace = "-";
    std::string format = "ascii";
    bool lazy = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--trace", trace, "JSON-lines trace file, '-' for stdin");
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"ascii", "json"}));
        cmd->add_flag("--lazy", lazy, "Compute reachability on demand while stepping");
    }
    Monitor::ReachMode mode() const { return lazy ? Monitor::ReachMode::lazy : Monitor::ReachMode::eager; }
};

ParsedTrace load_trace(const std::string& path, const Alphabet& alphabet) {
    std::istringstream in(read_file(path));
    return read_trace(in, alphabet);
}

int emit(const Timeline& t, const std::string& format) {
    if (format == "json") std::cout << render_json(t);
    else std::cout << render_ascii(t, use_ansi());
    return 0;
}

int cmd_monitor(const FormulaOptions& fo, const TraceOptions& to) {
    FormulaSet set = load_formulas(fo);
    ParsedTrace trace = load_trace(to.trace, set.alphabet);
    Timeline t;
    for (const auto& lf : set.formulas) {
        Timeline one = formula_timeline(lf.formula, lf.text, set.alphabet, trace.events, to.mode());
        if (t.columns.empty()) t.columns = one.columns;
        for (auto& r : one.rows) t.rows.push_back(std::move(r));
        for (auto& v : one.verdicts) t.verdicts.push_back(std::move(v));
    }
    if (to.format == "json" && set.formulas.size() == 1) {
        std::cout << render_json_row(t, t.rows.front());
        return 0;
    }
    return emit(t, to.format);
}

int cmd_declare(const std::string& model_path, const TraceOptions& to, const std::string& forbidden) {
    declare::Model model = declare::parse_model(read_file(model_path));
    ParsedTrace trace = load_trace(to.trace, model.alphabet());
    ForbiddenView view = forbidden == "global" ? ForbiddenView::global : ForbiddenView::local;
    return emit(declare_timeline(model, trace.events, view, to.mode()), to.format);
}

int cmd_meta(const std::string& model_path, const std::string& meta_path, const TraceOptions& to) {
    declare::Model model = declare::parse_model(read_file(model_path));
    MetaExpander expander(model.alphabet());
    MetaModel meta = parse_meta_model(read_file(meta_path), model, expander);
    ParsedTrace trace = load_trace(to.trace, model.alphabet());
    return emit(meta_timeline(model, meta, trace.events, to.mode()), to.format);
}

// ---------------------------------------------------------------------------
// repl
// ---------------------------------------------------------------------------

int run_repl(std::vector<std::pair<std::string, Monitor>> monitors, const Alphabet& alphabet, bool with_global,
             ForbiddenView view) {
    auto forbidden = [&]() -> std::vector<std::string> {
        const Monitor& g = monitors.back().second;
        if (with_global && is_permanent(g.current_rv())) return {};
        if (view == ForbiddenView::global || !with_global) return declare::forbidden_tasks(g);
        std::vector<std::string> out;
        for (const auto& task : alphabet.props())
            for (std::size_t k = 0; k + 1 < monitors.size(); ++k) {
                auto f = declare::forbidden_tasks(monitors[k].second);
                if (std::find(f.begin(), f.end(), task) != f.end()) {
                    out.push_back(task);
                    break;
                }
            }
        return out;
    };
    auto report = [&]() {
        for (const auto& [name, m] : monitors) std::cout << "  " << name << ": " << to_string(m.current_rv()) << "\n";
        if (alphabet.mode() == Alphabet::Mode::tasks) {
            auto f = forbidden();
            std::cout << "  forbidden:";
            if (f.empty()) std::cout << " -";
            for (const auto& t : f) std::cout << " " << t;
            std::cout << "\n";
        }
        std::cout.flush();
    };

    std::cout << "begin\n";
    report();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(std::cin, line)) {
        ++line_no;
        TraceEvent e;
        LineKind kind;
        try {
            kind = parse_event_line(line, alphabet, line_no, e);
        } catch (const ModelError& err) {
            std::cerr << "warning: " << err.what() << " (ignored)\n";
            continue;
        }
        if (kind == LineKind::skip) continue;
        if (kind == LineKind::end) break;
        for (auto& [name, m] : monitors) m.step(e.letter);
        std::cout << e.text << "\n";
        report();
    }
    std::cout << "end\n";
    for (const auto& [name, m] : monitors)
        std::cout << "  " << name << ": " << to_string(declare::completed_state(m)) << " "
                  << declare::to_string(declare::finalize(m)) << "\n";
    return 0;
}

int cmd_repl(const FormulaOptions& fo, const std::string& model_path, bool lazy, const std::string& forbidden) {
    const auto mode = lazy ? Monitor::ReachMode::lazy : Monitor::ReachMode::eager;
    const ForbiddenView view = forbidden == "global" ? ForbiddenView::global : ForbiddenView::local;
    if (!model_path.empty()) {
        declare::Model model = declare::parse_model(read_file(model_path));
        auto monitors = declare::local_monitors(model, mode);
        monitors.emplace_back("global", declare::global_monitor(model, mode));
        return run_repl(std::move(monitors), model.alphabet(), true, view);
    }
    FormulaSet set = load_formulas(fo);
    std::vector<std::pair<std::string, Monitor>> monitors;
    for (const auto& lf : set.formulas) monitors.emplace_back(lf.text, make_monitor(lf.formula, set.alphabet, mode));
    return run_repl(std::move(monitors), set.alphabet, false, view);
}

}  // namespace

// Some messages already carry their line number, the ones raised while
// parsing a model file do not.
static std::string with_line(const std::string& message, std::size_t line) {
    if (line == 0 || message.rfind("line ", 0) == 0) return message;
    return "line " + std::to_string(line) + ": " + message;
}

int main(int argc, char** argv) {
    CLI::App app{"LDLf runtime monitoring: colored automata, Declare models and metaconstraints"};
    app.require_subcommand(1);

    CompileOptions compile;
    auto* c = app.add_subcommand("compile", "Build the colored automaton of a formula");
    compile.in.add_to(c);
    c->add_option("--format", compile.format, "Output format")->check(CLI::IsMember({"dot", "json", "ascii"}));
    c->add_flag("--minimize,!--no-minimize", compile.minimize, "Minimize before coloring (default on)");
    c->add_flag("--nfa", compile.nfa, "Print the uncolored NFA built from the transition function");
    c->add_option("--horizon", compile.horizon,
                  "Cross-check every state color against the semantic oracle with this many extra steps");

    FormulaOptions mon_in;
    TraceOptions mon_trace;
    auto* m = app.add_subcommand("monitor", "Monitor formulas over a trace");
    mon_in.add_to(m);
    mon_trace.add_to(m);

    std::string decl_model;
    std::string decl_forbidden = "local";
    TraceOptions decl_trace;
    auto* d = app.add_subcommand("declare", "Monitor a Declare model over a trace");
    d->add_option("model", decl_model, "Model file (.decl)")->required();
    decl_trace.add_to(d);
    d->add_option("--forbidden", decl_forbidden, "Monitors feeding the forbidden-tasks row")
        ->check(CLI::IsMember({"local", "global"}));

    std::string meta_model, meta_file;
    TraceOptions meta_trace;
    auto* mt = app.add_subcommand("meta", "Monitor metaconstraints over a trace");
    mt->add_option("model", meta_model, "Declare model file (.decl)")->required();
    mt->add_option("meta", meta_file, "Metaconstraint file (.meta)")->required();
    meta_trace.add_to(mt);

    FormulaOptions repl_in;
    std::string repl_model;
    std::string repl_forbidden = "local";
    bool repl_lazy = false;
    auto* r = app.add_subcommand("repl", "Step monitors interactively, one event per line; ':end' completes");
    repl_in.add_to(r);
    r->add_option("-m,--model", repl_model, "Declare model file instead of formulas");
    r->add_flag("--lazy", repl_lazy, "Compute reachability on demand while stepping");
    r->add_option("--forbidden", repl_forbidden, "Monitors feeding the forbidden tasks")
        ->check(CLI::IsMember({"local", "global"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_user;
    }

    try {
        if (c->parsed()) return cmd_compile(compile);
        if (m->parsed()) return cmd_monitor(mon_in, mon_trace);
        if (d->parsed()) return cmd_declare(decl_model, decl_trace, decl_forbidden);
        if (mt->parsed()) return cmd_meta(meta_model, meta_file, meta_trace);
        if (r->parsed()) return cmd_repl(repl_in, repl_model, repl_lazy, repl_forbidden);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << with_line(e.what(), e.line()) << "\n";
        return exit_user;
    } catch (const ModelError& e) {
        std::cerr << "error: " << with_line(e.what(), e.line()) << "\n";
        return exit_user;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::logic_error& e) {
        // invalid_argument and AlphabetMismatch come from bad input; other
        // logic errors are bugs.
        if (dynamic_cast<const std::invalid_argument*>(&e)) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_user;
        }
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_user;
    }
    return exit_user;
}
