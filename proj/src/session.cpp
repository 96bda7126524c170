#include "ldlfmon/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ldlfmon/errors.hpp"
#include "ldlfmon/parser.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/transform.hpp"

namespace ldlfmon {

DeclareSession::DeclareSession(const declare::Model& model, Monitor::ReachMode mode)
    : locals_(declare::local_monitors(model, mode)), global_(declare::global_monitor(model, mode)) {}

void DeclareSession::step(Interpretation letter) {
    for (auto& [name, m] : locals_) m.step(letter);
    global_.step(letter);
}

std::vector<std::string> DeclareSession::forbidden(ForbiddenView view) const {
    if (is_permanent(global_.current_rv())) return {};
    if (view == ForbiddenView::global) return declare::forbidden_tasks(global_);
    std::set<std::string> seen;
    for (const auto& [name, m] : locals_)
        for (auto& t : declare::forbidden_tasks(m)) seen.insert(std::move(t));
    std::vector<std::string> out;
    for (const auto& t : global_.alphabet().props())
        if (seen.count(t)) out.push_back(t);
    return out;
}

namespace {

std::string join_or_dash(const std::vector<std::string>& tasks) {
    if (tasks.empty()) return "-";
    std::string out;
    for (const auto& t : tasks) {
        if (!out.empty()) out += ",";
        out += t;
    }
    return out;
}

std::vector<std::string> columns_for(const std::vector<TraceEvent>& trace, const char* last) {
    std::vector<std::string> cols{"begin"};
    for (const auto& e : trace) cols.push_back(e.text);
    cols.emplace_back(last);
    return cols;
}

Timeline::Row states_row(std::string label, const Monitor& m) {
    Timeline::Row r;
    r.kind = Timeline::Row::Kind::states;
    r.label = std::move(label);
    r.states = m.history();
    r.states.push_back(declare::completed_state(m));
    return r;
}

Timeline::Row heading(std::string label) {
    Timeline::Row r;
    r.kind = Timeline::Row::Kind::heading;
    r.label = std::move(label);
    return r;
}

Timeline::Row text_row(std::string label, std::vector<std::string> cells) {
    Timeline::Row r;
    r.kind = Timeline::Row::Kind::text;
    r.label = std::move(label);
    r.cells = std::move(cells);
    return r;
}

std::string verdict_text(const Monitor& m) {
    return std::string(declare::to_string(declare::finalize(m))) + " (" +
           std::string(to_string(declare::completed_state(m))) + ")";
}

}  // namespace

Timeline declare_timeline(const declare::Model& model, const std::vector<TraceEvent>& trace, ForbiddenView view,
                          Monitor::ReachMode mode) {
    DeclareSession session(model, mode);
    std::vector<std::string> forbidden{join_or_dash(session.forbidden(view))};
    for (const auto& e : trace) {
        session.step(e.letter);
        forbidden.push_back(join_or_dash(session.forbidden(view)));
    }

    Timeline t;
    t.columns = columns_for(trace, "end");
    t.rows.push_back(heading("local monitors"));
    for (const auto& [name, m] : session.locals()) {
        t.rows.push_back(states_row(name, m));
        t.verdicts.emplace_back(name, verdict_text(m));
    }
    t.rows.push_back(heading("global monitor"));
    t.rows.push_back(states_row("global", session.global()));
    t.verdicts.emplace_back("global", verdict_text(session.global()));
    t.rows.push_back(heading("forbidden tasks"));
    t.rows.push_back(text_row("forbidden", std::move(forbidden)));
    return t;
}

Timeline formula_timeline(Ldlf f, const std::string& label, const Alphabet& alphabet,
                          const std::vector<TraceEvent>& trace, Monitor::ReachMode mode) {
    Monitor m = make_monitor(f, alphabet, mode);
    for (const auto& e : trace) m.step(e.letter);
    Timeline t;
    t.columns = columns_for(trace, "end");
    t.rows.push_back(states_row(label, m));
    t.verdicts.emplace_back(label, verdict_text(m));
    return t;
}

namespace {

struct Arg {
    std::string text;
    bool braced;
};

std::vector<Arg> split_args(std::string_view s, std::size_t line_no) {
    std::vector<Arg> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] == '{') {
            int depth = 0;
            std::size_t j = i;
            for (; j < s.size(); ++j) {
                if (s[j] == '{') ++depth;
                if (s[j] == '}' && --depth == 0) break;
            }
            if (j == s.size()) throw SyntaxError("line " + std::to_string(line_no) + ": unbalanced '{'", i, line_no);
            out.push_back({std::string(s.substr(i + 1, j - i - 1)), true});
            i = j + 1;
        } else {
            std::size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '{') ++j;
            out.push_back({std::string(s.substr(i, j - i)), false});
            i = j;
        }
    }
    return out;
}

struct Resolved {
    Ldlf formula;
    std::string display;
};

Resolved resolve(const Arg& a, const declare::Model& model, std::size_t line_no, MetaConstraint& mc) {
    if (a.braced) {
        Ltlf f = parse_ltlf(a.text, model.alphabet());
        return {ltlf_to_ldlf(f), to_string(f)};
    }
    const declare::Constraint* c = model.find(a.text);
    if (!c) throw ModelError("line " + std::to_string(line_no) + ": unknown constraint '" + a.text + "'", line_no);
    if (std::find(mc.references.begin(), mc.references.end(), c->name) == mc.references.end())
        mc.references.push_back(c->name);
    return {c->formula, c->name};
}

}  // namespace

MetaModel parse_meta_model(std::string_view text, const declare::Model& model, MetaExpander& expander) {
    MetaModel out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos || colon == 0)
            throw SyntaxError("line " + std::to_string(line_no) + ": expected 'name: kind arguments'", 0, line_no);
        MetaConstraint mc;
        mc.name = std::string(line.substr(0, colon));
        while (!mc.name.empty() && std::isspace(static_cast<unsigned char>(mc.name.back()))) mc.name.pop_back();
        mc.source = std::string(line.substr(colon + 1));
        for (const auto& other : out.constraints)
            if (other.name == mc.name)
                throw ModelError("line " + std::to_string(line_no) + ": duplicate name '" + mc.name + "'", line_no);

        try {
            auto args = split_args(line.substr(colon + 1), line_no);
            if (args.empty() || args.front().braced)
                throw SyntaxError("line " + std::to_string(line_no) + ": missing metaconstraint kind", colon,
                                  line_no);
            mc.kind = args.front().text;
            args.erase(args.begin());
            auto need = [&](std::size_t n) {
                if (args.size() != n)
                    throw ModelError("line " + std::to_string(line_no) + ": '" + mc.kind + "' takes " +
                                         std::to_string(n) + " arguments",
                                     line_no);
            };
            if (mc.kind == "context") {
                need(3);
                Resolved ctx = resolve(args[0], model, line_no, mc);
                auto s = parse_rv_state(args[1].text);
                if (!s || args[1].braced)
                    throw ModelError("line " + std::to_string(line_no) + ": unknown RV state '" + args[1].text + "'",
                                     line_no);
                if (args[2].braced || !model.alphabet().contains(args[2].text))
                    throw ModelError("line " + std::to_string(line_no) + ": unknown task '" + args[2].text + "'",
                                     line_no);
                mc.expr = contextual_absence(ctx.formula, *s, args[2].text);
            } else if (mc.kind == "compensate" || mc.kind == "compensate-reactive") {
                need(2);
                Resolved d = resolve(args[0], model, line_no, mc);
                Resolved c = resolve(args[1], model, line_no, mc);
                mc.expr = compensation(d.formula, c.formula, mc.kind == "compensate-reactive");
            } else if (mc.kind == "conflict") {
                need(2);
                Resolved a = resolve(args[0], model, line_no, mc);
                Resolved b = resolve(args[1], model, line_no, mc);
                mc.expr = conflict(a.formula, b.formula);
            } else if (mc.kind == "prefer") {
                need(2);
                Resolved p = resolve(args[0], model, line_no, mc);
                Resolved o = resolve(args[1], model, line_no, mc);
                mc.expr = preference(p.formula, o.formula);
            } else {
                throw ModelError("line " + std::to_string(line_no) + ": unknown metaconstraint kind '" + mc.kind + "'",
                                 line_no);
            }
        } catch (const UnknownSymbol& e) {
            throw ModelError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        } catch (const SyntaxError& e) {
            if (e.line() != 0) throw;
            throw SyntaxError("line " + std::to_string(line_no) + ": " + e.what(), e.offset(), line_no);
        }
        mc.expanded = expander.expand(mc.expr);
        out.constraints.push_back(std::move(mc));
    }
    return out;
}

namespace {

std::string describe(const MetaConstraint& mc) {
    if (mc.kind == "context") return mc.name + ": contextual absence";
    if (mc.kind == "compensate") return mc.name + ": compensation";
    if (mc.kind == "compensate-reactive") return mc.name + ": reactive compensation";
    if (mc.kind == "conflict") return mc.name + ": conflict";
    if (mc.kind == "prefer") return mc.name + ": preference";
    return mc.name;
}

}  // namespace

Timeline meta_timeline(const declare::Model& model, const MetaModel& meta, const std::vector<TraceEvent>& trace,
                       Monitor::ReachMode mode) {
    Timeline t;
    t.columns = columns_for(trace, "complete");
    const Alphabet& alphabet = model.alphabet();

    std::vector<std::string> refs;
    for (const auto& mc : meta.constraints)
        for (const auto& r : mc.references)
            if (std::find(refs.begin(), refs.end(), r) == refs.end()) refs.push_back(r);
    if (!refs.empty()) t.rows.push_back(heading("referenced constraints"));
    for (const auto& r : refs) {
        Monitor m = make_monitor(model.find(r)->formula, alphabet, mode);
        for (const auto& e : trace) m.step(e.letter);
        t.rows.push_back(states_row(r, m));
    }

    for (const auto& mc : meta.constraints) {
        Monitor m = make_monitor(mc.expanded, alphabet, mode);
        std::vector<std::string> forbidden{join_or_dash(declare::forbidden_tasks(m))};
        std::vector<std::string> marks{m.accepting() ? "X" : ""};
        for (const auto& e : trace) {
            m.step(e.letter);
            forbidden.push_back(join_or_dash(declare::forbidden_tasks(m)));
            marks.push_back(m.accepting() ? "X" : "");
        }
        t.rows.push_back(heading(describe(mc)));
        t.rows.push_back(states_row("rv state", m));
        if (mc.kind == "context") t.rows.push_back(text_row("forbidden", std::move(forbidden)));
        if (mc.kind == "conflict") t.rows.push_back(text_row("conflict", std::move(marks)));
        t.verdicts.emplace_back(mc.name, verdict_text(m));
    }
    return t;
}

}  // namespace ldlfmon
