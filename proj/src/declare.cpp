#include "ldlfmon/declare.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "ldlfmon/errors.hpp"
#include "ldlfmon/parser.hpp"
#include "ldlfmon/print.hpp"
#include "ldlfmon/transform.hpp"

namespace ldlfmon::declare {
namespace {

struct PatternInfo {
    const char* name;
    std::size_t arity;
};

constexpr PatternInfo catalog[] = {
    {"existence", 1},           {"absence", 1},  {"absence2", 1},   {"choice", 2},
    {"responded_existence", 2}, {"response", 2}, {"precedence", 2}, {"not_coexistence", 2},
    {"succession", 2},
};

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

const std::vector<std::string>& pattern_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& p : catalog) v.emplace_back(p.name);
        return v;
    }();
    return names;
}

std::optional<std::size_t> pattern_arity(std::string_view name) {
    for (const auto& p : catalog)
        if (name == p.name) return p.arity;
    return std::nullopt;
}

Ltlf pattern(std::string_view name, const std::vector<std::string>& args) {
    auto arity = pattern_arity(name);
    if (!arity) throw ModelError("unknown Declare pattern '" + std::string(name) + "'");
    if (args.size() != *arity)
        throw ModelError("pattern '" + std::string(name) + "' takes " + std::to_string(*arity) +
                         " task(s), got " + std::to_string(args.size()));
    const Ltlf a = lt_atom(args[0]);
    const Ltlf b = args.size() > 1 ? lt_atom(args[1]) : a;
    auto response = [&] { return lt_always(lt_implies(a, lt_next(lt_eventually(b)))); };
    auto precedence = [&] { return lt_or(lt_until(lt_not(b), a), lt_not(lt_eventually(b))); };
    if (name == "existence") return lt_eventually(a);
    if (name == "absence") return lt_not(lt_eventually(a));
    if (name == "absence2") return lt_not(lt_eventually(lt_and(a, lt_next(lt_eventually(a)))));
    if (name == "choice") return lt_eventually(lt_or(a, b));
    if (name == "responded_existence") return lt_implies(lt_eventually(a), lt_eventually(b));
    if (name == "response") return response();
    if (name == "precedence") return precedence();
    if (name == "not_coexistence") return lt_not(lt_and(lt_eventually(a), lt_eventually(b)));
    return lt_and(response(), precedence());  // succession
}

Model::Model(std::vector<std::string> tasks) : alphabet_(Alphabet::tasks(std::move(tasks))) {}

const Constraint* Model::find(std::string_view name) const {
    for (const auto& c : constraints_)
        if (c.name == name) return &c;
    return nullptr;
}

void Model::check_name(const std::string& name) const {
    if (name.empty()) throw ModelError("constraint without a name");
    if (find(name)) throw ModelError("duplicate constraint name '" + name + "'");
}

void Model::add_pattern(std::string name, std::string_view pattern_name, std::vector<std::string> args) {
    for (const auto& t : args)
        if (!alphabet_.contains(t)) throw ModelError("undeclared task '" + t + "'");
    Ltlf f = pattern(pattern_name, args);
    check_name(name);
    constraints_.push_back(
        Constraint{std::move(name), std::string(pattern_name), std::move(args), ltlf_to_ldlf(f), to_string(f)});
}

void Model::add_formula(std::string name, Ldlf formula, std::string source) {
    check_name(name);
    for (const auto& p : collect_props(formula))
        if (!alphabet_.contains(p)) throw ModelError("undeclared task '" + p + "'");
    constraints_.push_back(Constraint{std::move(name), {}, {}, formula, std::move(source)});
}

Ldlf Model::conjunction() const {
    if (constraints_.empty()) return tt();
    Ldlf out = constraints_.front().formula;
    for (std::size_t i = 1; i < constraints_.size(); ++i) out = land(out, constraints_[i].formula);
    return out;
}

Model parse_model(std::string_view text) {
    static const std::regex named(R"(^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$)");
    static const std::regex call(R"(^([A-Za-z_][A-Za-z0-9_]*)\s*\((.*)\)$)");
    std::optional<Model> model;
    std::istringstream in{std::string(text)};
    std::string raw_line;
    std::size_t line_no = 0;
    std::size_t unnamed = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string line = trim(raw_line.substr(0, raw_line.find('#')));
        if (line.empty()) continue;
        try {
            if (line.rfind("tasks:", 0) == 0) {
                if (model) throw ModelError("duplicate tasks header", line_no);
                std::string rest = line.substr(6);
                std::replace(rest.begin(), rest.end(), ',', ' ');
                std::istringstream words(rest);
                std::vector<std::string> tasks;
                for (std::string w; words >> w;) tasks.push_back(w);
                if (tasks.empty()) throw ModelError("empty task list", line_no);
                try {
                    model.emplace(std::move(tasks));
                } catch (const std::invalid_argument& e) {
                    throw ModelError(e.what(), line_no);
                }
                continue;
            }
            if (!model) throw ModelError("constraint before the 'tasks:' header", line_no);
            std::string name;
            std::string body = line;
            std::smatch m;
            if (std::regex_match(line, m, named)) {
                name = m[1];
                body = trim(m[2].str());
            }
            if (body.rfind("raw-ldlf:", 0) == 0) {
                std::string src = trim(body.substr(9));
                model->add_formula(name.empty() ? "raw" + std::to_string(++unnamed) : name,
                                   parse_ldlf(src), src);
            } else if (body.rfind("raw:", 0) == 0) {
                std::string src = trim(body.substr(4));
                model->add_formula(name.empty() ? "raw" + std::to_string(++unnamed) : name,
                                   ltlf_to_ldlf(parse_ltlf(src)), src);
            } else if (std::regex_match(body, m, call)) {
                std::vector<std::string> args;
                std::string list = m[2];
                std::replace(list.begin(), list.end(), ',', ' ');
                std::istringstream words(list);
                for (std::string w; words >> w;) args.push_back(w);
                std::string pattern_name = m[1];
                if (name.empty()) {
                    name = pattern_name + "(";
                    for (std::size_t i = 0; i < args.size(); ++i) name += (i ? "," : "") + args[i];
                    name += ")";
                }
                model->add_pattern(name, pattern_name, args);
            } else {
                throw ModelError("expected 'pattern(task, ...)', 'raw: <LTLf>' or 'raw-ldlf: <LDLf>'", line_no);
            }
        } catch (const ModelError& e) {
            if (e.line()) throw;
            throw ModelError(e.what(), line_no);
        } catch (const SyntaxError& e) {
            throw SyntaxError(e.what(), e.offset(), line_no);
        } catch (const UnknownSymbol& e) {
            throw ModelError(e.what(), line_no);
        }
    }
    if (!model) throw ModelError("missing 'tasks:' header");
    return std::move(*model);
}

std::vector<std::pair<std::string, Monitor>> local_monitors(const Model& m, Monitor::ReachMode mode) {
    std::vector<std::pair<std::string, Monitor>> out;
    for (const auto& c : m.constraints()) out.emplace_back(c.name, make_monitor(c.formula, m.alphabet(), mode));
    return out;
}

Monitor global_monitor(const Model& m, Monitor::ReachMode mode) {
    return make_monitor(m.conjunction(), m.alphabet(), mode);
}

std::vector<std::string> forbidden_tasks(const Monitor& m) {
    std::vector<std::string> out;
    if (is_permanent(m.current_rv())) return out;
    for (Interpretation i : m.forbidden_symbols()) out.push_back(m.alphabet().format(i));
    return out;
}

Verdict finalize(const Monitor& m) { return m.accepting() ? Verdict::compliant : Verdict::noncompliant; }

RVState completed_state(const Monitor& m) { return m.accepting() ? RVState::perm_true : RVState::perm_false; }

}  // namespace ldlfmon::declare
