#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ldlfmon/alphabet.hpp"
#include "ldlfmon/ltlf.hpp"
#include "ldlfmon/monitor.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon::declare {

/// Names of the supported Declare templates.
const std::vector<std::string>& pattern_names();
/// Number of task arguments a template takes, or nullopt if unknown.
std::optional<std::size_t> pattern_arity(std::string_view name);

/// LTLf formula of a Declare template instance:
///   existence(a)              F a
///   absence(a)                !F a
///   absence2(a)               !F(a & X F a)
///   choice(a, b)              F(a | b)
///   responded_existence(a, b) F a -> F b
///   response(a, b)            G(a -> X F b)
///   precedence(a, b)          (!b U a) | !F b
///   not_coexistence(a, b)     !(F a & F b)
///   succession(a, b)          response(a, b) & precedence(a, b)
/// Throws ModelError for unknown templates or wrong arity.
Ltlf pattern(std::string_view name, const std::vector<std::string>& args);

struct Constraint {
    std::string name;
    /// Template name, empty for raw formulas.
    std::string pattern;
    std::vector<std::string> args;
    Ldlf formula;
    std::string source;
};

/// Tasks plus named constraints over them.
class Model {
public:
    explicit Model(std::vector<std::string> tasks);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    const Constraint* find(std::string_view name) const;

    /// Throws ModelError on duplicate names or undeclared tasks.
    void add_pattern(std::string name, std::string_view pattern_name,
                     std::vector<std::string> args);
    void add_formula(std::string name, Ldlf formula, std::string source);

    /// Conjunction of all constraints (tt for an empty model).
    Ldlf conjunction() const;

private:
    void check_name(const std::string& name) const;

    Alphabet alphabet_;
    std::vector<Constraint> constraints_;
};

/// Model file: a `tasks:` header, then one constraint per line,
///   [name =] pattern(task, ...)
///   [name =] raw: <LTLf formula>
///   [name =] raw-ldlf: <LDLf formula>
/// `#` starts a comment. Throws SyntaxError / ModelError with line numbers.
Model parse_model(std::string_view text);

/// Local monitors, one per constraint, in model order.
std::vector<std::pair<std::string, Monitor>> local_monitors(
    const Model& m, Monitor::ReachMode mode = Monitor::ReachMode::eager);
/// Monitor of the conjunction of every constraint.
Monitor global_monitor(const Model& m, Monitor::ReachMode mode = Monitor::ReachMode::eager);

/// Task names whose execution next leads the monitor to perm_false. Empty
/// when the monitor is already in a permanent state.
std::vector<std::string> forbidden_tasks(const Monitor& m);

enum class Verdict : std::uint8_t { compliant, noncompliant };
constexpr std::string_view to_string(Verdict v) {
    return v == Verdict::compliant ? "compliant" : "noncompliant";
}

/// Verdict once the trace is declared complete: compliant iff the current
/// color is perm_true or temp_true.
Verdict finalize(const Monitor& m);

/// RV state reported after completion: perm_true when the trace satisfies
/// the formula, perm_false otherwise.
RVState completed_state(const Monitor& m);

}  // namespace ldlfmon::declare
