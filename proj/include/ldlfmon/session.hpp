#pragma once

#include <string>
#include <vector>

#include "ldlfmon/declare.hpp"
#include "ldlfmon/io.hpp"
#include "ldlfmon/metaconstraints.hpp"
#include "ldlfmon/monitor.hpp"

namespace ldlfmon {

/// Which monitors feed the forbidden-tasks row of a Declare timeline.
enum class ForbiddenView : std::uint8_t {
    /// Union of the tasks forbidden by the local monitors; "-" once the global
    /// monitor is in a permanent state. This is the row business users read.
    local,
    /// Tasks forbidden by the global monitor, which also reports tasks that
    /// only violate the conjunction.
    global,
};

/// Steps every local monitor and the global monitor of a model together.
class DeclareSession {
public:
    DeclareSession(const declare::Model& model, Monitor::ReachMode mode = Monitor::ReachMode::eager);

    /// Feeds one task to every monitor, in model order.
    void step(Interpretation letter);

    const std::vector<std::pair<std::string, Monitor>>& locals() const noexcept { return locals_; }
    const Monitor& global() const noexcept { return global_; }
    std::vector<std::string> forbidden(ForbiddenView view) const;

private:
    std::vector<std::pair<std::string, Monitor>> locals_;
    Monitor global_;
};

/// Local rows, global row and forbidden row for a complete trace.
Timeline declare_timeline(const declare::Model& model, const std::vector<TraceEvent>& trace,
                          ForbiddenView view = ForbiddenView::local,
                          Monitor::ReachMode mode = Monitor::ReachMode::eager);

/// Single-formula timeline; the row label is the formula text.
Timeline formula_timeline(Ldlf f, const std::string& label, const Alphabet& alphabet,
                          const std::vector<TraceEvent>& trace,
                          Monitor::ReachMode mode = Monitor::ReachMode::eager);

// ---------------------------------------------------------------------------
// Metaconstraint files
//
//   name: context <constraint> <rv-state> <task>
//   name: compensate <constraint> <constraint>
//   name: compensate-reactive <constraint> <constraint>
//   name: conflict <constraint> <constraint>
//   name: prefer <preferred> <other>
//
// A <constraint> is the name of a constraint of the accompanying Declare
// model or an inline LTLf formula in braces, e.g. {F return}.
// ---------------------------------------------------------------------------

struct MetaConstraint {
    std::string name;
    std::string kind;
    std::string source;
    /// Names of model constraints mentioned, in order of appearance.
    std::vector<std::string> references;
    MetaExpr expr;
    Ldlf expanded;
};

struct MetaModel {
    std::vector<MetaConstraint> constraints;
};

/// Throws SyntaxError / ModelError with line numbers.
MetaModel parse_meta_model(std::string_view text, const declare::Model& model, MetaExpander& expander);

/// Rows for the referenced constraints, then per metaconstraint its RV row,
/// a forbidden-tasks row for contextual absence and a conflict-mark row for
/// conflicts.
Timeline meta_timeline(const declare::Model& model, const MetaModel& meta, const std::vector<TraceEvent>& trace,
                       Monitor::ReachMode mode = Monitor::ReachMode::eager);

}  // namespace ldlfmon
