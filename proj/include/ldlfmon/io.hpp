#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldlfmon/alphabet.hpp"
#include "ldlfmon/automaton.hpp"
#include "ldlfmon/monitor.hpp"

namespace ldlfmon {

// ---------------------------------------------------------------------------
// Traces
//
// One event per line. A line is either a JSON string (a task name, or the
// single true proposition in a full alphabet) or a JSON array of the true
// propositions. Blank lines and lines starting with '#' are skipped; a line
// reading `:end` (bare or as a JSON string) closes the trace. Bare words are
// accepted as task names for interactive use.
// ---------------------------------------------------------------------------

struct TraceEvent {
    Interpretation letter;
    std::string text;  // as rendered in timelines
    std::size_t line;
};

struct ParsedTrace {
    std::vector<TraceEvent> events;
    /// An explicit `:end` was read; end of input also completes a trace.
    bool terminated = false;
};

/// Kind of a single input line.
enum class LineKind : std::uint8_t { event, skip, end };

/// Parses one line. Throws ModelError (with the line number) for malformed
/// JSON, unknown names, or events that are not letters of the alphabet
/// (e.g. two tasks at once in a task alphabet).
LineKind parse_event_line(std::string_view line, const Alphabet& alphabet, std::size_t line_no,
                          TraceEvent& out);

/// Reads a whole trace; stops at `:end`.
ParsedTrace read_trace(std::istream& in, const Alphabet& alphabet);

// ---------------------------------------------------------------------------
// Automata
// ---------------------------------------------------------------------------

/// JSON with the alphabet, initial state, per-state finality (and color when
/// given), and transitions listing the explicit interpretations of each edge.
std::string automaton_json(const Dfa& d, const std::vector<RVState>* colors = nullptr);
std::string automaton_json(const Nfa& n);

struct LoadedAutomaton {
    Nfa nfa;
    std::optional<std::vector<RVState>> colors;
};

/// Reads the format written by automaton_json. Throws ModelError.
LoadedAutomaton load_automaton_json(std::string_view text);

/// GraphViz rendering; edges between the same pair of states are merged and
/// labelled with a compressed propositional guard.
std::string automaton_dot(const Nfa& n, const std::vector<RVState>* colors = nullptr);
std::string automaton_dot(const ColoredDfa& c);

// ---------------------------------------------------------------------------
// Timelines
// ---------------------------------------------------------------------------

/// Rows of RV states (or free text) over the columns begin, e1, ..., en, end.
struct Timeline {
    struct Row {
        enum class Kind : std::uint8_t { heading, states, text };
        Kind kind = Kind::states;
        std::string label;
        std::vector<RVState> states;     // Kind::states, one per column
        std::vector<std::string> cells;  // Kind::text, at most one per column
    };

    std::vector<std::string> columns;
    std::vector<Row> rows;
    /// (label, "compliant"/"noncompliant"), printed after the table.
    std::vector<std::pair<std::string, std::string>> verdicts;
};

/// Fixed-width table. With `ansi`, RV states are colored for a terminal.
std::string render_ascii(const Timeline& t, bool ansi = false);
/// {"columns": [...], "rows": [{"label", "kind", "timeline": [{step_index,
/// event, rv_state}] | "cells": [...]}], "verdicts": {...}}
std::string render_json(const Timeline& t);
/// The plain JSON array [{step_index, event, rv_state}, ...] of one row.
std::string render_json_row(const Timeline& t, const Timeline::Row& row);

}  // namespace ldlfmon
