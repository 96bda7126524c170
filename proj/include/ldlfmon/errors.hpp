#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldlfmon {

/// Malformed formula, path expression, model or metaconstraint text.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, std::size_t offset, std::size_t line = 0)
        : std::runtime_error(message), offset_(offset), line_(line) {}

    /// Byte offset of the offending token within the parsed text.
    std::size_t offset() const noexcept { return offset_; }
    /// 1-based line number for multi-line inputs, 0 when not applicable.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t offset_;
    std::size_t line_;
};

/// A proposition or task name that is not part of the alphabet in use.
class UnknownSymbol : public std::runtime_error {
public:
    explicit UnknownSymbol(const std::string& name)
        : std::runtime_error("unknown proposition or task '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Two automata (or an automaton and a trace) built over different alphabets.
class AlphabetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Structured input files (models, traces, metaconstraints) that are well-formed
/// text but violate a semantic rule.
class ModelError : public std::runtime_error {
public:
    ModelError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Broken internal invariant (a bug, not a user error).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ldlfmon
