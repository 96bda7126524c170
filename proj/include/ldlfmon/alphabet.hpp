#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ldlfmon {

/// Propositional interpretation: bit i set iff proposition i of the alphabet holds.
using Interpretation = std::uint64_t;

/// A finite trace: possibly empty sequence of interpretations.
using Trace = std::vector<Interpretation>;

/// Ordered set of proposition names together with the letters automata range over.
///
/// Two letter modes exist. `full` uses every interpretation in 2^P, which is the
/// general setting. `tasks` restricts letters to singleton interpretations, one
/// task per step, which is how Declare traces look.
class Alphabet {
public:
    enum class Mode : std::uint8_t { full, tasks };

    static constexpr std::size_t max_full_props = 16;
    static constexpr std::size_t max_task_props = 64;

    Alphabet() = default;

    static Alphabet full(std::vector<std::string> props);
    static Alphabet tasks(std::vector<std::string> tasks);

    Mode mode() const noexcept { return mode_; }
    const std::vector<std::string>& props() const noexcept { return props_; }
    std::size_t size() const noexcept { return props_.size(); }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws UnknownSymbol.
    std::size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    const std::vector<Interpretation>& letters() const noexcept { return letters_; }
    std::size_t letter_count() const noexcept { return letters_.size(); }
    /// Position of an interpretation in letters(), if it is a letter at all.
    std::optional<std::size_t> letter_index(Interpretation i) const;

    /// Builds an interpretation from proposition names. Throws UnknownSymbol.
    Interpretation interpretation(const std::vector<std::string>& true_props) const;
    /// The singleton letter of one task. Throws UnknownSymbol.
    Interpretation task(std::string_view name) const;

    /// `{a,b}` in full mode, the bare task name in tasks mode.
    std::string format(Interpretation i) const;
    std::vector<std::string> true_props(Interpretation i) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.mode_ == b.mode_ && a.props_ == b.props_;
    }

private:
    Alphabet(Mode mode, std::vector<std::string> props);

    Mode mode_ = Mode::full;
    std::vector<std::string> props_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Interpretation> letters_;
};

}  // namespace ldlfmon
