#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ldlfmon {

/// The four runtime-verification verdicts over finite traces.
enum class RVState : std::uint8_t { perm_true, temp_true, temp_false, perm_false };

inline constexpr std::array<RVState, 4> all_rv_states = {
    RVState::perm_true, RVState::temp_true, RVState::temp_false, RVState::perm_false};

constexpr std::string_view to_string(RVState s) {
    switch (s) {
        case RVState::perm_true: return "perm_true";
        case RVState::temp_true: return "temp_true";
        case RVState::temp_false: return "temp_false";
        case RVState::perm_false: return "perm_false";
    }
    return "?";
}

inline std::optional<RVState> parse_rv_state(std::string_view text) {
    for (RVState s : all_rv_states)
        if (to_string(s) == text) return s;
    if (text == "true") return RVState::perm_true;
    if (text == "false") return RVState::perm_false;
    return std::nullopt;
}

constexpr bool is_permanent(RVState s) {
    return s == RVState::perm_true || s == RVState::perm_false;
}

constexpr bool is_satisfied(RVState s) {
    return s == RVState::perm_true || s == RVState::temp_true;
}

}  // namespace ldlfmon
