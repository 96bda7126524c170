#include "ldlfmon/alphabet.hpp"

#include <stdexcept>

#include "ldlfmon/errors.hpp"

namespace ldlfmon {

Alphabet::Alphabet(Mode mode, std::vector<std::string> props) : mode_(mode), props_(std::move(props)) {
    if (props_.empty() && mode_ == Mode::tasks) throw std::invalid_argument("a task alphabet needs at least one task");
    for (std::size_t i = 0; i < props_.size(); ++i) {
        if (props_[i].empty()) throw std::invalid_argument("empty proposition name");
        if (!index_.emplace(props_[i], i).second)
            throw std::invalid_argument("duplicate proposition '" + props_[i] + "'");
    }
    if (mode_ == Mode::full) {
        if (props_.size() > max_full_props)
            throw std::invalid_argument("too many propositions for a full alphabet (max " +
                                        std::to_string(max_full_props) + ")");
        const Interpretation n = Interpretation{1} << props_.size();
        letters_.reserve(n);
        for (Interpretation i = 0; i < n; ++i) letters_.push_back(i);
    } else {
        if (props_.size() > max_task_props)
            throw std::invalid_argument("too many tasks (max " + std::to_string(max_task_props) + ")");
        for (std::size_t i = 0; i < props_.size(); ++i) letters_.push_back(Interpretation{1} << i);
    }
}

Alphabet Alphabet::full(std::vector<std::string> props) { return Alphabet(Mode::full, std::move(props)); }

Alphabet Alphabet::tasks(std::vector<std::string> tasks) { return Alphabet(Mode::tasks, std::move(tasks)); }

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Alphabet::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownSymbol(std::string(name));
}

std::optional<std::size_t> Alphabet::letter_index(Interpretation i) const {
    if (mode_ == Mode::full) {
        if (i < letters_.size()) return static_cast<std::size_t>(i);
        return std::nullopt;
    }
    if (i == 0 || (i & (i - 1)) != 0) return std::nullopt;
    std::size_t bit = 0;
    while ((Interpretation{1} << bit) != i) ++bit;
    if (bit >= props_.size()) return std::nullopt;
    return bit;
}

Interpretation Alphabet::interpretation(const std::vector<std::string>& true_props) const {
    Interpretation out = 0;
    for (const auto& p : true_props) out |= Interpretation{1} << index_of(p);
    return out;
}

Interpretation Alphabet::task(std::string_view name) const { return Interpretation{1} << index_of(name); }

std::vector<std::string> Alphabet::true_props(Interpretation i) const {
    std::vector<std::string> out;
    for (std::size_t b = 0; b < props_.size(); ++b)
        if (i & (Interpretation{1} << b)) out.push_back(props_[b]);
    return out;
}

std::string Alphabet::format(Interpretation i) const {
    auto names = true_props(i);
    if (mode_ == Mode::tasks && names.size() == 1) return names.front();
    std::string out = "{";
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (k) out += ",";
        out += names[k];
    }
    return out + "}";
}

}  // namespace ldlfmon
