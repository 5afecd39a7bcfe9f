#ifndef PINPERM_AUTOMATON_HPP
#define PINPERM_AUTOMATON_HPP

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pinperm {

struct EmptyFactor : std::invalid_argument {
    explicit EmptyFactor(const std::string& what) : std::invalid_argument(what) {}
};

// The automaton layer works on the fixed 4-letter alphabet {L,R,U,D}.
inline constexpr std::array<char, 4> kAlphabet{'L', 'R', 'U', 'D'};

int letter_index(char c);

// A complete deterministic automaton: every state has exactly one transition
// per letter. Immutable once built; queries are plain table lookups.
struct FactorAutomaton {
    std::vector<std::array<int, 4>> next;
    std::vector<char> accepting;
    int start = 0;

    int state_count() const { return static_cast<int>(next.size()); }
    bool accepts(std::string_view word) const;
};

// Aho-Corasick automaton accepting exactly the words that contain some
// element of fs as a factor. Accepting states are absorbing. The state count
// is at most 1 plus the total factor length.
FactorAutomaton build_factor_automaton(const std::set<std::string>& fs);

// Exchanges accepting and non-accepting states.
FactorAutomaton complement(FactorAutomaton a);

// Witness of an infinite language: prefix . cycle^k . suffix is accepted for
// every k >= 0. In the decision pipeline the suffix is always empty, so
// prefix . cycle^k itself is accepted.
struct Lasso {
    std::string prefix;
    std::string cycle;
    std::string suffix;
};

// A lasso if some cycle is reachable from the start state and can reach an
// accepting state; absent iff the language of a is finite.
std::optional<Lasso> has_accessible_coaccessible_cycle(const FactorAutomaton& a);

// Graphviz export, accepting states as double circles.
std::string to_dot(const FactorAutomaton& a);

} // namespace pinperm

#endif
