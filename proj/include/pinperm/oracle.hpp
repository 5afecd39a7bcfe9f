#ifndef PINPERM_ORACLE_HPP
#define PINPERM_ORACLE_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pinperm/automaton.hpp"
#include "pinperm/permutation.hpp"
#include "pinperm/pin_geometry.hpp"

namespace pinperm {

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct EnumerationProfile {
    int max_length = 0;
    std::map<int, long long> counts; // length -> number of objects found
};

// Every pin sequence, proper or not, on the diagram points of p: all point
// orderings are tried and the separation/independence rules rechecked with
// naive scans at each step. Exponential; capped at |p| <= 9.
std::vector<PinSequence> oracle_pin_sequences(const Permutation& p);

// The order u <= w on pin words, by exhaustive search over decompositions
// of w: numeral-led factors must match verbatim, direction-led ones must
// agree on the tail and start in the quadrant named by the factor's numeral.
bool oracle_preceq(const std::string& u, const std::string& w);

// Counts, for each n <= max_length, the simple permutations of length n
// avoiding every basis element, by exhaustive generation with early
// pattern pruning. max_length is capped at 10.
EnumerationProfile oracle_simples_in_class(const std::vector<Permutation>& basis, int max_length);

// All accepted words of length <= max_length by breadth-first unrolling;
// max_length must not exceed twice the state count.
std::set<std::string> oracle_words_accepted(const FactorAutomaton& a, int max_length);

} // namespace pinperm

#endif
