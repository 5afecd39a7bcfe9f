#ifndef PINPERM_PIN_LANGUAGE_HPP
#define PINPERM_PIN_LANGUAGE_HPP

#include <set>
#include <stdexcept>
#include <string>

#include "pinperm/permutation.hpp"
#include "pinperm/pin_geometry.hpp"

namespace pinperm {

struct NotStrict : std::invalid_argument {
    explicit NotStrict(const std::string& what) : std::invalid_argument(what) {}
};

struct NotInM : std::invalid_argument {
    explicit NotInM(const std::string& what) : std::invalid_argument(what) {}
};

struct IncompatiblePair : std::invalid_argument {
    explicit IncompatiblePair(const std::string& what) : std::invalid_argument(what) {}
};

struct TooShort : std::invalid_argument {
    explicit TooShort(const std::string& what) : std::invalid_argument(what) {}
};

enum class PinWordKind { strict, quasi_strict, other };

// Syntactic pin word check: letters in {1,2,3,4,U,D,L,R}, leading numeral,
// none of the factors UU, UD, DU, DD, LL, LR, RL, RR.
bool is_valid_pin_word(const std::string& w);

// strict: one leading numeral then directions only; quasi-strict: exactly
// two leading numerals then directions only. Both need length >= 2.
PinWordKind classify(const std::string& w);

// Words over {L,R,U,D} of length >= 3 alternating between the {L,R} and
// {U,D} families.
bool in_m_language(const std::string& m);

// The bijection from strict pin words of length n to M-words of length n+1:
// the leading numeral-direction pair maps through a 16-row table, the tail
// is kept.
std::string phi(const std::string& strict_word);
std::string phi_inverse(const std::string& m_word);

// The quadrant in which the pin of letter b lies, given the preceding
// letter a: for two alternating directions this inverts the length-2
// extension of phi; for a numeral followed by a direction it reads the
// quadrant off phi(ab).
char quadrant(char a, char b);

using FactorSet = std::set<std::string>;

// E(pi) for a simple permutation pi of length >= 4: the phi images of its
// strict pin words, plus, for each quasi-strict pin word, the four
// alternation-compatible two-letter prefixes glued to the phi image of its
// tail.
FactorSet factor_set(const Permutation& pi);

bool contains_factor_from(const std::string& m, const FactorSet& fs);

// Drops factors that contain another factor of the set; the recognized
// "contains a factor" language is unchanged.
FactorSet prune_subsumed(const FactorSet& fs);

// Canonical form: sorted, newline-separated, trailing newline.
std::string serialize(const FactorSet& fs);

} // namespace pinperm

#endif
