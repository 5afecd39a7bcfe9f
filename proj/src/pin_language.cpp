#include "pinperm/pin_language.hpp"

#include <array>

namespace pinperm {

namespace {

bool numeral(char c) { return c == '1' || c == '2' || c == '3' || c == '4'; }
bool direction(char c) { return c == 'U' || c == 'D' || c == 'L' || c == 'R'; }
bool horizontal(char c) { return c == 'L' || c == 'R'; } // {L,R} family

// n*4 + d with d indexed over U,D,L,R.
int pair_index(char n, char d) {
    const int ni = n - '1';
    const int di = d == 'U' ? 0 : d == 'D' ? 1 : d == 'L' ? 2 : 3;
    return ni * 4 + di;
}

// phi on the leading numeral-direction pair, indexed by pair_index.
constexpr std::array<const char*, 16> kPairTable{
    "URU", "URD", "RUL", "RUR", // 1U 1D 1L 1R
    "ULU", "ULD", "LUL", "LUR", // 2U 2D 2L 2R
    "DLU", "DLD", "LDL", "LDR", // 3U 3D 3L 3R
    "DRU", "DRD", "RDL", "RDR", // 4U 4D 4L 4R
};

// Two-letter extension of phi to single numerals: each numeral owns the two
// orderings of its direction pair.
char numeral_of_direction_pair(char a, char b) {
    if ((a == 'U' && b == 'R') || (a == 'R' && b == 'U')) return '1';
    if ((a == 'U' && b == 'L') || (a == 'L' && b == 'U')) return '2';
    if ((a == 'D' && b == 'L') || (a == 'L' && b == 'D')) return '3';
    if ((a == 'D' && b == 'R') || (a == 'R' && b == 'D')) return '4';
    return 0;
}

} // namespace

bool is_valid_pin_word(const std::string& w) {
    if (w.empty() || !numeral(w[0]))
        return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const char c = w[i];
        if (!numeral(c) && !direction(c))
            return false;
        if (i > 0 && direction(w[i - 1]) && direction(c) &&
            horizontal(w[i - 1]) == horizontal(c))
            return false;
    }
    return true;
}

PinWordKind classify(const std::string& w) {
    if (w.size() < 2)
        return PinWordKind::other;
    std::size_t numerals = 0;
    while (numerals < w.size() && numeral(w[numerals]))
        ++numerals;
    for (std::size_t i = numerals; i < w.size(); ++i)
        if (!direction(w[i]))
            return PinWordKind::other; // a numeral after some direction
    if (numerals == 1)
        return PinWordKind::strict;
    if (numerals == 2)
        return PinWordKind::quasi_strict;
    return PinWordKind::other;
}

bool in_m_language(const std::string& m) {
    if (m.size() < 3)
        return false;
    for (char c : m)
        if (!direction(c))
            return false;
    for (std::size_t i = 1; i < m.size(); ++i)
        if (horizontal(m[i - 1]) == horizontal(m[i]))
            return false;
    return true;
}

std::string phi(const std::string& u) {
    if (classify(u) != PinWordKind::strict)
        throw NotStrict("phi expects a strict pin word, got: " + u);
    return kPairTable[static_cast<std::size_t>(pair_index(u[0], u[1]))] + u.substr(2);
}

std::string phi_inverse(const std::string& m) {
    if (!in_m_language(m))
        throw NotInM("phi_inverse expects an M-word of length >= 3, got: " + m);
    const char n = numeral_of_direction_pair(m[0], m[1]);
    return std::string(1, n) + m.substr(2);
}

char quadrant(char a, char b) {
    if (direction(a) && direction(b)) {
        const char n = numeral_of_direction_pair(a, b);
        if (!n)
            throw IncompatiblePair(std::string("directions '") + a + "' and '" + b +
                                   "' are from the same family");
        return n;
    }
    if (numeral(a) && direction(b)) {
        const char* image = kPairTable[static_cast<std::size_t>(pair_index(a, b))];
        return numeral_of_direction_pair(image[1], image[2]);
    }
    throw IncompatiblePair(std::string("no quadrant for letter pair '") + a + "', '" + b + "'");
}

FactorSet factor_set(const Permutation& pi) {
    if (!is_simple(pi))
        throw NotSimple("factor sets are only defined for simple permutations: " + pi.str());
    if (pi.size() < 4)
        throw TooShort("factor sets need length >= 4; length-1 and length-2 basis "
                       "elements are handled by the decision layer");
    FactorSet fs;
    for (const std::string& u : pin_words(pi)) {
        switch (classify(u)) {
            case PinWordKind::strict:
                fs.insert(phi(u));
                break;
            case PinWordKind::quasi_strict: {
                const std::string tail = phi(u.substr(1));
                // The glued prefix must keep the word alternating, which
                // pins down the family of its second letter.
                static constexpr std::array<const char*, 4> ends_vertical{"LU", "LD", "RU", "RD"};
                static constexpr std::array<const char*, 4> ends_horizontal{"UL", "UR", "DL", "DR"};
                const auto& prefixes = horizontal(tail[0]) ? ends_vertical : ends_horizontal;
                for (const char* x : prefixes)
                    fs.insert(x + tail);
                break;
            }
            case PinWordKind::other:
                // Pin words of simple permutations are strict or quasi-strict.
                throw InvalidPinWord("unexpected pin word kind for a simple permutation: " + u);
        }
    }
    return fs;
}

bool contains_factor_from(const std::string& m, const FactorSet& fs) {
    for (const std::string& f : fs)
        if (m.find(f) != std::string::npos)
            return true;
    return false;
}

FactorSet prune_subsumed(const FactorSet& fs) {
    FactorSet pruned;
    for (const std::string& f : fs) {
        bool subsumed = false;
        for (const std::string& g : fs)
            if (g.size() < f.size() && f.find(g) != std::string::npos) {
                subsumed = true;
                break;
            }
        if (!subsumed)
            pruned.insert(f);
    }
    return pruned;
}

std::string serialize(const FactorSet& fs) {
    std::string out;
    for (const std::string& f : fs) {
        out += f;
        out += '\n';
    }
    return out;
}

} // namespace pinperm
