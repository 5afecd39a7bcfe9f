#ifndef PINPERM_PIN_GEOMETRY_HPP
#define PINPERM_PIN_GEOMETRY_HPP

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pinperm/permutation.hpp"

namespace pinperm {

struct NotSimple : std::invalid_argument {
    explicit NotSimple(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidPinWord : std::invalid_argument {
    explicit InvalidPinWord(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidRepresentation : std::invalid_argument {
    explicit InvalidRepresentation(const std::string& what) : std::invalid_argument(what) {}
};

// A pin: a lattice point. col is the x coordinate, row the y (value) one.
struct Point {
    long long col = 0;
    long long row = 0;
    auto operator<=>(const Point&) const = default;
};

// A sequence of pins where no two share a column or row and every pin from
// the second on lies outside the bounding box of its predecessors and either
// separates the previous pin from the earlier ones or is independent.
struct PinSequence {
    std::vector<Point> points;

    bool valid() const;
    // True iff every pin from the third on separates (no independent pins).
    bool proper() const;
    // The permutation order isomorphic to the point set.
    Permutation to_permutation() const;

    auto operator<=>(const PinSequence&) const = default;
};

// All ordered pairs (a, b) of diagram points of p at offset {1,2}, i.e. with
// {|dcol|, |drow|} = {1, 2}.
std::vector<std::pair<Point, Point>> knight_pairs(const Permutation& p);

// The unique proper pin sequence on all diagram points of p that begins with
// start, if one exists. Candidate next pins are the column neighbours of the
// last pin and the points holding the neighbouring values, each tested
// against the separation condition.
std::optional<PinSequence> extend_proper_representation(const Permutation& p,
                                                        const std::pair<Point, Point>& start);

// All pin words encoding rep, one per admissible origin cell around the
// first two pins. rep must be a valid pin sequence of length >= 2.
std::set<std::string> pin_words_of_representation(const PinSequence& rep);

// The set of all pin words encoding the simple permutation p; empty iff p is
// not a pin-permutation. Collects the ordered knight pairs, gives up if more
// than 48 are found, and otherwise extends each pair to a proper
// representation and gathers its encodings.
std::set<std::string> pin_words(const Permutation& p);

// The permutation encoded by a pin word. The origin used while decoding is
// dropped from the result. Throws InvalidPinWord when a letter contradicts
// the geometry (this covers the eight forbidden direction factors).
Permutation decode_pin_word(const std::string& word);

} // namespace pinperm

#endif
