#ifndef PINPERM_DECISION_HPP
#define PINPERM_DECISION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pinperm/automaton.hpp"
#include "pinperm/permutation.hpp"
#include "pinperm/pin_language.hpp"

namespace pinperm {

struct NotSimpleElement : std::invalid_argument {
    explicit NotSimpleElement(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAntichain : std::invalid_argument {
    explicit NotAntichain(const std::string& what) : std::invalid_argument(what) {}
};

// A finite basis of simple permutations forming an antichain under pattern
// containment. Elements are deduplicated and kept sorted by (length, entries).
struct Basis {
    std::vector<Permutation> elements;
};

// Validates simplicity and the antichain property; duplicates are dropped.
// With minimize set, containment-comparable pairs are resolved by keeping
// the minimal elements (the class is unchanged) instead of throwing.
Basis validate_basis(std::vector<Permutation> elements, bool minimize = false);

enum class Verdict { finite, infinite };

const char* verdict_name(Verdict v);

struct PinDecision {
    Verdict verdict = Verdict::finite;
    std::optional<Lasso> witness; // present iff infinite
};

struct SymmetryDecision {
    Verdict verdict = Verdict::finite;
    std::optional<Symmetry> failing_symmetry; // present iff infinite
};

// The eight words every pin word image must avoid on top of the per-element
// factor sets.
const FactorSet& direction_pair_factors();

// Union of E(pi) over the basis elements (all of length >= 4).
FactorSet basis_factor_union(const Basis& b);

// Finiteness of the number of proper pin-permutations avoiding the basis:
// builds the factor automaton for the union of factor sets plus the eight
// direction pairs, complements it, and looks for an accessible co-accessible
// cycle. The lasso witness is normalized so its prefix alone is already a
// decodable M-word.
PinDecision decide_pin_finiteness(const Basis& b);
PinDecision decide_pin_finiteness_from_factors(const FactorSet& union_factors);

// Finitely many parallel alternations iff for each of the 8 symmetries some
// basis element avoids all of {123, 2413, 3412} mapped through it; the wedge
// variants use their own pattern sets.
SymmetryDecision decide_parallel_alternations(const Basis& b);
SymmetryDecision decide_wedge_type1(const Basis& b);
SymmetryDecision decide_wedge_type2(const Basis& b);

struct StageTimings {
    double pin_ms = 0;
    double alternations_ms = 0;
    double wedge1_ms = 0;
    double wedge2_ms = 0;
};

struct FinitenessReport {
    PinDecision pins;
    SymmetryDecision alternations;
    SymmetryDecision wedge1;
    SymmetryDecision wedge2;
    Verdict overall = Verdict::finite;
    // Set when a basis element of length <= 2 decided the question outright.
    std::string special_case;
    StageTimings timings;
};

// Validates the basis, applies the short-element special cases, and
// otherwise combines the four sub-deciders: the class contains finitely
// many simple permutations iff all four report finite.
FinitenessReport decide_overall(const std::vector<Permutation>& elements, bool minimize = false);

} // namespace pinperm

#endif
