#include "pinperm/decision.hpp"

#include <algorithm>
#include <chrono>

#include "pinperm/pin_geometry.hpp"

namespace pinperm {

const char* verdict_name(Verdict v) { return v == Verdict::finite ? "finite" : "infinite"; }

Basis validate_basis(std::vector<Permutation> elements, bool minimize) {
    std::sort(elements.begin(), elements.end(), [](const Permutation& a, const Permutation& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.entries() < b.entries();
    });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    for (const Permutation& p : elements)
        if (!is_simple(p))
            throw NotSimpleElement("basis element is not simple: " + p.str());

    // With the elements sorted by length, a containment can only point from
    // a later element to an earlier one.
    std::vector<char> drop(elements.size(), 0);
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (drop[j])
                continue;
            if (contains_pattern(elements[i], elements[j])) {
                if (!minimize)
                    throw NotAntichain("basis is not an antichain: " + elements[j].str() +
                                       " is contained in " + elements[i].str());
                drop[i] = 1;
                break;
            }
        }
    Basis b;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!drop[i])
            b.elements.push_back(std::move(elements[i]));
    return b;
}

const FactorSet& direction_pair_factors() {
    static const FactorSet factors{"LL", "LR", "RL", "RR", "UU", "UD", "DU", "DD"};
    return factors;
}

FactorSet basis_factor_union(const Basis& b) {
    FactorSet all;
    for (const Permutation& pi : b.elements) {
        FactorSet fs = factor_set(pi);
        all.insert(fs.begin(), fs.end());
    }
    return all;
}

PinDecision decide_pin_finiteness_from_factors(const FactorSet& union_factors) {
    FactorSet factors = union_factors;
    const FactorSet& base = direction_pair_factors();
    factors.insert(base.begin(), base.end());

    const FactorAutomaton avoiding = complement(build_factor_automaton(factors));
    PinDecision decision;
    auto lasso = has_accessible_coaccessible_cycle(avoiding);
    if (!lasso) {
        decision.verdict = Verdict::finite;
        return decision;
    }
    decision.verdict = Verdict::infinite;
    // Every accepted word avoids the eight direction pairs, so the witness
    // is alternating and its states are all accepting: the suffix is empty.
    // Fold cycle turns into the prefix until it is long enough to be an
    // M-word on its own; prefix . cycle^k stays accepted for every k.
    while (lasso->prefix.size() < 3)
        lasso->prefix += lasso->cycle;
    decision.witness = std::move(lasso);
    return decision;
}

PinDecision decide_pin_finiteness(const Basis& b) {
    return decide_pin_finiteness_from_factors(basis_factor_union(b));
}

namespace {

SymmetryDecision check_all_symmetries(const Basis& b, const std::vector<Permutation>& patterns) {
    for (int si = 0; si < kSymmetryCount; ++si) {
        const auto s = static_cast<Symmetry>(si);
        std::vector<Permutation> mapped;
        mapped.reserve(patterns.size());
        for (const Permutation& x : patterns)
            mapped.push_back(apply_symmetry(x, s));
        bool found = false;
        for (const Permutation& beta : b.elements) {
            bool avoids_all = true;
            for (const Permutation& x : mapped)
                if (contains_pattern(beta, x)) {
                    avoids_all = false;
                    break;
                }
            if (avoids_all) {
                found = true;
                break;
            }
        }
        if (!found)
            return SymmetryDecision{Verdict::infinite, s};
    }
    return SymmetryDecision{Verdict::finite, std::nullopt};
}

std::vector<Permutation> patterns_of(std::initializer_list<const char*> texts) {
    std::vector<Permutation> out;
    for (const char* t : texts)
        out.push_back(Permutation::parse(t));
    return out;
}

} // namespace

SymmetryDecision decide_parallel_alternations(const Basis& b) {
    static const std::vector<Permutation> patterns =
        patterns_of({"1 2 3", "2 4 1 3", "3 4 1 2"});
    return check_all_symmetries(b, patterns);
}

SymmetryDecision decide_wedge_type1(const Basis& b) {
    static const std::vector<Permutation> patterns =
        patterns_of({"1 2 4 3", "1 3 2 4", "1 4 2 3", "1 4 3 2", "2 4 3 1", "3 1 2 4",
                     "4 1 2 3", "4 1 3 2", "4 2 3 1", "4 3 1 2"});
    return check_all_symmetries(b, patterns);
}

SymmetryDecision decide_wedge_type2(const Basis& b) {
    static const std::vector<Permutation> patterns =
        patterns_of({"2 1 3 4", "2 1 4 3", "3 1 2 4", "3 1 4 2", "3 2 4 1", "3 4 1 2",
                     "4 1 2 3", "4 1 3 2", "4 2 3 1", "4 3 1 2"});
    return check_all_symmetries(b, patterns);
}

FinitenessReport decide_overall(const std::vector<Permutation>& elements, bool minimize) {
    const Basis basis = validate_basis(elements, minimize);
    FinitenessReport report;

    // After antichain validation a length <= 2 element cannot coexist with a
    // longer one, so these short-circuits cover the whole basis.
    for (const Permutation& p : basis.elements) {
        if (p.size() == 1)
            report.special_case = "basis contains 1: the class is empty";
        else if (p.size() == 2)
            report.special_case =
                "basis contains " + p.str() + ": the class holds only monotone permutations";
    }
    if (!report.special_case.empty()) {
        report.overall = Verdict::finite;
        return report;
    }

    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    auto t0 = clock::now();
    report.pins = decide_pin_finiteness(basis);
    report.timings.pin_ms = ms_since(t0);

    t0 = clock::now();
    report.alternations = decide_parallel_alternations(basis);
    report.timings.alternations_ms = ms_since(t0);

    t0 = clock::now();
    report.wedge1 = decide_wedge_type1(basis);
    report.timings.wedge1_ms = ms_since(t0);

    t0 = clock::now();
    report.wedge2 = decide_wedge_type2(basis);
    report.timings.wedge2_ms = ms_since(t0);

    const bool all_finite =
        report.pins.verdict == Verdict::finite && report.alternations.verdict == Verdict::finite &&
        report.wedge1.verdict == Verdict::finite && report.wedge2.verdict == Verdict::finite;
    report.overall = all_finite ? Verdict::finite : Verdict::infinite;
    return report;
}

} // namespace pinperm
