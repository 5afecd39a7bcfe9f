#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pinperm/automaton.hpp"
#include "test_support.hpp"

using namespace pinperm;
using namespace pinperm::test;

namespace {

std::vector<std::string> all_words(int length) {
    std::vector<std::string> words;
    words.reserve(1u << (2 * length));
    std::string w(static_cast<std::size_t>(length), 'L');
    for (long code = 0; code < (1L << (2 * length)); ++code) {
        long c = code;
        for (int i = 0; i < length; ++i, c >>= 2)
            w[static_cast<std::size_t>(i)] = kAlphabet[static_cast<std::size_t>(c & 3)];
        words.push_back(w);
    }
    return words;
}

std::set<std::string> random_factor_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> count_dist(1, 6);
    std::uniform_int_distribution<int> len_dist(1, 6);
    std::uniform_int_distribution<int> letter_dist(0, 3);
    std::set<std::string> fs;
    int budget = 20;
    const int count = count_dist(rng);
    for (int i = 0; i < count && budget > 0; ++i) {
        const int len = std::min(len_dist(rng), budget);
        std::string f;
        for (int j = 0; j < len; ++j)
            f += kAlphabet[static_cast<std::size_t>(letter_dist(rng))];
        budget -= len;
        fs.insert(f);
    }
    return fs;
}

bool lasso_is_valid(const FactorAutomaton& a, const Lasso& lasso) {
    for (int k : {0, 1, 2, 5}) {
        std::string word = lasso.prefix;
        for (int i = 0; i < k; ++i)
            word += lasso.cycle;
        word += lasso.suffix;
        if (!a.accepts(word))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("single-factor automaton") {
    const FactorAutomaton a = build_factor_automaton({"LL"});
    CHECK(a.accepts("ULLU"));
    CHECK(a.accepts("LL"));
    CHECK_FALSE(a.accepts("LULU"));
    CHECK_FALSE(a.accepts(""));
    CHECK(complement(a).accepts("LULU"));
    CHECK_FALSE(complement(a).accepts("ULLU"));
}

TEST_CASE("empty factor set accepts nothing") {
    const FactorAutomaton a = build_factor_automaton({});
    CHECK(a.state_count() == 1);
    CHECK_FALSE(a.accepts(""));
    CHECK_FALSE(a.accepts("LURD"));
    CHECK(complement(a).accepts(""));
    CHECK(complement(a).accepts("LLLL"));
}

TEST_CASE("all 16 two-letter factors accept every word of length >= 2") {
    std::set<std::string> fs;
    for (char a : kAlphabet)
        for (char b : kAlphabet)
            fs.insert(std::string{a, b});
    const FactorAutomaton automaton = build_factor_automaton(fs);
    for (int n = 0; n <= 4; ++n)
        for (const std::string& w : all_words(n))
            CHECK(automaton.accepts(w) == (n >= 2));
    // only words of length <= 1 survive in the complement; finite language
    CHECK_FALSE(has_accessible_coaccessible_cycle(complement(automaton)).has_value());
}

TEST_CASE("empty factors are rejected") {
    CHECK_THROWS_AS(build_factor_automaton({""}), EmptyFactor);
}

TEST_CASE("state count bound") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto fs = random_factor_set(rng);
        std::size_t total = 0;
        for (const std::string& f : fs)
            total += f.size();
        CHECK(build_factor_automaton(fs).state_count() <= static_cast<int>(1 + total));
    }
}

TEST_CASE("complement is an involution on sample languages") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const FactorAutomaton a = build_factor_automaton(random_factor_set(rng));
        const FactorAutomaton back = complement(complement(a));
        for (int n = 0; n <= 5; ++n)
            for (const std::string& w : all_words(n))
                CHECK(a.accepts(w) == back.accepts(w));
    }
}

TEST_CASE("the direction-pair complement has a pumpable cycle") {
    const FactorAutomaton avoid =
        complement(build_factor_automaton({"LL", "LR", "RL", "RR", "UU", "UD", "DU", "DD"}));
    const auto lasso = has_accessible_coaccessible_cycle(avoid);
    REQUIRE(lasso.has_value());
    CHECK(!lasso->cycle.empty());
    CHECK(lasso_is_valid(avoid, *lasso));
    // alternating words avoid all eight factors
    CHECK(avoid.accepts("LULU"));
}

TEST_CASE("an automaton with no accepting state has no witness") {
    FactorAutomaton a = build_factor_automaton({"LL"});
    for (auto& f : a.accepting)
        f = 0;
    CHECK_FALSE(has_accessible_coaccessible_cycle(a).has_value());
}

TEST_CASE("random agreement with naive search, pumping oracle, and lasso validity") {
    std::mt19937 rng(20260810);
    const auto probes = all_words(6);
    for (int trial = 0; trial < 200; ++trial) {
        const auto fs = random_factor_set(rng);
        const FactorAutomaton a = build_factor_automaton(fs);
        for (int n = 0; n <= 3; ++n)
            for (const std::string& w : all_words(n))
                CHECK(a.accepts(w) == naive_has_factor(w, fs));
        for (std::size_t i = trial % 7; i < probes.size(); i += 7)
            CHECK(a.accepts(probes[i]) == naive_has_factor(probes[i], fs));

        for (const FactorAutomaton& m : {a, complement(a)}) {
            const auto lasso = has_accessible_coaccessible_cycle(m);
            const bool infinite =
                accepts_word_with_length_in(m, m.state_count(), 2 * m.state_count());
            CHECK(lasso.has_value() == infinite);
            if (lasso)
                CHECK(lasso_is_valid(m, *lasso));
        }
    }
}

TEST_CASE("dot export mentions every state") {
    const FactorAutomaton a = build_factor_automaton({"LU"});
    const std::string dot = to_dot(a);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("q0 -> ") != std::string::npos);
}
