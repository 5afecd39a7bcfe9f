#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "pinperm/oracle.hpp"
#include "pinperm/pin_language.hpp"
#include "test_support.hpp"

using namespace pinperm;
using namespace pinperm::test;

TEST_CASE("pin word classification") {
    CHECK(classify("3DL2UR") == PinWordKind::other); // numeral in fourth position
    CHECK(classify("1RD") == PinWordKind::strict);
    CHECK(classify("14LUR") == PinWordKind::quasi_strict);
    CHECK(classify("14") == PinWordKind::quasi_strict);
    CHECK(classify("1") == PinWordKind::other);
    CHECK(classify("144U") == PinWordKind::other);
}

TEST_CASE("pin word validity") {
    CHECK(is_valid_pin_word("3DL2UR"));
    CHECK(is_valid_pin_word("1"));
    CHECK_FALSE(is_valid_pin_word("1RR"));  // same-family factor
    CHECK_FALSE(is_valid_pin_word("U1"));   // leading direction
    CHECK_FALSE(is_valid_pin_word(""));
    CHECK_FALSE(is_valid_pin_word("1x"));
}

TEST_CASE("the 16-row table of phi") {
    const std::map<std::string, std::string> table{
        {"1R", "RUR"}, {"2R", "LUR"}, {"3R", "LDR"}, {"4R", "RDR"},
        {"1L", "RUL"}, {"2L", "LUL"}, {"3L", "LDL"}, {"4L", "RDL"},
        {"1U", "URU"}, {"2U", "ULU"}, {"3U", "DLU"}, {"4U", "DRU"},
        {"1D", "URD"}, {"2D", "ULD"}, {"3D", "DLD"}, {"4D", "DRD"},
    };
    for (const auto& [u, image] : table) {
        CHECK(phi(u) == image);
        CHECK(phi_inverse(image) == u);
    }
}

TEST_CASE("phi on longer words") {
    CHECK(phi("2URD") == "ULURD");
    CHECK(phi("1R") == "RUR");
    CHECK_THROWS_AS(phi("3DL2UR"), NotStrict);
    CHECK_THROWS_AS(phi("1"), NotStrict);
    CHECK_THROWS_AS(phi_inverse("RRU"), NotInM);
    CHECK_THROWS_AS(phi_inverse("RU"), NotInM);
}

TEST_CASE("phi is a bijection between strict pin words and M-words") {
    for (int n = 2; n <= 6; ++n) {
        const auto sp = strict_pin_words(n);
        const auto m = alternating_words(n + 1);
        CHECK(sp.size() == static_cast<std::size_t>(4 * (1 << n)));
        CHECK(m.size() == sp.size());
        std::set<std::string> images;
        for (const std::string& u : sp) {
            const std::string image = phi(u);
            CHECK(image.size() == u.size() + 1);
            CHECK(in_m_language(image));
            CHECK(phi_inverse(image) == u);
            // letter preservation beyond the leading pair
            for (std::size_t i = 1; i < u.size(); ++i)
                CHECK(image[i + 1] == u[i]);
            images.insert(image);
        }
        CHECK(images == std::set<std::string>(m.begin(), m.end()));
        for (const std::string& w : m)
            CHECK(phi(phi_inverse(w)) == w);
    }
}

TEST_CASE("quadrants") {
    CHECK(quadrant('L', 'U') == '2');
    CHECK(quadrant('1', 'L') == '2');
    CHECK(quadrant('R', 'U') == '1');
    CHECK(quadrant('R', 'D') == '4');
    CHECK(quadrant('3', 'U') == '2'); // phi(3U) = DLU, phi_inverse(LU) = 2
    CHECK_THROWS_AS(quadrant('L', 'R'), IncompatiblePair);
    CHECK_THROWS_AS(quadrant('1', '2'), IncompatiblePair);
    CHECK_THROWS_AS(quadrant('U', '1'), IncompatiblePair);
}

TEST_CASE("factor sets of the running examples") {
    CHECK(factor_set(Permutation::parse("4 7 2 6 3 1 5")).empty());
    const FactorSet fs = factor_set(Permutation::parse("2 4 1 3"));
    CHECK(!fs.empty());
    for (const std::string& f : fs)
        CHECK(in_m_language(f));
    CHECK_THROWS_AS(factor_set(Permutation::parse("4 6 2 3 1 5")), NotSimple);
    CHECK_THROWS_AS(factor_set(Permutation::parse("1 2")), TooShort);
}

TEST_CASE("factor set sizes stay within the bound on exhaustive simples") {
    for (int n : {4, 5, 6}) {
        for (const Permutation& p : all_simple_permutations(n)) {
            const FactorSet fs = factor_set(p);
            CHECK(fs.size() <= 256);
            for (const std::string& f : fs)
                CHECK(in_m_language(f));
        }
    }
}

TEST_CASE("factor containment") {
    CHECK(contains_factor_from("RUR", {"RUR"}));
    CHECK(contains_factor_from("RURD", {"URD"}));
    CHECK_FALSE(contains_factor_from("RUL", {"RUR"}));
    CHECK_FALSE(contains_factor_from("RUL", {}));
}

TEST_CASE("pruning subsumed factors keeps the language") {
    const FactorSet fs{"LU", "LUL", "RDRD", "DR", "URDR"};
    const FactorSet pruned = prune_subsumed(fs);
    CHECK(pruned == FactorSet{"LU", "DR"});
    for (int n = 0; n <= 8; ++n)
        for (const std::string& w : alternating_words(n))
            CHECK(naive_has_factor(w, fs) == naive_has_factor(w, pruned));
}

TEST_CASE("serialization is the sorted newline form") {
    CHECK(serialize(FactorSet{"RUR", "LDL"}) == "LDL\nRUR\n");
    CHECK(serialize(FactorSet{}).empty());
}

TEST_CASE("golden factor set of 2413") {
    // Frozen from the 48 pin words of 2413 (16 strict, 32 quasi-strict),
    // which the brute-force decode test pins down, pushed through the
    // 16-row table and the quasi-strict prefix rule.
    const std::string golden =
        "DLDRDL\nDLDRUR\nDLULDL\nDLULU\nDLULUR\nDLURD\nDRDLU\nDRDRD\nDRDRDL\nDRDRUR\n"
        "DRULDL\nDRULUR\nLDLDL\nLDLDLU\nLDLDRD\nLDLUR\nLDRULU\nLDRURD\nLULDLU\nLULDRD\n"
        "LURDL\nLURULU\nLURUR\nLURURD\nRDLDL\nRDLDLU\nRDLDRD\nRDLUR\nRDRULU\nRDRURD\n"
        "RULDLU\nRULDRD\nRURDL\nRURULU\nRURUR\nRURURD\nULDRDL\nULDRUR\nULULDL\nULULU\n"
        "ULULUR\nULURD\nURDLU\nURDRD\nURDRDL\nURDRUR\nURULDL\nURULUR\n";
    const FactorSet fs = factor_set(Permutation::parse("2 4 1 3"));
    CHECK(fs.size() == 48);
    CHECK(serialize(fs) == golden);
    CHECK(pin_words(Permutation::parse("2 4 1 3")).size() == 48);
}

TEST_CASE("pattern containment matches factor containment, small slice") {
    // The acceptance suite runs the full check; this is the fast slice.
    std::vector<Permutation> patterns = all_simple_permutations(4);
    std::vector<FactorSet> factor_sets;
    for (const Permutation& p : patterns)
        factor_sets.push_back(factor_set(p));
    for (int len = 2; len <= 7; ++len)
        for (const std::string& w : strict_pin_words(len)) {
            const Permutation sigma = decode_pin_word(w);
            for (std::size_t i = 0; i < patterns.size(); ++i)
                CHECK(contains_pattern(sigma, patterns[i]) ==
                      contains_factor_from(phi(w), factor_sets[i]));
        }
}

TEST_CASE("the preceq order matches phi-factor containment, small slice") {
    for (int lu = 2; lu <= 4; ++lu)
        for (int lw = lu; lw <= 5; ++lw)
            for (const std::string& u : strict_pin_words(lu))
                for (const std::string& w : strict_pin_words(lw))
                    CHECK(oracle_preceq(u, w) ==
                          (phi(w).find(phi(u)) != std::string::npos));
}
