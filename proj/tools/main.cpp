#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinperm/decision.hpp"
#include "pinperm/oracle.hpp"
#include "pinperm/pin_geometry.hpp"
#include "pinperm/pin_language.hpp"
#include "pinperm/report.hpp"

namespace {

using namespace pinperm;

// One permutation per line; lines starting with '#' and blank lines are
// skipped.
std::vector<Permutation> read_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open basis file: " + path);
    std::vector<Permutation> elements;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        elements.push_back(Permutation::parse(line));
    }
    return elements;
}

FactorAutomaton class_automaton(const Basis& basis) {
    FactorSet factors = basis_factor_union(basis);
    const FactorSet& base = direction_pair_factors();
    factors.insert(base.begin(), base.end());
    return complement(build_factor_automaton(factors));
}

int run_decide(const std::string& path, bool json, bool witness, const std::string& dot_path,
               int oracle_depth, bool minimize) {
    const std::vector<Permutation> elements = read_basis_file(path);
    const FinitenessReport report = decide_overall(elements, minimize);

    if (!dot_path.empty()) {
        if (report.special_case.empty()) {
            std::ofstream out(dot_path);
            out << to_dot(class_automaton(validate_basis(elements, minimize)));
        } else {
            std::cerr << "note: no automaton was built (" << report.special_case << ")\n";
        }
    }

    std::string oracle_csv;
    nlohmann::json oracle_rows = nlohmann::json::array();
    if (oracle_depth > 0) {
        const EnumerationProfile profile = oracle_simples_in_class(elements, oracle_depth);
        for (const auto& [length, count] : profile.counts) {
            oracle_csv += std::to_string(length) + "," + std::to_string(count) + "\n";
            oracle_rows.push_back({length, count});
        }
    }

    if (json) {
        if (oracle_depth > 0) {
            nlohmann::json j = nlohmann::json::parse(report_json(report));
            j["oracle_counts"] = oracle_rows;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << report_json(report);
        }
    } else {
        std::cout << report_text(report, witness);
        if (oracle_depth > 0)
            std::cout << "oracle simples (length,count):\n" << oracle_csv;
    }
    return report.overall == Verdict::finite ? 0 : 1;
}

int run_pinwords(const std::string& perm_text) {
    const Permutation p = Permutation::parse(perm_text);
    const std::set<std::string> words = pin_words(p); // throws NotSimple
    if (words.empty()) {
        std::cerr << "not a pin-permutation\n";
        return 0;
    }
    for (const std::string& w : words)
        std::cout << w << "\n";
    return 0;
}

int run_phi(const std::string& word) {
    std::cout << phi(word) << "\n";
    return 0;
}

int run_oracle_simples(const std::string& basis_path, int max_length) {
    std::vector<Permutation> elements;
    if (!basis_path.empty())
        elements = read_basis_file(basis_path);
    const EnumerationProfile profile = oracle_simples_in_class(elements, max_length);
    for (const auto& [length, count] : profile.counts)
        std::cout << length << "," << count << "\n";
    return 0;
}

int run_oracle_words(const std::string& basis_path, int max_length) {
    std::vector<Permutation> elements;
    if (!basis_path.empty())
        elements = read_basis_file(basis_path);
    const Basis basis = validate_basis(elements);
    const FactorAutomaton avoiding = class_automaton(basis);
    const std::set<std::string> words = oracle_words_accepted(avoiding, max_length);
    std::vector<std::string> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const std::string& w : sorted)
        std::cout << w.size() << "," << w << "\n";
    return 0;
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"finiteness of simple permutations in a wreath-closed class"};
    app.require_subcommand(1);

    std::string basis_path, perm_text, word, dot_path;
    bool json = false, witness = false, minimize = false;
    int oracle_depth = 0, max_length = 6;

    auto* decide = app.add_subcommand("decide", "decide a basis file");
    decide->add_option("basis", basis_path, "basis file, one permutation per line")->required();
    decide->add_flag("--json", json, "emit a JSON report");
    decide->add_flag("--witness", witness, "include infiniteness witnesses in the text report");
    decide->add_option("--dot", dot_path, "write the complement automaton in DOT format");
    decide->add_option("--oracle-depth", oracle_depth, "cross-check enumeration depth (0 = off)")
        ->check(CLI::Range(0, 10));
    decide->add_flag("--minimize", minimize, "drop non-minimal basis elements instead of failing");

    auto* pinwords_cmd = app.add_subcommand("pinwords", "pin words of a simple permutation");
    pinwords_cmd->add_option("permutation", perm_text, "one-line notation, e.g. \"2 4 1 3\"")
        ->required();

    auto* phi_cmd = app.add_subcommand("phi", "image of a strict pin word");
    phi_cmd->add_option("pinword", word, "e.g. \"1RU\"")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference enumerations");
    oracle_cmd->require_subcommand(1);
    auto* simples = oracle_cmd->add_subcommand("simples", "count simple permutations in the class");
    simples->add_option("--basis", basis_path, "basis file (defaults to the empty basis)");
    simples->add_option("--max", max_length, "maximum length")->check(CLI::Range(1, 10));
    auto* words_cmd = oracle_cmd->add_subcommand("words", "accepted words of the class automaton");
    words_cmd->add_option("--basis", basis_path, "basis file (defaults to the empty basis)");
    words_cmd->add_option("--max", max_length, "maximum word length")->required();

    try {
        app.parse(argc, argv);
        if (decide->parsed())
            return run_decide(basis_path, json, witness, dot_path, oracle_depth, minimize);
        if (pinwords_cmd->parsed())
            return run_pinwords(perm_text);
        if (phi_cmd->parsed())
            return run_phi(word);
        if (simples->parsed())
            return run_oracle_simples(basis_path, max_length);
        if (words_cmd->parsed())
            return run_oracle_words(basis_path, max_length);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2; // --help and --version exit 0
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (...) {
        return 2;
    }
}
