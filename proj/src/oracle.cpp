#include "pinperm/oracle.hpp"

#include <algorithm>

#include "pinperm/pin_language.hpp"

namespace pinperm {

namespace {

// Naive side-of-line tests, kept separate from the pin_geometry internals on
// purpose.
bool line_separates(long long Point::* axis, Point q, const std::vector<Point>& one,
                    const std::vector<Point>& other) {
    bool one_below = true, one_above = true;
    for (const Point& p : one) {
        one_below = one_below && p.*axis < q.*axis;
        one_above = one_above && p.*axis > q.*axis;
    }
    bool other_below = true, other_above = true;
    for (const Point& p : other) {
        other_below = other_below && p.*axis < q.*axis;
        other_above = other_above && p.*axis > q.*axis;
    }
    return (one_below && other_above) || (one_above && other_below);
}

bool line_splits(long long Point::* axis, Point q, const std::vector<Point>& pts) {
    bool any_below = false, any_above = false;
    for (const Point& p : pts) {
        any_below = any_below || p.*axis < q.*axis;
        any_above = any_above || p.*axis > q.*axis;
    }
    return any_below && any_above;
}

bool valid_next_pin(const std::vector<Point>& chosen, Point q) {
    for (const Point& p : chosen)
        if (p.col == q.col || p.row == q.row)
            return false;
    long long min_col = chosen[0].col, max_col = chosen[0].col;
    long long min_row = chosen[0].row, max_row = chosen[0].row;
    for (const Point& p : chosen) {
        min_col = std::min(min_col, p.col);
        max_col = std::max(max_col, p.col);
        min_row = std::min(min_row, p.row);
        max_row = std::max(max_row, p.row);
    }
    const bool outside = q.col < min_col || q.col > max_col || q.row < min_row || q.row > max_row;
    if (!outside)
        return false;
    if (chosen.size() == 1)
        return true;
    const std::vector<Point> prev{chosen.back()};
    std::vector<Point> rest(chosen.begin(), chosen.end() - 1);
    const bool separates = line_separates(&Point::col, q, prev, rest) ||
                           line_separates(&Point::row, q, prev, rest);
    const bool independent =
        !line_splits(&Point::col, q, chosen) && !line_splits(&Point::row, q, chosen);
    return separates || independent;
}

void enumerate_sequences(const std::vector<Point>& all, std::vector<Point>& chosen,
                         std::vector<char>& used, std::vector<PinSequence>& out) {
    if (chosen.size() == all.size()) {
        out.push_back(PinSequence{chosen});
        return;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (used[i])
            continue;
        if (!chosen.empty() && !valid_next_pin(chosen, all[i]))
            continue;
        used[i] = 1;
        chosen.push_back(all[i]);
        enumerate_sequences(all, chosen, used, out);
        chosen.pop_back();
        used[i] = 0;
    }
}

} // namespace

std::vector<PinSequence> oracle_pin_sequences(const Permutation& p) {
    if (p.size() > 9)
        throw TooLarge("pin sequence enumeration is capped at length 9");
    std::vector<Point> all;
    all.reserve(static_cast<std::size_t>(p.size()));
    for (int c = 1; c <= p.size(); ++c)
        all.push_back(Point{c, p[c - 1]});
    std::vector<Point> chosen;
    std::vector<char> used(all.size(), 0);
    std::vector<PinSequence> out;
    enumerate_sequences(all, chosen, used, out);
    return out;
}

namespace {

bool is_numeral_char(char c) { return c >= '1' && c <= '4'; }

// Strong numeral-led factors: each starts at a numeral and runs until the
// next numeral.
std::vector<std::string> strong_factors(const std::string& u) {
    std::vector<std::string> factors;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= u.size(); ++i)
        if (i == u.size() || is_numeral_char(u[i])) {
            factors.push_back(u.substr(start, i - start));
            start = i;
        }
    return factors;
}

bool match_factors(const std::vector<std::string>& factors, std::size_t fi,
                   const std::string& w, std::size_t pos) {
    if (fi == factors.size())
        return true;
    const std::string& f = factors[fi];
    const std::size_t m = f.size();
    for (std::size_t s = pos; s + m <= w.size(); ++s) {
        // numeral-led piece of w: must equal the factor verbatim
        if (w.compare(s, m, f) == 0 && match_factors(factors, fi + 1, w, s + m))
            return true;
        // direction-led piece: needs a nonempty gap, the right quadrant for
        // its first letter, and an identical direction tail
        if (s > pos && !is_numeral_char(w[s]) && quadrant(w[s - 1], w[s]) == f[0] &&
            w.compare(s + 1, m - 1, f, 1, m - 1) == 0 &&
            match_factors(factors, fi + 1, w, s + m))
            return true;
    }
    return false;
}

} // namespace

bool oracle_preceq(const std::string& u, const std::string& w) {
    if (!is_valid_pin_word(u) || !is_valid_pin_word(w))
        throw InvalidPinWord("oracle_preceq expects valid pin words");
    return match_factors(strong_factors(u), 0, w, 0);
}

namespace {

// O(n^3) interval scan, independent of the production simplicity test.
bool naive_simple(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (j - i + 1 == n)
                continue;
            int lo = values[static_cast<std::size_t>(i)], hi = lo;
            for (int t = i; t <= j; ++t) {
                lo = std::min(lo, values[static_cast<std::size_t>(t)]);
                hi = std::max(hi, values[static_cast<std::size_t>(t)]);
            }
            if (hi - lo == j - i)
                return false;
        }
    return true;
}

Permutation normalize(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> entries;
    entries.reserve(values.size());
    for (int v : values)
        entries.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                           sorted.begin()) +
                          1);
    return Permutation(std::move(entries));
}

void count_avoiders(const std::vector<Permutation>& basis, int n, std::vector<int>& prefix,
                    std::vector<char>& used, long long& simple_count) {
    if (static_cast<int>(prefix.size()) == n) {
        if (naive_simple(prefix))
            ++simple_count;
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<std::size_t>(v - 1)])
            continue;
        prefix.push_back(v);
        used[static_cast<std::size_t>(v - 1)] = 1;
        bool pruned = false;
        const Permutation as_pattern = normalize(prefix);
        for (const Permutation& beta : basis)
            if (contains_pattern(as_pattern, beta)) {
                pruned = true;
                break;
            }
        if (!pruned)
            count_avoiders(basis, n, prefix, used, simple_count);
        used[static_cast<std::size_t>(v - 1)] = 0;
        prefix.pop_back();
    }
}

} // namespace

EnumerationProfile oracle_simples_in_class(const std::vector<Permutation>& basis, int max_length) {
    if (max_length > 10)
        throw TooLarge("class enumeration is capped at length 10");
    EnumerationProfile profile;
    profile.max_length = max_length;
    for (int n = 1; n <= max_length; ++n) {
        long long count = 0;
        std::vector<int> prefix;
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        count_avoiders(basis, n, prefix, used, count);
        profile.counts[n] = count;
    }
    return profile;
}

std::set<std::string> oracle_words_accepted(const FactorAutomaton& a, int max_length) {
    if (max_length > 2 * a.state_count())
        throw TooLarge("word enumeration is capped at twice the state count");

    // Expanding dead branches is pointless: restrict to states that can
    // still reach an accepting one.
    std::vector<std::vector<int>> reverse_edges(static_cast<std::size_t>(a.state_count()));
    for (int s = 0; s < a.state_count(); ++s)
        for (int l = 0; l < 4; ++l)
            reverse_edges[static_cast<std::size_t>(
                              a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)])]
                .push_back(s);
    std::vector<char> live(static_cast<std::size_t>(a.state_count()), 0);
    std::vector<int> queue;
    for (int s = 0; s < a.state_count(); ++s)
        if (a.accepting[static_cast<std::size_t>(s)]) {
            live[static_cast<std::size_t>(s)] = 1;
            queue.push_back(s);
        }
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int t : reverse_edges[static_cast<std::size_t>(queue[qi])])
            if (!live[static_cast<std::size_t>(t)]) {
                live[static_cast<std::size_t>(t)] = 1;
                queue.push_back(t);
            }

    constexpr std::size_t kWordCap = 4'000'000;
    std::set<std::string> out;
    std::vector<std::pair<int, std::string>> frontier{{a.start, ""}};
    for (int len = 0; len <= max_length && !frontier.empty(); ++len) {
        std::vector<std::pair<int, std::string>> next_frontier;
        for (const auto& [s, word] : frontier) {
            if (a.accepting[static_cast<std::size_t>(s)])
                out.insert(word);
            if (out.size() > kWordCap)
                throw TooLarge("accepted-word enumeration exceeded the cap");
            if (len == max_length)
                continue;
            for (int l = 0; l < 4; ++l) {
                const int t = a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
                if (live[static_cast<std::size_t>(t)])
                    next_frontier.push_back({t, word + kAlphabet[static_cast<std::size_t>(l)]});
            }
            if (next_frontier.size() > kWordCap)
                throw TooLarge("accepted-word enumeration exceeded the cap");
        }
        frontier = std::move(next_frontier);
    }
    return out;
}

} // namespace pinperm
