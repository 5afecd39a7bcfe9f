#include "pinperm/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace pinperm {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw EmptyInput("permutation must have length >= 1");
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : entries_) {
        if (v < 1 || v > n)
            throw NotABijection("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)]++)
            throw NotABijection("duplicate value " + std::to_string(v));
    }
}

Permutation Permutation::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> values;
    int v = 0;
    while (in >> v)
        values.push_back(v);
    if (!in.eof())
        throw NotABijection("not a whitespace-separated list of integers: " + text);
    if (values.empty())
        throw EmptyInput("empty permutation text");
    return Permutation(std::move(values));
}

std::vector<int> Permutation::positions_by_value() const {
    std::vector<int> inv(entries_.size());
    for (int i = 0; i < size(); ++i)
        inv[static_cast<std::size_t>(entries_[static_cast<std::size_t>(i)] - 1)] = i;
    return inv;
}

std::string Permutation::str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ' ';
        out += std::to_string((*this)[i]);
    }
    return out;
}

bool is_simple(const Permutation& p) {
    const int n = p.size();
    if (n <= 2)
        return true;
    // A block is an interval of positions whose values form an interval.
    // Scan every left endpoint keeping running min/max of the window.
    for (int i = 0; i < n; ++i) {
        int lo = p[i], hi = p[i];
        for (int j = i + 1; j < n; ++j) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
            const int width = j - i + 1;
            if (width == n)
                break;
            if (hi - lo + 1 == width)
                return false;
        }
    }
    return true;
}

namespace {

// Backtracking over pattern positions. matched holds, for each already
// placed pattern position, the value chosen in sigma; the next value must
// fall strictly between the sigma-values of the pattern entries that
// sandwich its rank.
bool match_from(const Permutation& sigma, const Permutation& pattern,
                std::vector<int>& chosen, int next_pos, int start) {
    const int k = pattern.size();
    const int n = sigma.size();
    if (next_pos == k)
        return true;
    for (int i = start; i <= n - (k - next_pos); ++i) {
        const int v = sigma[i];
        int lo = 0, hi = n + 1;
        bool ok = true;
        for (int t = 0; t < next_pos; ++t) {
            if (pattern[t] < pattern[next_pos]) {
                if (chosen[static_cast<std::size_t>(t)] > lo) lo = chosen[static_cast<std::size_t>(t)];
            } else {
                if (chosen[static_cast<std::size_t>(t)] < hi) hi = chosen[static_cast<std::size_t>(t)];
            }
        }
        ok = lo < v && v < hi;
        if (!ok)
            continue;
        chosen[static_cast<std::size_t>(next_pos)] = v;
        if (match_from(sigma, pattern, chosen, next_pos + 1, i + 1))
            return true;
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
    if (pattern.size() > sigma.size())
        return false;
    std::vector<int> chosen(static_cast<std::size_t>(pattern.size()));
    return match_from(sigma, pattern, chosen, 0, 0);
}

namespace {

Permutation reversed(const Permutation& p) {
    std::vector<int> e(p.entries().rbegin(), p.entries().rend());
    return Permutation(std::move(e));
}

Permutation complemented(const Permutation& p) {
    const int n = p.size();
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(n));
    for (int v : p.entries())
        e.push_back(n + 1 - v);
    return Permutation(std::move(e));
}

Permutation inverted(const Permutation& p) {
    std::vector<int> e(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        e[static_cast<std::size_t>(p[i] - 1)] = i + 1;
    return Permutation(std::move(e));
}

} // namespace

const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::identity: return "identity";
        case Symmetry::reverse: return "reverse";
        case Symmetry::complement: return "complement";
        case Symmetry::reverse_complement: return "reverse-complement";
        case Symmetry::inverse: return "inverse";
        case Symmetry::inverse_reverse: return "inverse-reverse";
        case Symmetry::inverse_complement: return "inverse-complement";
        case Symmetry::inverse_reverse_complement: return "inverse-reverse-complement";
    }
    return "?";
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
    switch (s) {
        case Symmetry::identity: return p;
        case Symmetry::reverse: return reversed(p);
        case Symmetry::complement: return complemented(p);
        case Symmetry::reverse_complement: return reversed(complemented(p));
        case Symmetry::inverse: return inverted(p);
        case Symmetry::inverse_reverse: return inverted(reversed(p));
        case Symmetry::inverse_complement: return inverted(complemented(p));
        case Symmetry::inverse_reverse_complement: return inverted(reversed(complemented(p)));
    }
    return p;
}

} // namespace pinperm
