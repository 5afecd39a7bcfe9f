#include "pinperm/automaton.hpp"

#include <deque>
#include <utility>

namespace pinperm {

int letter_index(char c) {
    switch (c) {
        case 'L': return 0;
        case 'R': return 1;
        case 'U': return 2;
        case 'D': return 3;
    }
    throw std::invalid_argument(std::string("letter '") + c + "' is not in {L,R,U,D}");
}

bool FactorAutomaton::accepts(std::string_view word) const {
    int s = start;
    for (char c : word)
        s = next[static_cast<std::size_t>(s)][static_cast<std::size_t>(letter_index(c))];
    return accepting[static_cast<std::size_t>(s)] != 0;
}

FactorAutomaton build_factor_automaton(const std::set<std::string>& fs) {
    // Trie with -1 for missing children.
    std::vector<std::array<int, 4>> child{{{-1, -1, -1, -1}}};
    std::vector<char> accept{0};
    for (const std::string& f : fs) {
        if (f.empty())
            throw EmptyFactor("factors must be nonempty words");
        int s = 0;
        for (char c : f) {
            const int l = letter_index(c);
            int t = child[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
            if (t == -1) {
                t = static_cast<int>(child.size());
                child[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] = t;
                child.push_back({-1, -1, -1, -1});
                accept.push_back(0);
            }
            s = t;
        }
        accept[static_cast<std::size_t>(s)] = 1;
    }

    // Breadth-first fail computation, folded directly into a complete
    // transition table; a state whose fail target is accepting accepts too.
    FactorAutomaton a;
    a.next.assign(child.size(), {0, 0, 0, 0});
    a.accepting = accept;
    std::vector<int> fail(child.size(), 0);
    std::deque<int> queue;
    for (int l = 0; l < 4; ++l) {
        const int t = child[0][static_cast<std::size_t>(l)];
        if (t != -1) {
            a.next[0][static_cast<std::size_t>(l)] = t;
            queue.push_back(t);
        }
    }
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        if (a.accepting[static_cast<std::size_t>(fail[static_cast<std::size_t>(s)])])
            a.accepting[static_cast<std::size_t>(s)] = 1;
        for (int l = 0; l < 4; ++l) {
            const int t = child[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
            const int via_fail =
                a.next[static_cast<std::size_t>(fail[static_cast<std::size_t>(s)])][static_cast<std::size_t>(l)];
            if (t == -1) {
                a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] = via_fail;
            } else {
                a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] = t;
                fail[static_cast<std::size_t>(t)] = via_fail;
                queue.push_back(t);
            }
        }
    }

    // Once a factor has been seen the verdict cannot change.
    for (int s = 0; s < a.state_count(); ++s)
        if (a.accepting[static_cast<std::size_t>(s)])
            a.next[static_cast<std::size_t>(s)] = {s, s, s, s};
    return a;
}

FactorAutomaton complement(FactorAutomaton a) {
    for (char& f : a.accepting)
        f = f ? 0 : 1;
    return a;
}

namespace {

// Shortest word from `from` to any state satisfying `goal`.
std::string shortest_word_to(const FactorAutomaton& a, int from, const std::vector<char>& goal) {
    const int n = a.state_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> parent_letter(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        if (goal[static_cast<std::size_t>(s)]) {
            std::string word;
            for (int t = s; t != from; t = parent[static_cast<std::size_t>(t)])
                word.insert(word.begin(), parent_letter[static_cast<std::size_t>(t)]);
            return word;
        }
        for (int l = 0; l < 4; ++l) {
            const int t = a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                parent[static_cast<std::size_t>(t)] = s;
                parent_letter[static_cast<std::size_t>(t)] = kAlphabet[static_cast<std::size_t>(l)];
                queue.push_back(t);
            }
        }
    }
    return {}; // unreachable by construction of the callers
}

} // namespace

std::optional<Lasso> has_accessible_coaccessible_cycle(const FactorAutomaton& a) {
    const int n = a.state_count();

    std::vector<char> accessible(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{a.start};
    accessible[static_cast<std::size_t>(a.start)] = 1;
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        for (int l = 0; l < 4; ++l) {
            const int t = a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
            if (!accessible[static_cast<std::size_t>(t)]) {
                accessible[static_cast<std::size_t>(t)] = 1;
                queue.push_back(t);
            }
        }
    }

    std::vector<std::vector<int>> reverse_edges(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        for (int l = 0; l < 4; ++l)
            reverse_edges[static_cast<std::size_t>(
                              a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)])]
                .push_back(s);
    std::vector<char> coaccessible(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s)
        if (a.accepting[static_cast<std::size_t>(s)]) {
            coaccessible[static_cast<std::size_t>(s)] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        for (int t : reverse_edges[static_cast<std::size_t>(s)])
            if (!coaccessible[static_cast<std::size_t>(t)]) {
                coaccessible[static_cast<std::size_t>(t)] = 1;
                queue.push_back(t);
            }
    }

    std::vector<char> keep(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s)
        keep[static_cast<std::size_t>(s)] = accessible[static_cast<std::size_t>(s)] &&
                                            coaccessible[static_cast<std::size_t>(s)];

    // Depth-first search restricted to kept states; a back edge closes the
    // witness cycle.
    std::vector<int> color(static_cast<std::size_t>(n), 0); // 0 white, 1 on stack, 2 done
    std::vector<std::pair<int, int>> stack;                 // state, next letter to try
    std::vector<std::pair<int, char>> path;                 // state, letter that entered it
    for (int s0 = 0; s0 < n; ++s0) {
        if (!keep[static_cast<std::size_t>(s0)] || color[static_cast<std::size_t>(s0)] != 0)
            continue;
        stack.clear();
        stack.push_back({s0, 0});
        path.clear();
        path.push_back({s0, 0});
        color[static_cast<std::size_t>(s0)] = 1;
        while (!stack.empty()) {
            const int s = stack.back().first;
            if (stack.back().second == 4) {
                color[static_cast<std::size_t>(s)] = 2;
                stack.pop_back();
                path.pop_back();
                continue;
            }
            const int l = stack.back().second++;
            const int t = a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
            if (!keep[static_cast<std::size_t>(t)])
                continue;
            if (color[static_cast<std::size_t>(t)] == 1) {
                std::size_t ti = path.size() - 1;
                while (path[ti].first != t)
                    --ti;
                std::string cycle;
                for (std::size_t i = ti + 1; i < path.size(); ++i)
                    cycle += path[i].second;
                cycle += kAlphabet[static_cast<std::size_t>(l)];
                Lasso lasso;
                std::vector<char> entry(static_cast<std::size_t>(n), 0);
                entry[static_cast<std::size_t>(t)] = 1;
                lasso.prefix = shortest_word_to(a, a.start, entry);
                lasso.cycle = cycle;
                if (!a.accepting[static_cast<std::size_t>(t)])
                    lasso.suffix = shortest_word_to(a, t, a.accepting);
                return lasso;
            }
            if (color[static_cast<std::size_t>(t)] == 0) {
                color[static_cast<std::size_t>(t)] = 1;
                stack.push_back({t, 0});
                path.push_back({t, kAlphabet[static_cast<std::size_t>(l)]});
            }
        }
    }
    return std::nullopt;
}

std::string to_dot(const FactorAutomaton& a) {
    std::string out = "digraph factor_automaton {\n  rankdir=LR;\n";
    for (int s = 0; s < a.state_count(); ++s) {
        out += "  q" + std::to_string(s);
        out += a.accepting[static_cast<std::size_t>(s)] ? " [shape=doublecircle]" : " [shape=circle]";
        if (s == a.start)
            out += " [style=bold]";
        out += ";\n";
    }
    for (int s = 0; s < a.state_count(); ++s) {
        // merge parallel edges into one label
        for (int t = 0; t < a.state_count(); ++t) {
            std::string label;
            for (int l = 0; l < 4; ++l)
                if (a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] == t) {
                    if (!label.empty())
                        label += ',';
                    label += kAlphabet[static_cast<std::size_t>(l)];
                }
            if (!label.empty())
                out += "  q" + std::to_string(s) + " -> q" + std::to_string(t) +
                       " [label=\"" + label + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

} // namespace pinperm
