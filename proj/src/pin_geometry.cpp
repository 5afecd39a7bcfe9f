#include "pinperm/pin_geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace pinperm {

namespace {

struct Box {
    long long min_col = 0, max_col = 0, min_row = 0, max_row = 0;

    static Box of(Point p) { return Box{p.col, p.col, p.row, p.row}; }

    void extend(Point p) {
        min_col = std::min(min_col, p.col);
        max_col = std::max(max_col, p.col);
        min_row = std::min(min_row, p.row);
        max_row = std::max(max_row, p.row);
    }
};

bool is_numeral(char c) { return c == '1' || c == '2' || c == '3' || c == '4'; }
bool is_direction(char c) { return c == 'U' || c == 'D' || c == 'L' || c == 'R'; }

// The letter encoding q as the next pin after a set S with bounding box
// `full`, previous pin `prev` and bounding box `older` of S minus prev.
// Numerals are the independent corner pins; a direction letter additionally
// requires the separation of prev from the rest to hold. Returns nothing if
// q is not a valid next pin. Only meaningful when S has at least 2 points;
// for a singleton S the corner case is the only reachable one.
std::optional<char> pin_letter(Point q, Point prev, const Box& older, const Box& full) {
    const int col_side = q.col < full.min_col ? -1 : (q.col > full.max_col ? 1 : 0);
    const int row_side = q.row < full.min_row ? -1 : (q.row > full.max_row ? 1 : 0);
    if (col_side != 0 && row_side != 0) {
        if (col_side > 0)
            return row_side > 0 ? '1' : '4';
        return row_side > 0 ? '2' : '3';
    }
    if (col_side == 0 && row_side == 0)
        return std::nullopt; // inside the bounding box
    if (col_side == 0) {
        // Directly above or below: the vertical line through q has to leave
        // prev alone on its side.
        const bool separates =
            (prev.col > older.max_col && older.max_col < q.col && q.col < prev.col) ||
            (prev.col < older.min_col && prev.col < q.col && q.col < older.min_col);
        if (!separates)
            return std::nullopt;
        return row_side > 0 ? 'U' : 'D';
    }
    const bool separates =
        (prev.row > older.max_row && older.max_row < q.row && q.row < prev.row) ||
        (prev.row < older.min_row && prev.row < q.row && q.row < older.min_row);
    if (!separates)
        return std::nullopt;
    return col_side > 0 ? 'R' : 'L';
}

bool all_distinct_coordinates(const std::vector<Point>& pts) {
    std::vector<long long> cols, rows;
    cols.reserve(pts.size());
    rows.reserve(pts.size());
    for (const Point& p : pts) {
        cols.push_back(p.col);
        rows.push_back(p.row);
    }
    std::sort(cols.begin(), cols.end());
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end() &&
           std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

// Letters of the sequence points from the second one on, or nothing if some
// step violates the pin sequence conditions. The second point of a sequence
// without origin is always independent and reported as a numeral.
std::optional<std::string> sequence_letters(const std::vector<Point>& pts) {
    if (pts.empty() || !all_distinct_coordinates(pts))
        return std::nullopt;
    std::string letters;
    Box full = Box::of(pts[0]);
    Box older = full;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        auto letter = pin_letter(pts[i], pts[i - 1], older, full);
        if (!letter)
            return std::nullopt;
        letters += *letter;
        older = full;
        full.extend(pts[i]);
    }
    return letters;
}

} // namespace

bool PinSequence::valid() const {
    if (points.empty())
        return false;
    return sequence_letters(points).has_value();
}

bool PinSequence::proper() const {
    auto letters = sequence_letters(points);
    if (!letters)
        return false;
    // letters[0] covers the second pin, which is always independent.
    for (std::size_t i = 1; i < letters->size(); ++i)
        if (is_numeral((*letters)[i]))
            return false;
    return true;
}

Permutation PinSequence::to_permutation() const {
    std::vector<Point> by_col = points;
    std::sort(by_col.begin(), by_col.end(),
              [](const Point& a, const Point& b) { return a.col < b.col; });
    std::vector<long long> rows;
    rows.reserve(by_col.size());
    for (const Point& p : by_col)
        rows.push_back(p.row);
    std::vector<long long> sorted_rows = rows;
    std::sort(sorted_rows.begin(), sorted_rows.end());
    std::vector<int> entries;
    entries.reserve(rows.size());
    for (long long r : rows) {
        auto it = std::lower_bound(sorted_rows.begin(), sorted_rows.end(), r);
        entries.push_back(static_cast<int>(it - sorted_rows.begin()) + 1);
    }
    return Permutation(std::move(entries));
}

std::vector<std::pair<Point, Point>> knight_pairs(const Permutation& p) {
    const int n = p.size();
    std::vector<std::pair<Point, Point>> pairs;
    // Knight neighbours of (c, v) live in 8 cells; probe them directly
    // instead of scanning all pairs.
    static constexpr std::array<std::pair<int, int>, 8> offsets{{
        {1, 2}, {1, -2}, {-1, 2}, {-1, -2}, {2, 1}, {2, -1}, {-2, 1}, {-2, -1},
    }};
    for (int c = 1; c <= n; ++c) {
        const int v = p[c - 1];
        for (auto [dc, dv] : offsets) {
            const int c2 = c + dc;
            const int v2 = v + dv;
            if (c2 < 1 || c2 > n || v2 < 1 || v2 > n)
                continue;
            if (p[c2 - 1] == v2)
                pairs.push_back({Point{c, v}, Point{c2, v2}});
        }
    }
    return pairs;
}

namespace {

// Depth-first completion of a proper pin sequence over the diagram of p.
// At most one candidate usually passes the separation test; branching is
// kept for safety.
bool extend_proper(const Permutation& p, const std::vector<int>& pos_by_value,
                   std::vector<Point>& seq, std::vector<char>& used,
                   std::vector<Box>& boxes) {
    const int n = p.size();
    if (static_cast<int>(seq.size()) == n)
        return true;
    const Point prev = seq.back();
    const Box full = boxes.back(); // by value: boxes reallocates below
    const Box older = boxes[boxes.size() - 2];

    std::array<Point, 4> candidates{};
    int count = 0;
    auto add_col = [&](long long c) {
        if (c >= 1 && c <= n)
            candidates[static_cast<std::size_t>(count++)] =
                Point{c, p[static_cast<int>(c) - 1]};
    };
    auto add_value = [&](long long v) {
        if (v >= 1 && v <= n)
            candidates[static_cast<std::size_t>(count++)] =
                Point{pos_by_value[static_cast<std::size_t>(v - 1)] + 1, v};
    };
    add_col(prev.col - 1);
    add_col(prev.col + 1);
    add_value(prev.row - 1);
    add_value(prev.row + 1);

    for (int i = 0; i < count; ++i) {
        const Point c = candidates[static_cast<std::size_t>(i)];
        if (used[static_cast<std::size_t>(c.col - 1)])
            continue;
        auto letter = pin_letter(c, prev, older, full);
        if (!letter || !is_direction(*letter))
            continue;
        seq.push_back(c);
        used[static_cast<std::size_t>(c.col - 1)] = 1;
        Box next = full;
        next.extend(c);
        boxes.push_back(next);
        if (extend_proper(p, pos_by_value, seq, used, boxes))
            return true;
        boxes.pop_back();
        used[static_cast<std::size_t>(c.col - 1)] = 0;
        seq.pop_back();
    }
    return false;
}

} // namespace

std::optional<PinSequence> extend_proper_representation(const Permutation& p,
                                                        const std::pair<Point, Point>& start) {
    const int n = p.size();
    std::vector<Point> seq{start.first, start.second};
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[static_cast<std::size_t>(start.first.col - 1)] = 1;
    used[static_cast<std::size_t>(start.second.col - 1)] = 1;
    std::vector<Box> boxes;
    boxes.push_back(Box::of(start.first));
    Box both = boxes.back();
    both.extend(start.second);
    boxes.push_back(both);
    const std::vector<int> pos_by_value = p.positions_by_value();
    if (!extend_proper(p, pos_by_value, seq, used, boxes))
        return std::nullopt;
    return PinSequence{std::move(seq)};
}

namespace {

// Encodes (origin, pts...) if that extension is a pin sequence; the word has
// one letter per point of pts.
std::optional<std::string> encode_with_origin(Point origin, const std::vector<Point>& pts) {
    std::string word;
    Box full = Box::of(origin);
    Box older = full;
    Point prev = origin;
    for (const Point& q : pts) {
        auto letter = pin_letter(q, prev, older, full);
        if (!letter)
            return std::nullopt;
        word += *letter;
        older = full;
        full.extend(q);
        prev = q;
    }
    return word;
}

} // namespace

std::set<std::string> pin_words_of_representation(const PinSequence& rep) {
    if (rep.points.size() < 2)
        throw InvalidRepresentation("pin representation must have length >= 2");
    if (!rep.valid())
        throw InvalidRepresentation("point sequence is not a pin sequence");

    // Rank-compress the coordinates and double them so that every candidate
    // origin gets fresh odd coordinates strictly closer to the bounding box
    // of {p1, p2} than any other pin.
    const std::size_t k = rep.points.size();
    std::vector<long long> cols, rows;
    cols.reserve(k);
    rows.reserve(k);
    for (const Point& p : rep.points) {
        cols.push_back(p.col);
        rows.push_back(p.row);
    }
    std::sort(cols.begin(), cols.end());
    std::sort(rows.begin(), rows.end());
    std::vector<Point> pts;
    pts.reserve(k);
    for (const Point& p : rep.points) {
        const long long c =
            (std::lower_bound(cols.begin(), cols.end(), p.col) - cols.begin() + 1) * 2;
        const long long r =
            (std::lower_bound(rows.begin(), rows.end(), p.row) - rows.begin() + 1) * 2;
        pts.push_back(Point{c, r});
    }

    const Point p1 = pts[0], p2 = pts[1];
    // Candidate origin coordinates per axis: just outside the box of
    // {p1, p2} on either side, or between the two, hugging p1.
    const std::array<long long, 3> origin_cols{
        std::min(p1.col, p2.col) - 1,
        p1.col + (p2.col > p1.col ? 1 : -1),
        std::max(p1.col, p2.col) + 1,
    };
    const std::array<long long, 3> origin_rows{
        std::min(p1.row, p2.row) - 1,
        p1.row + (p2.row > p1.row ? 1 : -1),
        std::max(p1.row, p2.row) + 1,
    };

    std::set<std::string> words;
    for (long long oc : origin_cols)
        for (long long orow : origin_rows)
            if (auto word = encode_with_origin(Point{oc, orow}, pts))
                words.insert(*word);
    return words;
}

std::set<std::string> pin_words(const Permutation& p) {
    if (!is_simple(p))
        throw NotSimple("pin words are only computed for simple permutations: " + p.str());
    const int n = p.size();
    if (n == 1)
        return {"1", "2", "3", "4"};
    if (n == 2) {
        // Too short for the knight pair machinery; both orderings of the two
        // diagram points are pin representations.
        const Point a{1, p[0]}, b{2, p[1]};
        std::set<std::string> words = pin_words_of_representation(PinSequence{{a, b}});
        std::set<std::string> rev = pin_words_of_representation(PinSequence{{b, a}});
        words.insert(rev.begin(), rev.end());
        return words;
    }
    auto pairs = knight_pairs(p);
    if (pairs.size() > 48)
        return {}; // not a pin-permutation
    std::set<std::string> words;
    for (const auto& start : pairs) {
        auto rep = extend_proper_representation(p, start);
        if (!rep)
            continue;
        auto rep_words = pin_words_of_representation(*rep);
        words.insert(rep_words.begin(), rep_words.end());
    }
    return words;
}

Permutation decode_pin_word(const std::string& word) {
    if (word.empty())
        throw InvalidPinWord("empty pin word");
    std::vector<Point> pts{Point{0, 0}}; // origin

    // Coordinates stay integers: inserting strictly between two adjacent
    // values shifts everything above the gap up by one.
    auto place_between = [&pts](long long lo, long long hi, bool col_axis) {
        if (hi - lo >= 2)
            return lo + 1;
        for (Point& p : pts) {
            long long& coord = col_axis ? p.col : p.row;
            if (coord >= hi)
                ++coord;
        }
        return lo + 1;
    };
    auto box_of = [&pts](std::size_t end) {
        Box b = Box::of(pts[0]);
        for (std::size_t i = 1; i < end; ++i)
            b.extend(pts[i]);
        return b;
    };

    for (std::size_t i = 0; i < word.size(); ++i) {
        const char c = word[i];
        if (!is_numeral(c) && !is_direction(c))
            throw InvalidPinWord(std::string("letter '") + c + "' is not in {1,2,3,4,U,D,L,R}");
        if (i == 0 && !is_numeral(c))
            throw InvalidPinWord("a pin word starts with a numeral");
        const Box full = box_of(pts.size());
        if (is_numeral(c)) {
            const long long col = (c == '1' || c == '4') ? full.max_col + 1 : full.min_col - 1;
            const long long row = (c == '1' || c == '2') ? full.max_row + 1 : full.min_row - 1;
            pts.push_back(Point{col, row});
            continue;
        }
        const Box older = box_of(pts.size() - 1);
        const Point prev = pts.back();
        long long col = 0, row = 0;
        if (c == 'U' || c == 'D') {
            if (prev.col > older.max_col)
                col = place_between(older.max_col, prev.col, true);
            else if (prev.col < older.min_col)
                col = place_between(prev.col, older.min_col, true);
            else
                throw InvalidPinWord("'" + std::string(1, c) + "' at position " +
                                     std::to_string(i + 1) +
                                     " needs the previous pin to stick out horizontally");
            const Box now = box_of(pts.size()); // coordinates may have shifted
            row = c == 'U' ? now.max_row + 1 : now.min_row - 1;
        } else {
            if (prev.row > older.max_row)
                row = place_between(older.max_row, prev.row, false);
            else if (prev.row < older.min_row)
                row = place_between(prev.row, older.min_row, false);
            else
                throw InvalidPinWord("'" + std::string(1, c) + "' at position " +
                                     std::to_string(i + 1) +
                                     " needs the previous pin to stick out vertically");
            const Box now = box_of(pts.size());
            col = c == 'R' ? now.max_col + 1 : now.min_col - 1;
        }
        pts.push_back(Point{col, row});
    }
    pts.erase(pts.begin()); // drop the origin
    return PinSequence{std::move(pts)}.to_permutation();
}

} // namespace pinperm
