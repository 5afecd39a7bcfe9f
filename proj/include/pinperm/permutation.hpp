#ifndef PINPERM_PERMUTATION_HPP
#define PINPERM_PERMUTATION_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace pinperm {

struct NotABijection : std::invalid_argument {
    explicit NotABijection(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyInput : std::invalid_argument {
    explicit EmptyInput(const std::string& what) : std::invalid_argument(what) {}
};

// A permutation of {1..n} in one-line notation. Entries are 1-based values,
// positions are 0-based as usual for containers.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);

    // Parses whitespace-separated decimal values, e.g. "2 4 1 3".
    // Throws EmptyInput / NotABijection.
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int pos) const { return entries_[static_cast<std::size_t>(pos)]; }
    const std::vector<int>& entries() const { return entries_; }

    // inverse()[v-1] is the 0-based position of value v.
    std::vector<int> positions_by_value() const;

    std::string str() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

// True iff p has no block other than singletons and the whole permutation.
// Lengths 1 and 2 only admit trivial blocks and count as simple.
bool is_simple(const Permutation& p);

// True iff some subsequence of sigma is order isomorphic to pattern.
bool contains_pattern(const Permutation& sigma, const Permutation& pattern);

// The 8 symmetries of the permutation diagram, generated by reverse,
// complement and inverse. The enumeration order below is the order the
// decision procedures report failing symmetries in.
enum class Symmetry {
    identity = 0,
    reverse,
    complement,
    reverse_complement,
    inverse,
    inverse_reverse,
    inverse_complement,
    inverse_reverse_complement,
};

inline constexpr int kSymmetryCount = 8;
const char* symmetry_name(Symmetry s);

Permutation apply_symmetry(const Permutation& p, Symmetry s);

} // namespace pinperm

#endif
