#ifndef GROUPORDER_WORDS_HPP
#define GROUPORDER_WORDS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grouporder/errors.hpp"

namespace grouporder {

// A letter of a free group: +i encodes the generator x_i, -i its inverse.
// Indices are 1-based.
using Letter = std::int16_t;

constexpr int letter_index(Letter l) { return l < 0 ? -l : l; }
constexpr int letter_sign(Letter l) { return l < 0 ? -1 : +1; }
constexpr Letter make_letter(int index, int sign) {
    return static_cast<Letter>(sign < 0 ? -index : index);
}

// Position of a letter in the enumeration order x1 < x1^-1 < x2 < x2^-1 < ...
constexpr int letter_key(Letter l) {
    return 2 * (letter_index(l) - 1) + (l < 0 ? 1 : 0);
}
constexpr Letter letter_from_key(int key) {
    return make_letter(key / 2 + 1, key % 2 == 0 ? +1 : -1);
}

inline constexpr int kDefaultRadiusCap = 8;

// Freely reduced word in the free group of rank `rank`. Every constructor
// reduces, so equality of values is equality of group elements.
class Word {
public:
    explicit Word(int rank) : rank_(rank) { check_rank_positive(rank); }
    Word(int rank, std::span<const Letter> letters);
    Word(int rank, std::initializer_list<Letter> letters)
        : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

    static Word identity(int rank) { return Word(rank); }

    int rank() const { return rank_; }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }

private:
    static void check_rank_positive(int rank);

    int rank_;
    std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence. Required by the Word
// constructor; exposed for the mutation suite and the reduction oracle.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

Word reduce(int rank, std::span<const Letter> letters);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
// h w h^-1
Word conjugate(const Word& h, const Word& w);
Word power(const Word& w, int exponent);

// All reduced words of length <= radius in shortlex order (length first,
// then letter order x1 < x1^-1 < x2 < ...).
std::vector<Word> ball(int rank, int radius, int radius_cap = kDefaultRadiusCap);

bool shortlex_less(const Word& u, const Word& v);

struct ShortlexLess {
    bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

// Text grammar: `1` is the empty word, otherwise space-separated tokens
// `xN` / `xN^-1`. Parsing accepts redundant tokens and reduces.
std::string format_word(const Word& w);
Word parse_word(const std::string& text, int rank);

std::size_t word_hash(const Word& w);

} // namespace grouporder

template <>
struct std::hash<grouporder::Word> {
    std::size_t operator()(const grouporder::Word& w) const { return grouporder::word_hash(w); }
};

#endif // GROUPORDER_WORDS_HPP
