#ifndef GROUPORDER_SAMPLING_HPP
#define GROUPORDER_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "grouporder/hgp.hpp"
#include "grouporder/magnus.hpp"
#include "grouporder/stallings.hpp"
#include "grouporder/words.hpp"

namespace grouporder {

inline constexpr std::uint64_t kDefaultSeed = 0xC0C0;

// One deterministic stream feeds every sampling suite; mt19937_64 is pinned
// by the standard, and the bounded draw avoids std::uniform_int_distribution,
// which is not.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform-ish draw from [0, n); modulo bias is irrelevant at these sizes
    std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

    std::int64_t coefficient(std::int64_t max_abs) {
        std::int64_t v = static_cast<std::int64_t>(bounded(2 * static_cast<std::uint64_t>(max_abs))) -
                         max_abs;
        return v >= 0 ? v + 1 : v; // never zero
    }

private:
    std::mt19937_64 engine_;
};

inline Word random_reduced_word(SampleRng& rng, int rank, int max_len) {
    int len = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_len) + 1));
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        if (letters.empty()) {
            letters.push_back(letter_from_key(static_cast<int>(rng.bounded(2u * rank))));
        } else {
            int banned = letter_key(static_cast<Letter>(-letters.back()));
            int key = static_cast<int>(rng.bounded(2u * rank - 1));
            if (key >= banned) ++key;
            letters.push_back(letter_from_key(key));
        }
    }
    return Word(rank, letters);
}

inline Word random_nonempty_word(SampleRng& rng, int rank, int max_len) {
    for (;;) {
        Word w = random_reduced_word(rng, rank, max_len);
        if (!w.empty()) return w;
    }
}

// Positive form: a word or its inverse, whichever is Magnus-positive.
inline Word positive_form(const Word& w) {
    return magnus_sign(w) == Sign::Negative ? invert(w) : w;
}

inline BVector random_b_vector(SampleRng& rng, int rank, int max_support, int max_key_len) {
    SparseVec v;
    int n = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_support) + 1));
    for (int i = 0; i < n; ++i) {
        v[random_reduced_word(rng, rank, max_key_len)] = rng.coefficient(3);
    }
    return BVector(rank, std::move(v));
}

inline AVector random_a_vector(SampleRng& rng, int rank, int max_support, int max_key_len) {
    SparseVec v;
    int n = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_support) + 1));
    for (int i = 0; i < n; ++i) {
        v[positive_form(random_nonempty_word(rng, rank, max_key_len))] = rng.coefficient(3);
    }
    return AVector(rank, std::move(v));
}

inline HElement random_h_element(SampleRng& rng, int rank, int max_support = 3,
                                 int max_key_len = 3) {
    return {{random_a_vector(rng, rank, max_support, max_key_len),
             random_b_vector(rng, rank, max_support, max_key_len)},
            random_reduced_word(rng, rank, max_key_len)};
}

inline StallingsGraph random_subgroup(SampleRng& rng, int rank, int max_gens = 3,
                                      int max_len = 4) {
    int n = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_gens)));
    std::vector<Word> gens;
    for (int i = 0; i < n; ++i) {
        gens.push_back(random_nonempty_word(rng, rank, max_len));
    }
    return fold(rank, gens);
}

} // namespace grouporder

#endif // GROUPORDER_SAMPLING_HPP
