#include "grouporder/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace grouporder {

void Word::check_rank_positive(int rank) {
    if (rank < 1) {
        throw DomainError("IndexOutOfRank", "rank must be >= 1, got " + std::to_string(rank));
    }
}

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (Letter l : letters) {
        if (!out.empty() && out.back() == static_cast<Letter>(-l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word::Word(int rank, std::span<const Letter> letters) : rank_(rank) {
    check_rank_positive(rank);
    for (Letter l : letters) {
        if (l == 0 || letter_index(l) > rank) {
            throw DomainError("IndexOutOfRank",
                              "letter index " + std::to_string(letter_index(l)) +
                                  " exceeds rank " + std::to_string(rank));
        }
    }
    letters_ = free_reduce(letters);
}

Word reduce(int rank, std::span<const Letter> letters) { return Word(rank, letters); }

namespace {

void check_same_rank(const Word& u, const Word& v) {
    if (u.rank() != v.rank()) {
        throw DomainError("RankMismatch", "ranks " + std::to_string(u.rank()) + " and " +
                                              std::to_string(v.rank()));
    }
}

} // namespace

Word multiply(const Word& u, const Word& v) {
    check_same_rank(u, v);
    std::vector<Letter> cat(u.letters().begin(), u.letters().end());
    cat.insert(cat.end(), v.letters().begin(), v.letters().end());
    return Word(u.rank(), cat);
}

Word invert(const Word& w) {
    std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : rev) l = static_cast<Letter>(-l);
    return Word(w.rank(), rev);
}

Word conjugate(const Word& h, const Word& w) {
    check_same_rank(h, w);
    return multiply(multiply(h, w), invert(h));
}

Word power(const Word& w, int exponent) {
    Word base = exponent < 0 ? invert(w) : w;
    int n = exponent < 0 ? -exponent : exponent;
    Word acc = Word::identity(w.rank());
    for (int i = 0; i < n; ++i) acc = multiply(acc, base);
    return acc;
}

std::vector<Word> ball(int rank, int radius, int radius_cap) {
    if (radius < 0 || radius > radius_cap) {
        throw DomainError("RadiusTooLarge", "radius " + std::to_string(radius) +
                                                " outside [0, " + std::to_string(radius_cap) + "]");
    }
    std::vector<Word> out;
    out.push_back(Word::identity(rank));
    // Extending sphere n-1 (already shortlex-sorted) by letters in key order
    // keeps each sphere sorted, and spheres are emitted by length.
    std::size_t sphere_begin = 0;
    for (int len = 1; len <= radius; ++len) {
        std::size_t sphere_end = out.size();
        for (std::size_t i = sphere_begin; i < sphere_end; ++i) {
            for (int key = 0; key < 2 * rank; ++key) {
                Letter l = letter_from_key(key);
                const Word& w = out[i];
                if (!w.empty() && w.letters().back() == static_cast<Letter>(-l)) continue;
                std::vector<Letter> ext(w.letters().begin(), w.letters().end());
                ext.push_back(l);
                out.emplace_back(rank, ext);
            }
        }
        sphere_begin = sphere_end;
    }
    return out;
}

bool shortlex_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    auto ul = u.letters();
    auto vl = v.letters();
    for (std::size_t i = 0; i < ul.size(); ++i) {
        if (ul[i] != vl[i]) return letter_key(ul[i]) < letter_key(vl[i]);
    }
    return false;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (Letter l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += 'x';
        out += std::to_string(letter_index(l));
        if (l < 0) out += "^-1";
    }
    return out;
}

Word parse_word(const std::string& text, int rank) {
    std::vector<Letter> letters;
    std::istringstream in(text);
    std::string token;
    bool any = false;
    while (in >> token) {
        any = true;
        if (token == "1") continue;
        bool ok = token.size() >= 2 && token[0] == 'x';
        std::size_t pos = 1;
        long index = 0;
        while (ok && pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
            index = index * 10 + (token[pos] - '0');
            ++pos;
        }
        ok = ok && pos > 1 && index >= 1;
        int sign = +1;
        if (ok && pos != token.size()) {
            ok = token.compare(pos, std::string::npos, "^-1") == 0;
            sign = -1;
        }
        if (!ok) {
            throw DomainError("WordSyntax", "bad token '" + token + "' in '" + text + "'");
        }
        if (index > rank) {
            throw DomainError("IndexOutOfRank", "token '" + token + "' exceeds rank " +
                                                    std::to_string(rank));
        }
        letters.push_back(make_letter(static_cast<int>(index), sign));
    }
    if (!any) throw DomainError("WordSyntax", "empty word text; the identity is spelled '1'");
    return Word(rank, letters);
}

std::size_t word_hash(const Word& w) {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(w.rank());
    for (Letter l : w.letters()) {
        h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(l)) + 0x9e3779b9u + (h << 6) +
             (h >> 2);
    }
    return h;
}

} // namespace grouporder
