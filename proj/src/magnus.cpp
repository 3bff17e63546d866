#include "grouporder/magnus.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "grouporder/kernels.hpp"

namespace grouporder {

const char* to_string(Sign s) {
    switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
    }
    return "?";
}

const char* to_string(Ordering o) {
    switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
    }
    return "?";
}

namespace {

struct LetterSeqHash {
    std::size_t operator()(const std::vector<Letter>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Letter l : v) {
            h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(l)) + 0x9e3779b9u +
                 (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::shared_mutex g_memo_mutex;
std::unordered_map<std::vector<Letter>, Sign, LetterSeqHash> g_memo;

std::mutex g_override_mutex;
std::optional<int> g_cap_override;

// The sign only depends on the letters, not the ambient rank, and the
// deglex-least term of embed(w) involves only w's own generators; relabeling
// them monotonically to 1..m shrinks the coefficient table without moving
// the least term.
Word compress_alphabet(const Word& w) {
    std::vector<int> used;
    for (Letter l : w.letters()) {
        int idx = letter_index(l);
        if (std::find(used.begin(), used.end(), idx) == used.end()) used.push_back(idx);
    }
    std::sort(used.begin(), used.end());
    std::vector<Letter> relabeled;
    relabeled.reserve(w.size());
    for (Letter l : w.letters()) {
        int idx = letter_index(l);
        int pos = static_cast<int>(std::lower_bound(used.begin(), used.end(), idx) - used.begin());
        relabeled.push_back(make_letter(pos + 1, letter_sign(l)));
    }
    return Word(std::max<int>(1, static_cast<int>(used.size())), relabeled);
}

Sign sign_uncached(const Word& w, std::optional<int> max_cap_override) {
    const Word z = compress_alphabet(w);
    const int len = static_cast<int>(z.size());
    const int feasible = TruncatedSeries::max_cap_within_budget(z.rank());
    int max_cap = max_cap_override.value_or(4 * len + 8);
    int cap = std::min({std::max(1, len), max_cap, feasible});
    for (;;) {
        TruncatedSeries s = magnus_embed(z, cap);
        if (auto lead = least_nonconstant_term(s)) {
            return lead->coeff > 0 ? Sign::Positive : Sign::Negative;
        }
        if (cap >= max_cap || cap >= feasible) {
            throw DomainError("TruncationExhausted",
                              "no nonconstant term up to degree " + std::to_string(cap) +
                                  " for '" + format_word(w) + "'");
        }
        cap = std::min({2 * cap, max_cap, feasible});
    }
}

} // namespace

void set_truncation_cap_override(std::optional<int> cap) {
    std::lock_guard<std::mutex> lock(g_override_mutex);
    g_cap_override = cap;
}

std::optional<int> truncation_cap_override() {
    std::lock_guard<std::mutex> lock(g_override_mutex);
    return g_cap_override;
}

Sign magnus_sign(const Word& w, std::optional<int> max_cap_override) {
    if (w.empty()) return Sign::Zero;
    if (max_cap_override.has_value()) {
        // Uncached: the override changes the error behaviour, never a value.
        return sign_uncached(w, max_cap_override);
    }
    std::vector<Letter> key(w.letters().begin(), w.letters().end());
    {
        std::shared_lock<std::shared_mutex> lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    Sign s = sign_uncached(w, std::nullopt);
    {
        std::unique_lock<std::shared_mutex> lock(g_memo_mutex);
        g_memo.emplace(std::move(key), s);
    }
    return s;
}

Sign magnus_sign(const Word& w) { return magnus_sign(w, truncation_cap_override()); }

Ordering magnus_compare(const Word& u, const Word& v) {
    if (u.rank() != v.rank()) {
        throw DomainError("RankMismatch", "compare across ranks " + std::to_string(u.rank()) +
                                              " and " + std::to_string(v.rank()));
    }
    if (u == v) return Ordering::Equal;
    switch (magnus_sign(multiply(invert(u), v))) {
    case Sign::Positive: return Ordering::Less;
    case Sign::Negative: return Ordering::Greater;
    default: return Ordering::Equal; // unreachable for u != v
    }
}

std::vector<Word> positive_ball(int rank, int radius, int radius_cap) {
    std::vector<Word> out;
    for (const Word& w : ball(rank, radius, radius_cap)) {
        if (magnus_sign(w) == Sign::Positive) out.push_back(w);
    }
    return out;
}

} // namespace grouporder
