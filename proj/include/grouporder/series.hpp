#ifndef GROUPORDER_SERIES_HPP
#define GROUPORDER_SERIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grouporder/words.hpp"

namespace grouporder {

// Noncommutative integer polynomial in X1..Xk truncated beyond degree_cap.
// Storage is one flat int64 table, degree blocks back to back; within the
// degree-d block, the monomial X_{i1}*...*X_{id} sits at code
// (i1-1)*k^(d-1) + ... + (id-1), so scanning the table in index order walks
// the monomials in deglex order (degree first, then lex with X1 < X2 < ...).
class TruncatedSeries {
public:
    TruncatedSeries(int rank, int degree_cap);

    static TruncatedSeries one(int rank, int degree_cap);

    int rank() const { return rank_; }
    int degree_cap() const { return degree_cap_; }

    std::span<const std::int64_t> table() const { return table_; }
    std::span<std::int64_t> table() { return table_; }

    std::size_t degree_offset(int degree) const { return offsets_[static_cast<std::size_t>(degree)]; }
    std::size_t degree_size(int degree) const;

    std::int64_t coeff(std::span<const int> monomial) const;
    void set_coeff(std::span<const int> monomial, std::int64_t value);

    // Degree and variable indices of the monomial at a flat table position.
    std::vector<int> monomial_at(std::size_t flat_index) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.rank_ == b.rank_ && a.degree_cap_ == b.degree_cap_ && a.table_ == b.table_;
    }

    // Number of table entries for a given rank/cap, or nullopt past `budget`.
    static std::optional<std::size_t> table_entries(int rank, int degree_cap, std::size_t budget);

    // Largest cap whose table fits the default memory budget.
    static int max_cap_within_budget(int rank);

    static constexpr std::size_t kDefaultEntryBudget = std::size_t(1) << 22;

private:
    std::size_t flat_index(std::span<const int> monomial) const;

    int rank_;
    int degree_cap_;
    std::vector<std::size_t> offsets_; // offsets_[d] = start of degree-d block; size cap+2
    std::vector<std::int64_t> table_;
};

// Product truncated beyond the common degree cap.
TruncatedSeries trunc_mul(const TruncatedSeries& u, const TruncatedSeries& v);

// Magnus substitution x_i -> 1 + X_i, x_i^-1 -> sum_{j<=cap} (-1)^j X_i^j,
// multiplied out with truncation. Multiplicative up to truncation.
TruncatedSeries magnus_embed(const Word& w, int degree_cap);

struct LeadingTerm {
    std::vector<int> monomial;
    std::int64_t coeff;
};

// Deglex-least nonconstant monomial with nonzero coefficient, if any.
std::optional<LeadingTerm> least_nonconstant_term(const TruncatedSeries& s);

// Debug rendering, terms in deglex order: `1 + X1*X2 - X2*X1`.
std::string format_series(const TruncatedSeries& s);

} // namespace grouporder

#endif // GROUPORDER_SERIES_HPP
