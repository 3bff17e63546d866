#include "grouporder/series.hpp"

#include <limits>

#include "grouporder/kernels.hpp"

namespace grouporder {

std::optional<std::size_t> TruncatedSeries::table_entries(int rank, int degree_cap,
                                                          std::size_t budget) {
    std::size_t total = 0;
    std::size_t block = 1;
    for (int d = 0; d <= degree_cap; ++d) {
        if (block > budget || total > budget - block) return std::nullopt;
        total += block;
        if (d < degree_cap) {
            if (block > budget / static_cast<std::size_t>(rank)) return std::nullopt;
            block *= static_cast<std::size_t>(rank);
        }
    }
    return total;
}

int TruncatedSeries::max_cap_within_budget(int rank) {
    int cap = 0;
    while (table_entries(rank, cap + 1, kDefaultEntryBudget).has_value()) ++cap;
    return cap;
}

TruncatedSeries::TruncatedSeries(int rank, int degree_cap) : rank_(rank), degree_cap_(degree_cap) {
    if (rank < 1) throw DomainError("IndexOutOfRank", "series rank must be >= 1");
    if (degree_cap < 1) throw DomainError("TruncationExhausted", "degree cap must be >= 1");
    auto entries = table_entries(rank, degree_cap, kDefaultEntryBudget);
    if (!entries.has_value()) {
        throw DomainError("TruncationExhausted",
                          "series table for rank " + std::to_string(rank) + ", cap " +
                              std::to_string(degree_cap) + " exceeds the memory budget");
    }
    offsets_.resize(static_cast<std::size_t>(degree_cap) + 2);
    std::size_t off = 0;
    std::size_t block = 1;
    for (int d = 0; d <= degree_cap; ++d) {
        offsets_[static_cast<std::size_t>(d)] = off;
        off += block;
        block *= static_cast<std::size_t>(rank);
    }
    offsets_[static_cast<std::size_t>(degree_cap) + 1] = off;
    table_.assign(off, 0);
}

TruncatedSeries TruncatedSeries::one(int rank, int degree_cap) {
    TruncatedSeries s(rank, degree_cap);
    s.table_[0] = 1;
    return s;
}

std::size_t TruncatedSeries::degree_size(int degree) const {
    return offsets_[static_cast<std::size_t>(degree) + 1] - offsets_[static_cast<std::size_t>(degree)];
}

std::size_t TruncatedSeries::flat_index(std::span<const int> monomial) const {
    if (static_cast<int>(monomial.size()) > degree_cap_) {
        throw DomainError("TruncationExhausted", "monomial degree exceeds the cap");
    }
    std::size_t code = 0;
    for (int idx : monomial) {
        if (idx < 1 || idx > rank_) {
            throw DomainError("IndexOutOfRank", "monomial index " + std::to_string(idx));
        }
        code = code * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(idx - 1);
    }
    return offsets_[monomial.size()] + code;
}

std::int64_t TruncatedSeries::coeff(std::span<const int> monomial) const {
    return table_[flat_index(monomial)];
}

void TruncatedSeries::set_coeff(std::span<const int> monomial, std::int64_t value) {
    table_[flat_index(monomial)] = value;
}

std::vector<int> TruncatedSeries::monomial_at(std::size_t flat_index) const {
    int degree = 0;
    while (offsets_[static_cast<std::size_t>(degree) + 1] <= flat_index) ++degree;
    std::size_t code = flat_index - offsets_[static_cast<std::size_t>(degree)];
    std::vector<int> monomial(static_cast<std::size_t>(degree));
    for (int pos = degree - 1; pos >= 0; --pos) {
        monomial[static_cast<std::size_t>(pos)] =
            static_cast<int>(code % static_cast<std::size_t>(rank_)) + 1;
        code /= static_cast<std::size_t>(rank_);
    }
    return monomial;
}

TruncatedSeries trunc_mul(const TruncatedSeries& u, const TruncatedSeries& v) {
    if (u.rank() != v.rank() || u.degree_cap() != v.degree_cap()) {
        throw DomainError("RankMismatch", "series rank/cap mismatch in trunc_mul");
    }
    const int cap = u.degree_cap();
    const auto& ops = kernels::active_ops();
    TruncatedSeries out(u.rank(), cap);
    std::int64_t* dst = out.table().data();
    const std::int64_t* vt = v.table().data();
    const std::int64_t* ut = u.table().data();
    for (int d1 = 0; d1 <= cap; ++d1) {
        const std::size_t u_off = u.degree_offset(d1);
        const std::size_t u_cnt = u.degree_size(d1);
        for (std::size_t c1 = 0; c1 < u_cnt; ++c1) {
            const std::int64_t a = ut[u_off + c1];
            if (a == 0) continue;
            // Appending a degree-d2 code to c1 lands in one contiguous run
            // of the degree-(d1+d2) block, so each partial product is a
            // single axpy over that run.
            for (int d2 = 0; d2 + d1 <= cap; ++d2) {
                const std::size_t v_cnt = v.degree_size(d2);
                ops.axpy(dst + out.degree_offset(d1 + d2) + c1 * v_cnt, vt + v.degree_offset(d2),
                         v_cnt, a);
            }
        }
    }
    return out;
}

namespace {

TruncatedSeries letter_factor(int rank, int cap, Letter l) {
    TruncatedSeries f(rank, cap);
    auto* t = f.table().data();
    t[0] = 1;
    const int index = letter_index(l);
    if (l > 0) {
        t[f.degree_offset(1) + static_cast<std::size_t>(index - 1)] = 1;
    } else {
        // geometric inverse: 1 - Xi + Xi^2 - ...
        std::size_t code = 0;
        std::int64_t sign = 1;
        for (int j = 1; j <= cap; ++j) {
            code = code * static_cast<std::size_t>(rank) + static_cast<std::size_t>(index - 1);
            sign = -sign;
            t[f.degree_offset(j) + code] = sign;
        }
    }
    return f;
}

} // namespace

TruncatedSeries magnus_embed(const Word& w, int degree_cap) {
    TruncatedSeries acc = TruncatedSeries::one(w.rank(), degree_cap);
    for (Letter l : w.letters()) {
        acc = trunc_mul(acc, letter_factor(w.rank(), degree_cap, l));
    }
    return acc;
}

std::optional<LeadingTerm> least_nonconstant_term(const TruncatedSeries& s) {
    const auto& ops = kernels::active_ops();
    auto t = s.table();
    std::size_t pos = 1 + ops.first_nonzero(t.data() + 1, t.size() - 1);
    if (pos == t.size()) return std::nullopt;
    return LeadingTerm{s.monomial_at(pos), t[pos]};
}

std::string format_series(const TruncatedSeries& s) {
    std::string out;
    auto t = s.table();
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::int64_t c = t[i];
        if (c == 0) continue;
        const bool first = out.empty();
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::uint64_t mag = c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        auto monomial = s.monomial_at(i);
        if (monomial.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) {
                out += std::to_string(mag);
                out += '*';
            }
            for (std::size_t j = 0; j < monomial.size(); ++j) {
                if (j > 0) out += '*';
                out += 'X';
                out += std::to_string(monomial[j]);
            }
        }
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace grouporder
