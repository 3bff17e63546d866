#include "grouporder/hgp.hpp"

#include <algorithm>

namespace grouporder {

namespace {

void check_rank(int expected, int got, const char* what) {
    if (expected != got) {
        throw DomainError("RankMismatch", std::string(what) + ": ranks " +
                                              std::to_string(expected) + " and " +
                                              std::to_string(got));
    }
}

void strip_zeros(SparseVec& v) {
    for (auto it = v.begin(); it != v.end();) {
        it = it->second == 0 ? v.erase(it) : std::next(it);
    }
}

SparseVec add_sparse(const SparseVec& x, const SparseVec& y) {
    SparseVec out = x;
    for (const auto& [key, coef] : y) {
        auto [it, inserted] = out.try_emplace(key, coef);
        if (!inserted && (it->second += coef) == 0) out.erase(it);
    }
    return out;
}

SparseVec negate_sparse(const SparseVec& x) {
    SparseVec out = x;
    for (auto& [key, coef] : out) coef = -coef;
    return out;
}

} // namespace

AVector::AVector(int rank, SparseVec coeffs) : rank_(rank), coeffs_(std::move(coeffs)) {
    strip_zeros(coeffs_);
    for (const auto& [key, coef] : coeffs_) {
        check_rank(rank_, key.rank(), "AVector key");
        if (magnus_sign(key) != Sign::Positive) {
            throw DomainError("NotPositive",
                              "A is indexed by the positive cone; got '" + format_word(key) + "'");
        }
    }
}

AVector AVector::basis(const Word& h, std::int64_t coef) {
    SparseVec v;
    if (coef != 0) v.emplace(h, coef);
    return AVector(h.rank(), std::move(v));
}

AVector operator+(const AVector& x, const AVector& y) {
    check_rank(x.rank_, y.rank_, "AVector add");
    AVector out(x.rank_);
    out.coeffs_ = add_sparse(x.coeffs_, y.coeffs_);
    return out;
}

AVector operator-(const AVector& x) {
    AVector out(x.rank_);
    out.coeffs_ = negate_sparse(x.coeffs_);
    return out;
}

BVector::BVector(int rank, SparseVec coeffs) : rank_(rank), coeffs_(std::move(coeffs)) {
    strip_zeros(coeffs_);
    for (const auto& [key, coef] : coeffs_) {
        check_rank(rank_, key.rank(), "BVector key");
    }
}

BVector BVector::basis(const Word& g, std::int64_t coef) {
    SparseVec v;
    if (coef != 0) v.emplace(g, coef);
    return BVector(g.rank(), std::move(v));
}

BVector operator+(const BVector& x, const BVector& y) {
    check_rank(x.rank_, y.rank_, "BVector add");
    BVector out(x.rank_);
    out.coeffs_ = add_sparse(x.coeffs_, y.coeffs_);
    return out;
}

BVector operator-(const BVector& x) {
    BVector out(x.rank_);
    out.coeffs_ = negate_sparse(x.coeffs_);
    return out;
}

AVector cocycle_f(const BVector& x, const BVector& y) {
    check_rank(x.rank(), y.rank(), "cocycle_f");
    SparseVec acc;
    for (const auto& [g, s] : x.coeffs()) {
        for (const auto& [h, t] : y.coeffs()) {
            if (magnus_compare(g, h) != Ordering::Less) continue;
            Word key = multiply(invert(g), h);
            auto [it, inserted] = acc.try_emplace(key, s * t);
            if (!inserted && (it->second += s * t) == 0) acc.erase(it);
        }
    }
    return AVector(x.rank(), std::move(acc));
}

BfElement bf_identity(int rank) { return {AVector(rank), BVector(rank)}; }

BfElement bf_mul(const BfElement& x, const BfElement& y) {
    return {x.a + y.a + cocycle_f(x.b, y.b), x.b + y.b};
}

BfElement bf_inv(const BfElement& x) {
    return {-(x.a + cocycle_f(x.b, -x.b)), -x.b};
}

BVector g_action(const Word& g, const BVector& b) {
    check_rank(g.rank(), b.rank(), "g_action");
    SparseVec out;
    for (const auto& [key, coef] : b.coeffs()) {
        out.emplace(multiply(g, key), coef);
    }
    return BVector(b.rank(), std::move(out));
}

BfElement g_action(const Word& g, const BfElement& x) { return {x.a, g_action(g, x.b)}; }

HElement h_identity(int rank) { return {bf_identity(rank), Word::identity(rank)}; }

HElement h_mul(const HElement& x, const HElement& y) {
    check_rank(x.rank(), y.rank(), "h_mul");
    return {bf_mul(x.ab, g_action(x.g, y.ab)), multiply(x.g, y.g)};
}

HElement h_inv(const HElement& x) {
    Word gi = invert(x.g);
    return {g_action(gi, bf_inv(x.ab)), gi};
}

bool h_is_identity(const HElement& x) {
    return x.g.empty() && x.ab.a.is_zero() && x.ab.b.is_zero();
}

std::vector<HElement> h_generators(int rank) {
    std::vector<HElement> gens;
    gens.push_back({{AVector(rank), BVector::basis(Word::identity(rank))}, Word::identity(rank)});
    for (int i = 1; i <= rank; ++i) {
        gens.push_back({bf_identity(rank), Word(rank, {make_letter(i, +1)})});
    }
    return gens;
}

HElement theta(const Word& w, int k) {
    std::vector<HElement> gens = h_generators(k);
    HElement acc = h_identity(k);
    for (Letter l : w.letters()) {
        int idx = letter_index(l);
        if (idx > k + 1) continue; // outside the window: acts as the identity
        const HElement& gen = gens[static_cast<std::size_t>(idx - 1)];
        acc = h_mul(acc, l > 0 ? gen : h_inv(gen));
    }
    return acc;
}

SIndex SIndex::cone_intersection(StallingsGraph g) {
    int rank = g.rank();
    return SIndex(rank, std::move(g), {});
}

SIndex SIndex::explicit_finite(int rank, const std::vector<Word>& words) {
    std::set<std::string> keys;
    for (const Word& w : words) {
        check_rank(rank, w.rank(), "SIndex word");
        if (magnus_sign(w) != Sign::Positive) {
            throw DomainError("NotPositive",
                              "S must be a subset of P; got '" + format_word(w) + "'");
        }
        keys.insert(format_word(w));
    }
    return SIndex(rank, std::nullopt, std::move(keys));
}

bool SIndex::contains_key(const Word& w) const {
    if (graph_.has_value()) {
        return contains(*graph_, w) && magnus_sign(w) == Sign::Positive;
    }
    return words_.count(format_word(w)) != 0;
}

std::string SIndex::describe() const {
    if (graph_.has_value()) return "P n <subgroup>";
    std::string out = "{";
    for (const auto& w : words_) {
        if (out.size() > 1) out += ", ";
        out += w;
    }
    return out + "}";
}

HElement as_mod(const HElement& x, const SIndex& s) {
    check_rank(x.rank(), s.rank(), "as_mod");
    SparseVec kept;
    for (const auto& [key, coef] : x.ab.a.coeffs()) {
        if (!s.contains_key(key)) kept.emplace(key, coef);
    }
    return {{AVector(x.rank(), std::move(kept)), x.ab.b}, x.g};
}

Sign least_index_sign(const SparseVec& coeffs) {
    if (coeffs.empty()) return Sign::Zero;
    auto least = coeffs.begin();
    for (auto it = std::next(coeffs.begin()); it != coeffs.end(); ++it) {
        if (magnus_compare(it->first, least->first) == Ordering::Less) least = it;
    }
    return least->second > 0 ? Sign::Positive : Sign::Negative;
}

Sign hq_sign(const HElement& x, const SIndex& s) {
    // Quotient-before-kernel at each stage of
    //   1 -> B_f/A_S -> H/A_S -> G -> 1   and   1 -> A/A_S -> B_f/A_S -> B -> 1,
    // so the priority is G, then B, then A mod S.
    HElement n = as_mod(x, s);
    if (!n.g.empty()) return magnus_sign(n.g);
    if (!n.ab.b.is_zero()) return least_index_sign(n.ab.b.coeffs());
    return least_index_sign(n.ab.a.coeffs());
}

namespace {

std::string format_sparse(const SparseVec& v) {
    std::string out = "[";
    for (const auto& [key, coef] : v) {
        if (out.size() > 1) out += ',';
        out += "{\"key\":\"" + format_word(key) + "\",\"coef\":" + std::to_string(coef) + "}";
    }
    return out + "]";
}

} // namespace

std::string format_a(const AVector& a) { return format_sparse(a.coeffs()); }

std::string format_b(const BVector& b) { return format_sparse(b.coeffs()); }

std::string format_h(const HElement& x) {
    return "{\"a\":" + format_a(x.ab.a) + ",\"b\":" + format_b(x.ab.b) + ",\"g\":\"" +
           format_word(x.g) + "\"}";
}

GroupOps<HElement> h_group_ops(int rank) {
    return {[](const HElement& x, const HElement& y) { return h_mul(x, y); },
            [](const HElement& x) { return h_inv(x); }, h_identity(rank),
            [](const HElement& x) { return format_h(x); }};
}

GroupOps<HElement> hq_group_ops(int rank, const SIndex& s) {
    return {[s](const HElement& x, const HElement& y) { return as_mod(h_mul(x, y), s); },
            [s](const HElement& x) { return as_mod(h_inv(x), s); }, h_identity(rank),
            [](const HElement& x) { return format_h(x); }};
}

ConeOracle<HElement> hq_cone(const SIndex& s) {
    return {[s](const HElement& x) {
                switch (hq_sign(x, s)) {
                case Sign::Positive: return ConeClass::Pos;
                case Sign::Negative: return ConeClass::Neg;
                default: return ConeClass::Sub;
                }
            },
            "bi-order of H/A_S, S = " + s.describe()};
}

ConeOracle<BVector> semidirect_b_cone() {
    return {[](const BVector& b) {
                switch (least_index_sign(b.coeffs())) {
                case Sign::Positive: return ConeClass::Pos;
                case Sign::Negative: return ConeClass::Neg;
                default: return ConeClass::Sub;
                }
            },
            "least-index cone on B"};
}

GroupOps<BVector> b_group_ops(int rank) {
    return {[](const BVector& x, const BVector& y) { return x + y; },
            [](const BVector& x) { return -x; }, BVector(rank),
            [](const BVector& x) { return format_b(x); }};
}

} // namespace grouporder
