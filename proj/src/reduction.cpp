#include "grouporder/reduction.hpp"

#include <algorithm>

#include "grouporder/magnus.hpp"
#include "grouporder/order_lift.hpp"
#include "grouporder/sampling.hpp"

namespace grouporder {

namespace {

Word drop_beyond(const Word& w, int window) {
    std::vector<Letter> kept;
    for (Letter l : w.letters()) {
        if (letter_index(l) <= window) kept.push_back(l);
    }
    return Word(window, kept);
}

std::vector<long> exponent_sums(const Word& w, int window) {
    std::vector<long> sums(static_cast<std::size_t>(window), 0);
    for (Letter l : w.letters()) {
        int idx = letter_index(l);
        if (idx <= window) sums[static_cast<std::size_t>(idx - 1)] += letter_sign(l);
    }
    return sums;
}

} // namespace

bool MarkedGroup::member_windowed(const Word& w) const { return member(drop_beyond(w, window)); }

MarkedGroup reduce_map(const StallingsGraph& g, int k) {
    if (g.rank() != k) {
        throw DomainError("RankMismatch", "reduce_map: subgroup rank " + std::to_string(g.rank()) +
                                              " vs k = " + std::to_string(k));
    }
    MarkedGroup n;
    n.window = k + 1;
    n.label = "N_G";
    n.member = [g, k](const Word& w) {
        HElement t = theta(w, k);
        if (!t.g.empty() || !t.ab.b.is_zero()) return false;
        for (const auto& [key, coef] : t.ab.a.coeffs()) {
            if (!contains(g, key)) return false;
        }
        return true;
    };
    return n;
}

PreimageResult preimage_query(const Word& g, int k) {
    HElement t = theta(g, k);
    if (h_is_identity(t)) return {PreimageResult::Kind::Full, {}};
    if (t.g.empty() && t.ab.b.is_zero()) {
        std::vector<Word> words;
        for (const auto& [key, coef] : t.ab.a.coeffs()) words.push_back(key);
        return {PreimageResult::Kind::Cylinder, std::move(words)};
    }
    return {PreimageResult::Kind::Empty, {}};
}

IsoWitnessReport iso_witness(const StallingsGraph& g1, const StallingsGraph& g2, const Word& h,
                             std::uint64_t seed, int samples) {
    if (!(conjugate_subgroup(g1, h) == g2)) {
        throw DomainError("NotConjugate", "h G1 h^-1 != G2 for h = '" + format_word(h) + "'");
    }
    const int rank = g1.rank();
    SIndex s = SIndex::cone_intersection(g1);
    SIndex s_prime = SIndex::cone_intersection(g2);
    auto lifted = lift(conj_aut(h));

    IsoWitnessReport report;
    auto check = [&](const HElement& x) {
        HElement lhs = as_mod(lifted(x), s_prime);
        HElement rhs = lifted(as_mod(x, s));
        ++report.checks;
        if (!(lhs == rhs)) {
            report.ok = false;
            report.failures.push_back("normal form mismatch at " + format_h(x));
        }
        ++report.checks;
        if (hq_sign(lifted(x), s_prime) != hq_sign(x, s)) {
            report.ok = false;
            report.failures.push_back("quotient sign mismatch at " + format_h(x));
        }
    };

    for (const HElement& gen : h_generators(rank)) check(gen);
    // a few A_S generators, which must die in both quotients
    for (const Word& w : cone_intersection_ball(g1, 3)) {
        check({{AVector::basis(w), BVector(rank)}, Word::identity(rank)});
    }
    SampleRng rng(seed);
    for (int i = 0; i < samples; ++i) check(random_h_element(rng, rank));
    return report;
}

Word separating_window_word(const Word& g, int k) {
    const int window = k + 1;
    Word p = positive_form(g);
    std::vector<Letter> shifted;
    for (Letter l : p.letters()) {
        shifted.push_back(make_letter(letter_index(l) + 1, letter_sign(l)));
    }
    Word ghat(window, shifted);
    Word x1(window, {make_letter(1, +1)});
    Word inner = conjugate(ghat, x1);
    return multiply(multiply(x1, inner), multiply(invert(x1), invert(inner)));
}

std::optional<Word> injectivity_witness(const StallingsGraph& g1, const StallingsGraph& g2,
                                        int radius, int radius_cap) {
    if (g1.rank() != g2.rank()) {
        throw DomainError("RankMismatch", "injectivity_witness: rank mismatch");
    }
    if (g1 == g2) {
        throw DomainError("SameSubgroup", "the subgroups are equal; nothing separates them");
    }
    for (const Word& g : ball(g1.rank(), radius, radius_cap)) {
        if (contains(g1, g) != contains(g2, g)) {
            return separating_window_word(g, g1.rank());
        }
    }
    return std::nullopt;
}

MarkedGroup exponent_kernel(int window, int k) {
    MarkedGroup n;
    n.window = window;
    n.label = "N_" + std::to_string(k);
    n.member = [window, k](const Word& w) {
        auto sums = exponent_sums(w, window);
        for (int i = 0; i < k && i < window; ++i) {
            if (sums[static_cast<std::size_t>(i)] != 0) return false;
        }
        return true;
    };
    return n;
}

std::vector<ConvergenceRow> convergence_demo(int k_max, int radius, int radius_cap) {
    std::vector<ConvergenceRow> rows;
    const int window = k_max;
    for (const Word& w : ball(window, radius, radius_cap)) {
        auto sums = exponent_sums(w, window);
        bool in_limit = std::all_of(sums.begin(), sums.end(), [](long s) { return s == 0; });
        for (int k = 1; k <= k_max; ++k) {
            bool in_nk = true;
            for (int i = 0; i < k; ++i) {
                if (sums[static_cast<std::size_t>(i)] != 0) in_nk = false;
            }
            rows.push_back({w, k, in_nk, in_limit});
        }
    }
    return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "word,k,in_Nk,in_limit\n";
    for (const auto& row : rows) {
        out += format_word(row.word);
        out += ',';
        out += std::to_string(row.k);
        out += ',';
        out += row.in_nk ? '1' : '0';
        out += ',';
        out += row.in_limit ? '1' : '0';
        out += '\n';
    }
    return out;
}

MarkedGroup perturb(const MarkedGroup& n, const std::vector<Word>& constraints) {
    for (const Word& c : constraints) {
        if (!n.member_windowed(c)) {
            throw DomainError("ConstraintViolated",
                              "'" + format_word(c) + "' is not a member of " + n.label);
        }
    }
    const int ell = n.window + 1;
    MarkedGroup k;
    k.window = ell;
    k.label = n.label + " perturbed at x" + std::to_string(ell);
    k.member = [n, ell](const Word& w) {
        long sum_ell = 0;
        std::vector<Letter> kept;
        for (Letter l : w.letters()) {
            int idx = letter_index(l);
            if (idx < ell) {
                kept.push_back(l);
            } else if (idx == ell) {
                sum_ell += letter_sign(l);
            }
        }
        return sum_ell == 0 && n.member(Word(ell - 1, kept));
    };
    return k;
}

} // namespace grouporder
