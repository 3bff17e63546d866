#include "grouporder/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "grouporder/cones.hpp"
#include "grouporder/hgp.hpp"
#include "grouporder/magnus.hpp"
#include "grouporder/order_lift.hpp"
#include "grouporder/reduction.hpp"
#include "grouporder/sampling.hpp"
#include "grouporder/stallings.hpp"
#include "grouporder/words.hpp"

namespace grouporder {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    Timer() : start_(Clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

private:
    Clock::time_point start_;
};

const Word& pick(SampleRng& rng, const std::vector<Word>& pool) {
    return pool[rng.bounded(pool.size())];
}

ConeOracle<Word> magnus_word_cone() {
    return {[](const Word& w) {
                switch (magnus_sign(w)) {
                case Sign::Positive: return ConeClass::Pos;
                case Sign::Negative: return ConeClass::Neg;
                default: return ConeClass::Sub;
                }
            },
            "Magnus cone"};
}

GroupOps<Word> word_group_ops(int rank) {
    return {[](const Word& u, const Word& v) { return multiply(u, v); },
            [](const Word& w) { return invert(w); }, Word::identity(rank),
            [](const Word& w) { return format_word(w); }};
}

// ---------------------------------------------------------------------------
// Criterion 1: the 2-cocycle identity on basis triples, plus normalization
// and the f(b, -b) symmetry, all exact.

using CocycleFn = std::function<AVector(const BVector&, const BVector&)>;

void cocycle_identity_suite(SuiteResult& r, const CocycleFn& f, int radius) {
    const std::vector<Word> basis = ball(2, radius);
    const BVector zero(2);
    for (const Word& w : basis) {
        ++r.checks;
        if (!f(zero, BVector::basis(w)).is_zero() || !f(BVector::basis(w), zero).is_zero()) {
            r.fail("normalization fails at b_" + format_word(w));
        }
    }
    for (const Word& u : basis) {
        BVector bu = BVector::basis(u);
        for (const Word& v : basis) {
            BVector bv = BVector::basis(v);
            for (const Word& w : basis) {
                BVector bw = BVector::basis(w);
                AVector lhs = f(bv, bw) + (-f(bu + bv, bw)) + f(bu, bv + bw) + (-f(bu, bv));
                ++r.checks;
                if (!lhs.is_zero()) {
                    r.fail("cocycle identity fails at (" + format_word(u) + ", " +
                           format_word(v) + ", " + format_word(w) + ")");
                }
            }
        }
    }
    // f(b, -b) = f(-b, b) (= 0) for basis vectors over ball(2,3)
    for (const Word& g : ball(2, 3)) {
        BVector b = BVector::basis(g);
        ++r.checks;
        if (!(f(b, -b) == f(-b, b)) || !f(b, -b).is_zero()) {
            r.fail("f(b,-b) symmetry fails at b_" + format_word(g));
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 2: the Magnus order is a bi-order (exhaustive totality and
// antisymmetry; seeded semigroup, left invariance, conjugation invariance).

void magnus_order_suite(SuiteResult& r, SampleRng& rng) {
    const std::vector<Word> b4 = ball(2, 4);
    for (const Word& u : b4) {
        for (const Word& v : b4) {
            ++r.checks;
            if (u == v) {
                if (magnus_compare(u, v) != Ordering::Equal) {
                    r.fail("compare(w, w) != Equal at " + format_word(u));
                }
                continue;
            }
            Ordering uv = magnus_compare(u, v);
            Ordering vu = magnus_compare(v, u);
            if (uv == Ordering::Equal || vu == Ordering::Equal ||
                (uv == Ordering::Less) == (vu == Ordering::Less)) {
                r.fail("totality/antisymmetry fails at (" + format_word(u) + ", " +
                       format_word(v) + ")");
            }
        }
    }
    // P, P^-1, {id} partition the ball; sign(w^-1) = -sign(w)
    for (const Word& w : b4) {
        Sign s = magnus_sign(w);
        Sign si = magnus_sign(invert(w));
        ++r.checks;
        if (w.empty() ? (s != Sign::Zero)
                      : (s == Sign::Zero || static_cast<int>(s) != -static_cast<int>(si))) {
            r.fail("partition/inverse law fails at " + format_word(w));
        }
    }

    const std::vector<Word> pos5 = positive_ball(2, 5);
    for (int i = 0; i < 1000; ++i) {
        const Word& u = pick(rng, pos5);
        const Word& v = pick(rng, pos5);
        ++r.checks;
        if (magnus_sign(multiply(u, v)) != Sign::Positive) {
            r.fail("semigroup fails at (" + format_word(u) + ", " + format_word(v) + ")");
        }
    }
    for (int i = 0; i < 1000; ++i) {
        const Word& g = pick(rng, b4);
        const Word& u = pick(rng, b4);
        const Word& v = pick(rng, b4);
        ++r.checks;
        if (magnus_compare(multiply(g, u), multiply(g, v)) != magnus_compare(u, v)) {
            r.fail("left invariance fails at g=" + format_word(g));
        }
    }
    for (int i = 0; i < 1000; ++i) {
        const Word& h = pick(rng, b4);
        const Word& w = pick(rng, b4);
        ++r.checks;
        if (magnus_sign(conjugate(h, w)) != magnus_sign(w)) {
            r.fail("conjugation invariance fails at (" + format_word(h) + ", " +
                   format_word(w) + ")");
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 3: group axioms of H(G, P), exact on seeded triples.

void h_axioms_suite(SuiteResult& r, SampleRng& rng) {
    const HElement id = h_identity(2);
    for (int i = 0; i < 500; ++i) {
        HElement x = random_h_element(rng, 2);
        HElement y = random_h_element(rng, 2);
        HElement z = random_h_element(rng, 2);
        ++r.checks;
        if (!(h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z)))) {
            r.fail("associativity fails at " + format_h(x));
        }
        ++r.checks;
        if (!(h_mul(x, id) == x) || !(h_mul(id, x) == x)) {
            r.fail("identity law fails at " + format_h(x));
        }
        ++r.checks;
        if (!h_is_identity(h_mul(x, h_inv(x))) || !h_is_identity(h_mul(h_inv(x), x))) {
            r.fail("inverse law fails at " + format_h(x));
        }
    }
    // A is central: a-only elements commute with everything
    for (int i = 0; i < 500; ++i) {
        HElement x = random_h_element(rng, 2);
        HElement alpha{{random_a_vector(rng, 2, 3, 3), BVector(2)}, Word::identity(2)};
        ++r.checks;
        if (!(h_mul(x, alpha) == h_mul(alpha, x))) {
            r.fail("centrality of A fails at " + format_h(alpha));
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 4: [(0, b_id), (0, b_h)] = (a_h, 0) for every positive h.

void commutator_suite(SuiteResult& r, const CocycleFn& f, int radius) {
    // the commutator evaluated from the central-extension product built on f
    auto mul = [&f](const BfElement& x, const BfElement& y) {
        return BfElement{x.a + y.a + f(x.b, y.b), x.b + y.b};
    };
    auto inv = [&f](const BfElement& x) {
        return BfElement{-(x.a + f(x.b, -x.b)), -x.b};
    };
    const BfElement e0{AVector(2), BVector::basis(Word::identity(2))};
    for (const Word& h : positive_ball(2, radius)) {
        BfElement eh{AVector(2), BVector::basis(h)};
        BfElement comm = mul(mul(mul(e0, eh), inv(e0)), inv(eh));
        BfElement expected{AVector::basis(h), BVector(2)};
        ++r.checks;
        if (!(comm == expected)) {
            r.fail("commutator identity fails at h = " + format_word(h));
        }
    }
}

// the printed basis rule f(b_id, b_h) = a_h for positive h
void cocycle_basis_rule_suite(SuiteResult& r, const CocycleFn& f, int radius) {
    const BVector b_id = BVector::basis(Word::identity(2));
    for (const Word& h : positive_ball(2, radius)) {
        ++r.checks;
        if (!(f(b_id, BVector::basis(h)) == AVector::basis(h))) {
            r.fail("basis rule fails at h = " + format_word(h));
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 5: the lift is a homomorphism and is cocycle-compatible.

void lift_suite(SuiteResult& r, SampleRng& rng) {
    const std::vector<Word> b3 = ball(2, 3);
    for (int c = 0; c < 20; ++c) {
        const Word& h = pick(rng, b3);
        auto lifted = lift(conj_aut(h));
        for (int i = 0; i < 200; ++i) {
            HElement x = random_h_element(rng, 2);
            HElement y = random_h_element(rng, 2);
            ++r.checks;
            if (!(lifted(h_mul(x, y)) == h_mul(lifted(x), lifted(y)))) {
                r.fail("lift homomorphism law fails for h = " + format_word(h));
            }
        }
        Aut1Report aut1 = check_aut1(conj_aut(h), 2);
        r.checks += aut1.checks;
        if (!aut1.ok) {
            r.fail("cocycle compatibility fails for h = " + format_word(h));
        }
        // the printed formula: lift maps (a_w, 0, id) to (a_{phi(w)}, 0, id)
        for (const Word& w : positive_ball(2, 2)) {
            HElement x{{AVector::basis(w), BVector(2)}, Word::identity(2)};
            HElement expected{{AVector::basis(conjugate(h, w)), BVector(2)}, Word::identity(2)};
            ++r.checks;
            if (!(lifted(x) == expected)) {
                r.fail("a-generator image fails for h = " + format_word(h));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 6: reduce_map membership against an independent evaluator that
// multiplies one-step normal forms over string-keyed tables.

struct OracleState {
    std::map<std::string, long long> a;
    std::vector<std::pair<Word, long long>> b;
    Word g = Word::identity(2);
};

void oracle_step(OracleState& st, Letter l, int k) {
    const int idx = letter_index(l);
    if (idx > k + 1) return;
    if (idx >= 2) {
        st.g = multiply(st.g, Word(k, {make_letter(idx - 1, letter_sign(l))}));
        return;
    }
    // the b_id generator: (A, B, g)(0, +-b_id, id) = (A +- f(B, b_g), B +- b_g, g)
    const long long t = letter_sign(l);
    for (const auto& [u, coef] : st.b) {
        if (magnus_compare(u, st.g) == Ordering::Less) {
            std::string key = format_word(multiply(invert(u), st.g));
            if ((st.a[key] += t * coef) == 0) st.a.erase(key);
        }
    }
    bool found = false;
    for (auto& [u, coef] : st.b) {
        if (u == st.g) {
            coef += t;
            found = true;
            break;
        }
    }
    if (!found) st.b.emplace_back(st.g, t);
}

bool oracle_member(const Word& w, const StallingsGraph& g, int k) {
    OracleState st;
    for (Letter l : w.letters()) oracle_step(st, l, k);
    if (!st.g.empty()) return false;
    for (const auto& [u, coef] : st.b) {
        if (coef != 0) return false;
    }
    for (const auto& [key, coef] : st.a) {
        if (coef != 0 && !contains(g, parse_word(key, 2))) return false;
    }
    return true;
}

void reduction_oracle_suite(SuiteResult& r, SampleRng& rng) {
    const std::vector<Word> window_ball = ball(3, 4);
    for (int i = 0; i < 5; ++i) {
        StallingsGraph g = random_subgroup(rng, 2);
        MarkedGroup n = reduce_map(g, 2);
        for (const Word& w : window_ball) {
            ++r.checks;
            if (n.member(w) != oracle_member(w, g, 2)) {
                r.fail("oracle disagrees at w = " + format_word(w));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 7: the preimage case analysis is consistent with membership.

void preimage_suite(SuiteResult& r, SampleRng& rng) {
    for (int i = 0; i < 50; ++i) {
        StallingsGraph g = random_subgroup(rng, 2);
        MarkedGroup n = reduce_map(g, 2);
        for (int j = 0; j < 30; ++j) {
            Word q = random_reduced_word(rng, 3, 4);
            PreimageResult pre = preimage_query(q, 2);
            bool expected;
            switch (pre.kind) {
            case PreimageResult::Kind::Full: expected = true; break;
            case PreimageResult::Kind::Empty: expected = false; break;
            case PreimageResult::Kind::Cylinder:
                expected = std::all_of(pre.words.begin(), pre.words.end(),
                                       [&g](const Word& w) { return contains(g, w); });
                break;
            }
            ++r.checks;
            if (n.member(q) != expected) {
                r.fail("preimage case disagrees at g = " + format_word(q));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 8: isomorphism witnesses for conjugate subgroups, separating
// witnesses for distinct ones.

void witness_suite(SuiteResult& r, SampleRng& rng, std::uint64_t seed) {
    for (int i = 0; i < 10; ++i) {
        StallingsGraph g = random_subgroup(rng, 2);
        Word h = random_reduced_word(rng, 2, 3);
        IsoWitnessReport report = iso_witness(g, conjugate_subgroup(g, h), h, seed);
        r.checks += report.checks;
        if (!report.ok) {
            r.fail("iso witness fails for h = " + format_word(h) +
                   (report.failures.empty() ? "" : ": " + report.failures.front()));
        }
    }
    int found = 0;
    while (found < 10) {
        StallingsGraph g1 = random_subgroup(rng, 2);
        StallingsGraph g2 = random_subgroup(rng, 2);
        if (g1 == g2) continue;
        ++found;
        auto w = injectivity_witness(g1, g2, 4);
        ++r.checks;
        if (!w.has_value()) {
            r.fail("no separating word within radius 4");
            continue;
        }
        if (reduce_map(g1, 2).member(*w) == reduce_map(g2, 2).member(*w)) {
            r.fail("marked groups agree on the witness " + format_word(*w));
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 9: hq_sign is a bi-order of H/A_S.

std::vector<HElement> coset_sample(SampleRng& rng, const SIndex& s, std::size_t target) {
    std::vector<HElement> elems{h_identity(2)};
    std::vector<std::string> seen{format_h(elems.front())};
    auto add = [&](const HElement& x) {
        std::string key = format_h(x);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(std::move(key));
            elems.push_back(x);
        }
    };
    // raw A_S members (they classify Sub and exercise the C P C condition)
    if (s.graph() != nullptr) {
        for (const Word& w : cone_intersection_ball(*s.graph(), 2)) {
            add({{AVector::basis(w), BVector(2)}, Word::identity(2)});
            add({{-AVector::basis(w), BVector(2)}, Word::identity(2)});
        }
    }
    while (elems.size() < target) {
        HElement x = random_h_element(rng, 2);
        add(as_mod(x, s));
        add(as_mod(h_inv(x), s));
    }
    return elems;
}

void quotient_order_suite(SuiteResult& r, SampleRng& rng) {
    const Word e1(2, {1});
    const Word e1e2(2, {1, 2});
    for (const Word& gen : {e1, e1e2}) {
        SIndex s = SIndex::cone_intersection(fold(2, {gen}));
        ConeOracle<HElement> oracle = hq_cone(s);
        GroupOps<HElement> ops = hq_group_ops(2, s);
        std::vector<HElement> elems = coset_sample(rng, s, 61);
        std::vector<HElement> conjugators;
        for (int i = 0; i < 20; ++i) {
            conjugators.push_back(as_mod(random_h_element(rng, 2), s));
        }
        BallReport report = check_bicone(oracle, ops, elems, conjugators);
        r.checks += elems.size() * elems.size(); // order of magnitude of the pair checks
        if (!report.ok) {
            r.fail("check_bicone fails for S = P n <" + format_word(gen) + ">: " +
                   std::string(to_string(report.violations.front().condition)));
        }
        // A_S elements classify Sub, and hq_sign is Zero exactly on A_S
        for (const Word& w : cone_intersection_ball(*s.graph(), 3)) {
            HElement x{{AVector::basis(w), BVector(2)}, Word::identity(2)};
            ++r.checks;
            if (oracle.classify(x) != ConeClass::Sub || hq_sign(x, s) != Sign::Zero) {
                r.fail("A_S element not classified Sub at a_" + format_word(w));
            }
        }
        // hq_sign conjugation invariance directly on raw elements
        for (int i = 0; i < 500; ++i) {
            HElement x = random_h_element(rng, 2);
            HElement y = random_h_element(rng, 2);
            ++r.checks;
            if (hq_sign(h_mul(h_mul(y, x), h_inv(y)), s) != hq_sign(x, s)) {
                r.fail("hq_sign conjugation invariance fails");
            }
        }
        // as_mod is a homomorphism-compatible normal form
        for (int i = 0; i < 500; ++i) {
            HElement x = random_h_element(rng, 2);
            HElement y = random_h_element(rng, 2);
            ++r.checks;
            if (!(as_mod(h_mul(x, y), s) == as_mod(h_mul(as_mod(x, s), as_mod(y, s)), s))) {
                r.fail("as_mod normal form is not multiplicative");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 10: the convergence and perturbation demos.

void demo_suite(SuiteResult& r) {
    auto rows = convergence_demo(4, 3);
    std::map<std::string, std::vector<const ConvergenceRow*>> by_word;
    for (const auto& row : rows) by_word[format_word(row.word)].push_back(&row);
    for (const auto& [text, group] : by_word) {
        bool prev = true;
        for (const ConvergenceRow* row : group) {
            ++r.checks;
            if (row->in_limit && !row->in_nk) {
                r.fail("limit member missing from N_" + std::to_string(row->k) + ": " + text);
            }
            if (!prev && row->in_nk) {
                r.fail("membership not monotone in k at " + text);
            }
            prev = row->in_nk;
        }
        ++r.checks;
        if (group.back()->in_nk != group.back()->in_limit) {
            r.fail("no stabilization at window for " + text);
        }
    }
    // spot rows from the construction
    MarkedGroup n2 = exponent_kernel(4, 2);
    MarkedGroup n3 = exponent_kernel(4, 3);
    Word x3(4, {3});
    Word comm(4, {1, 2, -1, -2});
    ++r.checks;
    if (!n2.member(x3) || n3.member(x3) || !n2.member(comm) || !n3.member(comm)) {
        r.fail("exponent kernel spot checks fail");
    }

    // perturbation: agree on the constraints, differ at x_ell
    StallingsGraph g = fold(2, {Word(2, {1})});
    MarkedGroup n = reduce_map(g, 2);
    std::vector<Word> constraints{Word::identity(3), separating_window_word(Word(2, {1}), 2)};
    MarkedGroup k = perturb(n, constraints);
    ++r.checks;
    if (k.window != n.window + 1) r.fail("perturb window not extended by one");
    for (const Word& c : constraints) {
        ++r.checks;
        if (k.member_windowed(c) != n.member_windowed(c)) {
            r.fail("perturbation disagrees on constraint " + format_word(c));
        }
    }
    Word x_ell(k.window, {make_letter(k.window, +1)});
    ++r.checks;
    if (k.member(x_ell) || !n.member_windowed(x_ell)) {
        r.fail("perturbation does not differ at x_ell");
    }
    // empty constraint list is allowed
    MarkedGroup k2 = perturb(n, {});
    ++r.checks;
    if (!k2.member(Word::identity(k2.window))) r.fail("perturb of empty constraints broken");
}

// ---------------------------------------------------------------------------
// Criterion 11: prescribed single-point mutations must each break a suite.

std::vector<Letter> reduce_oracle_fixed_point(std::vector<Letter> cur) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] == static_cast<Letter>(-cur[i + 1])) {
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i),
                          cur.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

using ReduceFn = std::function<std::vector<Letter>(const std::vector<Letter>&)>;

bool reduce_suite_ok(const ReduceFn& fn, std::size_t* checks) {
    // exhaustive over rank-2 letter sequences of length <= 5
    std::vector<std::vector<Letter>> seqs{{}};
    for (int len = 0; len < 5; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& s : seqs) {
            for (int key = 0; key < 4; ++key) {
                auto t = s;
                t.push_back(letter_from_key(key));
                next.push_back(std::move(t));
            }
        }
        for (auto& s : next) {
            ++*checks;
            if (fn(s) != reduce_oracle_fixed_point(s)) return false;
        }
        seqs = std::move(next);
    }
    return true;
}

using BallFn = std::function<std::vector<Word>(int, int)>;

bool sphere_counts_ok(const BallFn& fn, std::size_t* checks) {
    for (int k : {1, 2, 3}) {
        for (int radius = 0; radius <= 4; ++radius) {
            std::vector<Word> b = fn(k, radius);
            std::map<std::size_t, long> by_len;
            for (const Word& w : b) ++by_len[w.size()];
            for (int n = 1; n <= radius; ++n) {
                long expected = 2L * k;
                for (int i = 1; i < n; ++i) expected *= 2L * k - 1;
                ++*checks;
                if (by_len[static_cast<std::size_t>(n)] != expected) return false;
            }
        }
    }
    return true;
}

using ConjSubFn = std::function<StallingsGraph(const StallingsGraph&, const Word&)>;

bool conj_action_law_ok(const ConjSubFn& fn, std::size_t* checks) {
    StallingsGraph g = fold(2, {Word(2, {1})});
    Word h(2, {1});
    Word h2(2, {2});
    ++*checks;
    return fn(fn(g, h), h2) == fn(g, multiply(h2, h));
}

using HMulFn = std::function<HElement(const HElement&, const HElement&)>;

bool conj_identity_ok(const HMulFn& mul, std::size_t* checks) {
    // ((0,0), e_i)((0, b_g), id)((0,0), e_i)^-1 = ((0, b_{e_i g}), id)
    for (int i = 1; i <= 2; ++i) {
        HElement ei{bf_identity(2), Word(2, {make_letter(i, +1)})};
        for (const Word& g : ball(2, 2)) {
            HElement x{{AVector(2), BVector::basis(g)}, Word::identity(2)};
            HElement expected{{AVector(2), BVector::basis(multiply(ei.g, g))}, Word::identity(2)};
            ++*checks;
            if (!(mul(mul(ei, x), h_inv(ei)) == expected)) return false;
        }
    }
    return true;
}

using AsModFn = std::function<HElement(const HElement&, const SIndex&)>;

bool as_mod_examples_ok(const AsModFn& fn, std::size_t* checks) {
    SIndex s = SIndex::cone_intersection(fold(2, {Word(2, {1})}));
    for (const Word& h : cone_intersection_ball(*s.graph(), 2)) {
        ++*checks;
        if (!h_is_identity(fn({{AVector::basis(h), BVector(2)}, Word::identity(2)}, s))) {
            return false;
        }
    }
    Word u(2, {2}); // x2 is not in <x1>
    Word u_pos = positive_form(u);
    HElement mixed{{AVector::basis(Word(2, {1})) + AVector::basis(u_pos), BVector(2)},
                   Word::identity(2)};
    HElement expected{{AVector::basis(u_pos), BVector(2)}, Word::identity(2)};
    ++*checks;
    return fn(mixed, s) == expected;
}

using BClassifyFn = std::function<ConeClass(const BVector&)>;

bool b_cone_example_ok(const BClassifyFn& classify, std::size_t* checks) {
    // b = -2 b_id + 5 b_g with id < g: the least index id carries -2, so Neg
    Word g(2, {1});
    BVector b = BVector::basis(Word::identity(2), -2) + BVector::basis(g, 5);
    ++*checks;
    if (classify(b) != ConeClass::Neg) return false;
    ++*checks;
    if (classify(BVector(2)) != ConeClass::Sub) return false;
    ++*checks;
    return classify(BVector::basis(g)) == ConeClass::Pos;
}

using PreimageFn = std::function<PreimageResult(const Word&, int)>;

bool preimage_examples_ok(const PreimageFn& fn, std::size_t* checks) {
    ++*checks;
    if (fn(Word(3, {1}), 2).kind != PreimageResult::Kind::Empty) return false;
    ++*checks;
    if (fn(Word::identity(3), 2).kind != PreimageResult::Kind::Full) return false;
    Word w = separating_window_word(Word(2, {1}), 2); // [x1, x2 x1 x2^-1]
    PreimageResult pre = fn(w, 2);
    ++*checks;
    return pre.kind == PreimageResult::Kind::Cylinder && pre.words.size() == 1 &&
           pre.words.front() == positive_form(Word(2, {1}));
}

void mutation_suite(SuiteResult& r) {
    struct Mutation {
        const char* name;
        std::function<bool()> real_passes;
        std::function<bool()> mutant_fails;
    };

    const CocycleFn real_f = [](const BVector& x, const BVector& y) { return cocycle_f(x, y); };

    // 1: flip the cone classification of x1
    auto flipped_cone = [] {
        ConeOracle<Word> o = magnus_word_cone();
        return ConeOracle<Word>{[o](const Word& w) {
                                    ConeClass c = o.classify(w);
                                    if (w == Word(2, {1})) {
                                        return c == ConeClass::Pos ? ConeClass::Neg : ConeClass::Pos;
                                    }
                                    return c;
                                },
                                "flipped"};
    };

    // 2: double the cocycle at the basis pair (b_id, b_{x1}); still bilinear,
    // so only the commutator identity can see it
    const CocycleFn doubled_f = [](const BVector& x, const BVector& y) {
        AVector out = cocycle_f(x, y);
        auto xi = x.coeffs().find(Word::identity(2));
        auto yi = y.coeffs().find(Word(2, {1}));
        if (xi != x.coeffs().end() && yi != y.coeffs().end()) {
            out = out + AVector::basis(Word(2, {1}), xi->second * yi->second);
        }
        return out;
    };

    // 3: reversed order comparison inside the cocycle
    const CocycleFn reversed_f = [](const BVector& x, const BVector& y) {
        SparseVec acc;
        for (const auto& [g, s] : x.coeffs()) {
            for (const auto& [h, t] : y.coeffs()) {
                if (magnus_compare(h, g) != Ordering::Less) continue; // wrong side
                Word key = multiply(invert(h), g);
                auto [it, inserted] = acc.try_emplace(key, s * t);
                if (!inserted && (it->second += s * t) == 0) acc.erase(it);
            }
        }
        return AVector(2, std::move(acc));
    };

    // 4: non-bilinear corruption keyed to the b_id coefficient of the first arg
    const CocycleFn corrupted_f = [](const BVector& x, const BVector& y) {
        AVector out = cocycle_f(x, y);
        auto it = x.coeffs().find(Word::identity(2));
        if (it != x.coeffs().end() && !y.is_zero()) {
            out = out + AVector::basis(Word(2, {1}));
        }
        return out;
    };

    // 5: semidirect product twisting the wrong factor
    const HMulFn wrong_side_mul = [](const HElement& x, const HElement& y) {
        return HElement{bf_mul(g_action(y.g, x.ab), y.ab), multiply(x.g, y.g)};
    };

    // 6: single-sweep "reduction" that misses newly adjacent pairs
    const ReduceFn sweep_reduce = [](const std::vector<Letter>& in) {
        std::vector<Letter> out;
        std::size_t i = 0;
        while (i < in.size()) {
            if (i + 1 < in.size() && in[i] == static_cast<Letter>(-in[i + 1])) {
                i += 2;
            } else {
                out.push_back(in[i]);
                ++i;
            }
        }
        return out;
    };

    // 7: as_mod with the membership filter inverted
    const AsModFn inverted_as_mod = [](const HElement& x, const SIndex& s) {
        SparseVec kept;
        for (const auto& [key, coef] : x.ab.a.coeffs()) {
            if (s.contains_key(key)) kept.emplace(key, coef);
        }
        return HElement{{AVector(x.rank(), std::move(kept)), x.ab.b}, x.g};
    };

    // 8: b-cone reading the greatest index instead of the least
    const BClassifyFn max_rule = [](const BVector& b) {
        if (b.is_zero()) return ConeClass::Sub;
        auto greatest = b.coeffs().begin();
        for (auto it = std::next(b.coeffs().begin()); it != b.coeffs().end(); ++it) {
            if (magnus_compare(greatest->first, it->first) == Ordering::Less) greatest = it;
        }
        return greatest->second > 0 ? ConeClass::Pos : ConeClass::Neg;
    };

    // 9: ball enumeration without the free-reduction guard
    const BallFn unreduced_ball = [](int rank, int radius) {
        std::vector<std::vector<Letter>> seqs{{}};
        std::vector<Word> out{Word::identity(rank)};
        for (int len = 1; len <= radius; ++len) {
            std::vector<std::vector<Letter>> next;
            for (const auto& s : seqs) {
                for (int key = 0; key < 2 * rank; ++key) {
                    auto t = s;
                    t.push_back(letter_from_key(key));
                    out.emplace_back(rank, t); // may silently reduce: lengths collide
                    next.push_back(std::move(t));
                }
            }
            seqs = std::move(next);
        }
        return out;
    };

    // 10: conjugation of subgroups without inverting the conjugator
    const ConjSubFn no_invert_conj = [](const StallingsGraph& g, const Word& h) {
        std::vector<Word> gens;
        for (const Word& w : loop_generators(g)) {
            gens.push_back(multiply(multiply(h, w), h));
        }
        return fold(g.rank(), gens);
    };

    std::vector<Mutation> mutations;
    mutations.push_back(
        {"cone-flip",
         [&] {
             return check_relative_cone(magnus_word_cone(), word_group_ops(2), ball(2, 3)).ok;
         },
         [&] {
             return !check_relative_cone(flipped_cone(), word_group_ops(2), ball(2, 3)).ok;
         }});
    mutations.push_back({"cocycle-term-doubled",
                         [&] {
                             SuiteResult t;
                             commutator_suite(t, real_f, 2);
                             return t.ok;
                         },
                         [&] {
                             SuiteResult t;
                             commutator_suite(t, doubled_f, 2);
                             return !t.ok;
                         }});
    mutations.push_back({"cocycle-order-reversed",
                         [&] {
                             SuiteResult t;
                             cocycle_basis_rule_suite(t, real_f, 2);
                             return t.ok;
                         },
                         [&] {
                             SuiteResult t;
                             cocycle_basis_rule_suite(t, reversed_f, 2);
                             return !t.ok;
                         }});
    mutations.push_back({"cocycle-nonbilinear",
                         [&] {
                             SuiteResult t;
                             cocycle_identity_suite(t, real_f, 1);
                             return t.ok;
                         },
                         [&] {
                             SuiteResult t;
                             cocycle_identity_suite(t, corrupted_f, 1);
                             return !t.ok;
                         }});
    mutations.push_back({"semidirect-wrong-side",
                         [&] {
                             std::size_t n = 0;
                             return conj_identity_ok(
                                 [](const HElement& x, const HElement& y) { return h_mul(x, y); },
                                 &n);
                         },
                         [&] {
                             std::size_t n = 0;
                             return !conj_identity_ok(wrong_side_mul, &n);
                         }});
    mutations.push_back({"reduce-single-sweep",
                         [&] {
                             std::size_t n = 0;
                             return reduce_suite_ok(
                                 [](const std::vector<Letter>& in) { return free_reduce(in); },
                                 &n);
                         },
                         [&] {
                             std::size_t n = 0;
                             return !reduce_suite_ok(sweep_reduce, &n);
                         }});
    mutations.push_back({"as-mod-inverted",
                         [&] {
                             std::size_t n = 0;
                             return as_mod_examples_ok(
                                 [](const HElement& x, const SIndex& s) { return as_mod(x, s); },
                                 &n);
                         },
                         [&] {
                             std::size_t n = 0;
                             return !as_mod_examples_ok(inverted_as_mod, &n);
                         }});
    mutations.push_back({"b-cone-max-rule",
                         [&] {
                             std::size_t n = 0;
                             return b_cone_example_ok(semidirect_b_cone().classify, &n);
                         },
                         [&] {
                             std::size_t n = 0;
                             return !b_cone_example_ok(max_rule, &n);
                         }});
    mutations.push_back({"ball-unreduced",
                         [&] {
                             std::size_t n = 0;
                             return sphere_counts_ok(
                                 [](int k, int radius) { return ball(k, radius); }, &n);
                         },
                         [&] {
                             std::size_t n = 0;
                             return !sphere_counts_ok(unreduced_ball, &n);
                         }});
    mutations.push_back({"conjugate-no-invert",
                         [&] {
                             std::size_t n = 0;
                             return conj_action_law_ok(
                                 [](const StallingsGraph& g, const Word& h) {
                                     return conjugate_subgroup(g, h);
                                 },
                                 &n);
                         },
                         [&] {
                             std::size_t n = 0;
                             return !conj_action_law_ok(no_invert_conj, &n);
                         }});

    for (const auto& m : mutations) {
        ++r.checks;
        if (!m.real_passes()) {
            r.fail(std::string(m.name) + ": the unmutated suite does not pass");
            continue;
        }
        ++r.checks;
        if (!m.mutant_fails()) {
            r.fail(std::string(m.name) + ": the mutation went undetected");
        }
    }
}

SuiteResult run_one(int id, const char* name, const std::function<void(SuiteResult&)>& body) {
    SuiteResult r;
    r.id = id;
    r.name = name;
    Timer timer;
    body(r);
    r.seconds = timer.seconds();
    return r;
}

} // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
    SampleRng rng(options.seed);
    const CocycleFn real_f = [](const BVector& x, const BVector& y) { return cocycle_f(x, y); };
    std::vector<SuiteResult> results;
    results.push_back(run_one(1, "cocycle-identity",
                              [&](SuiteResult& r) { cocycle_identity_suite(r, real_f, 2); }));
    results.push_back(
        run_one(2, "magnus-order", [&](SuiteResult& r) { magnus_order_suite(r, rng); }));
    results.push_back(
        run_one(3, "h-group-axioms", [&](SuiteResult& r) { h_axioms_suite(r, rng); }));
    results.push_back(run_one(4, "commutator-identity", [&](SuiteResult& r) {
        commutator_suite(r, real_f, 3);
        cocycle_basis_rule_suite(r, real_f, 3);
    }));
    results.push_back(run_one(5, "lift-suite", [&](SuiteResult& r) { lift_suite(r, rng); }));
    results.push_back(
        run_one(6, "reduction-oracle", [&](SuiteResult& r) { reduction_oracle_suite(r, rng); }));
    results.push_back(
        run_one(7, "preimage-cases", [&](SuiteResult& r) { preimage_suite(r, rng); }));
    results.push_back(run_one(
        8, "witnesses", [&](SuiteResult& r) { witness_suite(r, rng, options.seed); }));
    results.push_back(
        run_one(9, "quotient-bi-order", [&](SuiteResult& r) { quotient_order_suite(r, rng); }));
    results.push_back(run_one(10, "demos", [&](SuiteResult& r) { demo_suite(r); }));
    results.push_back(
        run_one(11, "mutation-sensitivity", [&](SuiteResult& r) { mutation_suite(r); }));
    return results;
}

} // namespace grouporder
