#include <doctest.h>

#include "grouporder/hgp.hpp"
#include "grouporder/jsonio.hpp"
#include "grouporder/sampling.hpp"

using namespace grouporder;

namespace {

// Brute-force bilinear expansion written directly against the basis rule.
AVector cocycle_oracle(const BVector& x, const BVector& y) {
    AVector acc(x.rank());
    for (const auto& [g, s] : x.coeffs()) {
        for (const auto& [h, t] : y.coeffs()) {
            if (magnus_compare(g, h) == Ordering::Less) {
                acc = acc + AVector::basis(multiply(invert(g), h), s * t);
            }
        }
    }
    return acc;
}

HElement a_only(const Word& w, std::int64_t coef = 1) {
    return {{AVector::basis(w, coef), BVector(w.rank())}, Word::identity(w.rank())};
}

} // namespace

TEST_CASE("cocycle_f: spec examples") {
    Word h(2, {1});
    REQUIRE(magnus_sign(h) == Sign::Positive);
    CHECK(cocycle_f(BVector::basis(Word::identity(2)), BVector::basis(h)) == AVector::basis(h));

    CHECK(cocycle_f(BVector::basis(h), BVector::basis(h)).is_zero());

    // (2 b_id + b_u, b_v) with id < v and u < v
    Word u(2, {1});
    Word v(2, {1, 1});
    REQUIRE(magnus_compare(Word::identity(2), v) == Ordering::Less);
    REQUIRE(magnus_compare(u, v) == Ordering::Less);
    BVector lhs = BVector::basis(Word::identity(2), 2) + BVector::basis(u);
    AVector expected = AVector::basis(v, 2) + AVector::basis(multiply(invert(u), v));
    CHECK(cocycle_f(lhs, BVector::basis(v)) == expected);
}

TEST_CASE("cocycle_f is the bilinear extension of the basis rule (seeded)") {
    SampleRng rng(47);
    for (int i = 0; i < 300; ++i) {
        BVector x = random_b_vector(rng, 2, 3, 3);
        BVector y = random_b_vector(rng, 2, 3, 3);
        CHECK(cocycle_f(x, y) == cocycle_oracle(x, y));
    }
}

TEST_CASE("cocycle_f is invariant under the diagonal G-action (seeded)") {
    SampleRng rng(53);
    for (int i = 0; i < 300; ++i) {
        Word g = random_reduced_word(rng, 2, 3);
        BVector x = random_b_vector(rng, 2, 3, 3);
        BVector y = random_b_vector(rng, 2, 3, 3);
        CHECK(cocycle_f(g_action(g, x), g_action(g, y)) == cocycle_f(x, y));
    }
}

TEST_CASE("bf_mul: spec examples") {
    BfElement id = bf_identity(2);
    CHECK(bf_mul(id, id) == id);

    // [(0, b_id), (0, b_h)] = (a_h, 0) for positive h
    Word h(2, {1, 2});
    REQUIRE(magnus_sign(h) == Sign::Positive);
    BfElement x{AVector(2), BVector::basis(Word::identity(2))};
    BfElement y{AVector(2), BVector::basis(h)};
    BfElement comm = bf_mul(bf_mul(bf_mul(x, y), bf_inv(x)), bf_inv(y));
    CHECK(comm == BfElement{AVector::basis(h), BVector(2)});

    // general pairs against an independently written product
    SampleRng rng(59);
    for (int i = 0; i < 200; ++i) {
        BfElement p{random_a_vector(rng, 2, 3, 3), random_b_vector(rng, 2, 3, 3)};
        BfElement q{random_a_vector(rng, 2, 3, 3), random_b_vector(rng, 2, 3, 3)};
        BfElement prod = bf_mul(p, q);
        CHECK(prod.a == p.a + q.a + cocycle_oracle(p.b, q.b));
        CHECK(prod.b == p.b + q.b);
    }
}

TEST_CASE("bf_inv: spec examples") {
    Word g(2, {2, 1});
    CHECK(bf_inv(BfElement{AVector(2), BVector::basis(g)}) ==
          BfElement{AVector(2), -BVector::basis(g)});

    // (0, b_id + b_h)^-1 = (a_h, -b_id - b_h) for positive h
    Word h(2, {1});
    BfElement x{AVector(2), BVector::basis(Word::identity(2)) + BVector::basis(h)};
    CHECK(bf_inv(x) == BfElement{AVector::basis(h), -x.b});

    CHECK(bf_inv(bf_identity(2)) == bf_identity(2));

    SampleRng rng(61);
    for (int i = 0; i < 200; ++i) {
        BfElement p{random_a_vector(rng, 2, 3, 3), random_b_vector(rng, 2, 3, 3)};
        CHECK(bf_mul(p, bf_inv(p)) == bf_identity(2));
        CHECK(bf_mul(bf_inv(p), p) == bf_identity(2));
    }
}

TEST_CASE("g_action: spec examples and the action law") {
    BfElement x{AVector::basis(Word(2, {1})), BVector::basis(Word(2, {2}))};
    CHECK(g_action(Word::identity(2), x) == x);

    Word g(2, {1});
    Word h(2, {2});
    CHECK(g_action(g, BfElement{AVector(2), BVector::basis(h)}) ==
          BfElement{AVector(2), BVector::basis(multiply(g, h))});

    SampleRng rng(67);
    for (int i = 0; i < 200; ++i) {
        Word a = random_reduced_word(rng, 2, 3);
        Word b = random_reduced_word(rng, 2, 3);
        BfElement v{random_a_vector(rng, 2, 3, 3), random_b_vector(rng, 2, 3, 3)};
        CHECK(g_action(a, g_action(b, v)) == g_action(multiply(a, b), v));
    }
}

TEST_CASE("h_mul: the printed conjugation identity, exactly") {
    for (int i = 1; i <= 2; ++i) {
        HElement ei{bf_identity(2), Word(2, {make_letter(i, +1)})};
        for (const Word& g : ball(2, 2)) {
            HElement x{{AVector(2), BVector::basis(g)}, Word::identity(2)};
            HElement conj = h_mul(h_mul(ei, x), h_inv(ei));
            CHECK(conj == HElement{{AVector(2), BVector::basis(multiply(ei.g, g))},
                                   Word::identity(2)});
        }
    }
}

TEST_CASE("h group laws (seeded)") {
    SampleRng rng(71);
    for (int i = 0; i < 200; ++i) {
        HElement x = random_h_element(rng, 2);
        HElement y = random_h_element(rng, 2);
        HElement z = random_h_element(rng, 2);
        CHECK(h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z)));
        CHECK(h_is_identity(h_mul(x, h_inv(x))));
        CHECK(h_is_identity(h_mul(h_inv(x), x)));
        CHECK(h_mul(x, h_identity(2)) == x);
    }
}

TEST_CASE("generators: spec examples") {
    auto gens = h_generators(2);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == HElement{{AVector(2), BVector::basis(Word::identity(2))}, Word::identity(2)});
    CHECK(gens[1] == HElement{bf_identity(2), Word(2, {1})});
    CHECK(gens[2] == HElement{bf_identity(2), Word(2, {2})});
}

TEST_CASE("theta: spec examples") {
    CHECK(theta(Word(3, {1}), 2) ==
          HElement{{AVector(2), BVector::basis(Word::identity(2))}, Word::identity(2)});

    CHECK(theta(Word(3, {2, 1, -2}), 2) ==
          HElement{{AVector(2), BVector::basis(Word(2, {1}))}, Word::identity(2)});

    // [x1, x2 x1 x2^-1] evaluates to (a_{e1}, 0, id); e1 = x1 is positive
    Word w(3, {1, 2, 1, -2, -1, 2, -1, -2});
    REQUIRE(magnus_sign(Word(2, {1})) == Sign::Positive);
    CHECK(theta(w, 2) == a_only(Word(2, {1})));

    // letters beyond the window act as the identity
    CHECK(h_is_identity(theta(Word(5, {4, 5, 4, -5, -4}), 2)));
    CHECK(theta(Word(5, {4, 1, -4}), 2) == theta(Word(3, {1}), 2));

    // generators reach (a_h, 0, id) for h in the positive ball
    for (const Word& h : positive_ball(2, 2)) {
        std::vector<Letter> shifted;
        for (Letter l : h.letters()) shifted.push_back(make_letter(letter_index(l) + 1, letter_sign(l)));
        Word ghat(3, shifted);
        Word x1(3, {1});
        Word witness = multiply(multiply(x1, conjugate(ghat, x1)),
                                multiply(invert(x1), invert(conjugate(ghat, x1))));
        CHECK(theta(witness, 2) == a_only(h));
    }
}

TEST_CASE("as_mod: spec examples") {
    SIndex s = SIndex::cone_intersection(fold(2, {Word(2, {1})}));

    HElement no_a{{AVector(2), BVector::basis(Word(2, {2}))}, Word(2, {1})};
    CHECK(as_mod(no_a, s) == no_a);

    Word h(2, {1});
    CHECK(h_is_identity(as_mod(a_only(h), s)));

    Word u(2, {2});
    Word u_pos = positive_form(u);
    HElement mixed{{AVector::basis(h) + AVector::basis(u_pos), BVector(2)}, Word::identity(2)};
    CHECK(as_mod(mixed, s) == a_only(u_pos));

    // idempotent
    SampleRng rng(73);
    for (int i = 0; i < 100; ++i) {
        HElement x = random_h_element(rng, 2);
        CHECK(as_mod(as_mod(x, s), s) == as_mod(x, s));
    }
}

TEST_CASE("as_mod is compatible with multiplication (seeded, both S shapes)") {
    SampleRng rng(79);
    SIndex s_graph = SIndex::cone_intersection(fold(2, {Word(2, {1, 2})}));
    SIndex s_explicit = SIndex::explicit_finite(2, {Word(2, {1}), Word(2, {1, 2})});
    for (const SIndex& s : {s_graph, s_explicit}) {
        for (int i = 0; i < 250; ++i) {
            HElement x = random_h_element(rng, 2);
            HElement y = random_h_element(rng, 2);
            CHECK(as_mod(h_mul(x, y), s) == as_mod(h_mul(as_mod(x, s), as_mod(y, s)), s));
        }
    }
}

TEST_CASE("hq_sign: spec examples") {
    SIndex s = SIndex::cone_intersection(fold(2, {Word(2, {1})}));
    CHECK(hq_sign(h_identity(2), s) == Sign::Zero);

    // h in S dies; u outside S keeps the free-abelian rule
    CHECK(hq_sign(a_only(Word(2, {1})), s) == Sign::Zero);
    Word u_pos = positive_form(Word(2, {2}));
    CHECK(hq_sign(a_only(u_pos), s) == Sign::Positive);
    CHECK(hq_sign(a_only(u_pos, -2), s) == Sign::Negative);

    SampleRng rng(83);
    for (int i = 0; i < 500; ++i) {
        HElement x = random_h_element(rng, 2);
        HElement y = random_h_element(rng, 2);
        CHECK(hq_sign(h_mul(h_mul(y, x), h_inv(y)), s) == hq_sign(x, s));
    }
}

TEST_CASE("SIndex validates and reports membership") {
    CHECK_THROWS_AS(SIndex::explicit_finite(2, {Word(2, {-1})}), DomainError);

    SIndex s = SIndex::cone_intersection(fold(2, {Word(2, {1})}));
    CHECK(s.contains_key(Word(2, {1})));
    CHECK(s.contains_key(Word(2, {1, 1})));
    CHECK_FALSE(s.contains_key(Word(2, {-1}))); // in the subgroup but negative
    CHECK_FALSE(s.contains_key(Word(2, {2})));

    SIndex e = SIndex::explicit_finite(2, {Word(2, {1})});
    CHECK(e.contains_key(Word(2, {1})));
    CHECK_FALSE(e.contains_key(Word(2, {1, 1})));
}

TEST_CASE("AVector keys must be positive") {
    CHECK_THROWS_AS(AVector::basis(Word(2, {-1})), DomainError);
    CHECK_THROWS_AS(AVector::basis(Word::identity(2)), DomainError);
}

TEST_CASE("HElement serialization is bit-exact") {
    HElement x{{AVector::basis(Word(2, {1, 2}), 2), BVector::basis(Word::identity(2), -1)},
               Word(2, {1})};
    CHECK(to_json(x).dump() ==
          R"({"a":[{"key":"x1 x2","coef":2}],"b":[{"key":"1","coef":-1}],"g":"x1"})");
    CHECK(format_h(x) == to_json(x).dump());

    HElement parsed = h_from_json(Json::parse(to_json(x).dump()), 2);
    CHECK(parsed == x);

    SampleRng rng(89);
    for (int i = 0; i < 100; ++i) {
        HElement e = random_h_element(rng, 2);
        CHECK(h_from_json(Json::parse(to_json(e).dump()), 2) == e);
        CHECK(format_h(e) == to_json(e).dump());
    }
}

TEST_CASE("keys in serialized vectors are sorted shortlex") {
    AVector a = AVector::basis(Word(2, {1, 1})) + AVector::basis(Word(2, {1})) +
                AVector::basis(Word(2, {2}));
    std::vector<std::string> keys;
    for (const auto& [key, coef] : a.coeffs()) keys.push_back(format_word(key));
    CHECK(keys == std::vector<std::string>{"x1", "x2", "x1 x1"});
}
