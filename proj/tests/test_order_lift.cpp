#include <doctest.h>

#include "grouporder/jsonio.hpp"
#include "grouporder/order_lift.hpp"
#include "grouporder/sampling.hpp"

using namespace grouporder;

TEST_CASE("conj_aut: spec examples") {
    OrderAutomorphism id = conj_aut(Word::identity(2));
    CHECK(id.images() == std::vector<Word>{Word(2, {1}), Word(2, {2})});

    OrderAutomorphism by_x2 = conj_aut(Word(2, {2}));
    CHECK(by_x2.images() == std::vector<Word>{Word(2, {2, 1, -2}), Word(2, {2})});
    CHECK(by_x2.is_inner());
    CHECK(by_x2.order_preserving_sampled());

    // the sampled sweep also passes when run explicitly
    for (const Word& w : ball(2, 3)) {
        CHECK(magnus_sign(apply(by_x2, w)) == magnus_sign(w));
    }
}

TEST_CASE("automorphism construction validates the inverse data") {
    std::vector<Word> images{Word(2, {1, 2}), Word(2, {2})};        // x1 -> x1 x2
    std::vector<Word> inverse{Word(2, {1, -2}), Word(2, {2})};      // x1 -> x1 x2^-1
    CHECK_NOTHROW(OrderAutomorphism(2, images, inverse));
    CHECK_THROWS_AS(OrderAutomorphism(2, images, images), DomainError);
    CHECK_THROWS_AS(OrderAutomorphism(2, {Word(2, {1})}, {Word(2, {1})}), DomainError);
}

TEST_CASE("apply: spec examples and the homomorphism law") {
    OrderAutomorphism id = OrderAutomorphism::identity(2);
    Word w(2, {1, -2, 1});
    CHECK(apply(id, w) == w);

    Word h(2, {2, 1});
    OrderAutomorphism phi = conj_aut(h);
    SampleRng rng(97);
    for (int i = 0; i < 300; ++i) {
        Word u = random_reduced_word(rng, 2, 4);
        Word v = random_reduced_word(rng, 2, 4);
        CHECK(apply(phi, u) == conjugate(h, u));
        CHECK(apply(phi, multiply(u, v)) == multiply(apply(phi, u), apply(phi, v)));
    }
}

TEST_CASE("lift: identity, printed formula, homomorphism law") {
    auto lift_id = lift(OrderAutomorphism::identity(2));
    SampleRng rng(101);
    for (int i = 0; i < 100; ++i) {
        HElement x = random_h_element(rng, 2);
        CHECK(lift_id(x) == x);
    }

    Word h(2, {2});
    auto lifted = lift(conj_aut(h));
    for (const Word& w : positive_ball(2, 3)) {
        HElement x{{AVector::basis(w), BVector(2)}, Word::identity(2)};
        CHECK(lifted(x) == HElement{{AVector::basis(conjugate(h, w)), BVector(2)},
                                    Word::identity(2)});
    }
    for (int i = 0; i < 300; ++i) {
        HElement x = random_h_element(rng, 2);
        HElement y = random_h_element(rng, 2);
        CHECK(lifted(h_mul(x, y)) == h_mul(lifted(x), lifted(y)));
    }
}

TEST_CASE("lift rejects order-breaking substitutions") {
    // x1 -> x1^-1 is an automorphism but flips the sign of x1
    OrderAutomorphism bad(2, {Word(2, {-1}), Word(2, {2})}, {Word(2, {-1}), Word(2, {2})});
    CHECK_FALSE(bad.order_preserving_sampled());
    CHECK(std::string(bad.certificate()) == "sampled only");
    CHECK_THROWS_AS(lift(bad), DomainError);
}

TEST_CASE("check_aut1: spec examples") {
    CHECK(check_aut1(OrderAutomorphism::identity(2)).ok);
    CHECK(check_aut1(conj_aut(Word(2, {1}))).ok);

    OrderAutomorphism bad(2, {Word(2, {-1}), Word(2, {2})}, {Word(2, {-1}), Word(2, {2})});
    Aut1Report report = check_aut1(bad);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.witnesses.empty());
}

TEST_CASE("lift composes and is injective on distinct conjugators") {
    SampleRng rng(103);
    for (const Word& h1 : ball(2, 2)) {
        for (const Word& h2 : ball(2, 2)) {
            auto composed = lift(compose(conj_aut(h1), conj_aut(h2)));
            auto chained_h1 = lift(conj_aut(h1));
            auto chained_h2 = lift(conj_aut(h2));
            for (int i = 0; i < 3; ++i) {
                HElement x = random_h_element(rng, 2);
                if (!(composed(x) == chained_h1(chained_h2(x)))) {
                    FAIL("lift does not respect composition");
                }
            }
        }
    }

    // distinct automorphisms produce lifts that differ on a generator of H
    auto l1 = lift(conj_aut(Word(2, {1})));
    auto l2 = lift(conj_aut(Word(2, {2})));
    bool differs = false;
    for (const HElement& gen : h_generators(2)) {
        if (!(l1(gen) == l2(gen))) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("map_AS: spec examples") {
    SIndex s = SIndex::cone_intersection(fold(2, {Word(2, {1})}));

    auto [s_same, report_same] = map_AS(Word::identity(2), s);
    CHECK(report_same.ok);
    REQUIRE(s_same.graph() != nullptr);
    CHECK(*s_same.graph() == *s.graph());

    Word h(2, {2});
    auto [s_prime, report] = map_AS(h, s);
    CHECK(report.ok);
    CHECK(report.checks > 0);
    REQUIRE(s_prime.graph() != nullptr);
    CHECK(*s_prime.graph() == fold(2, {Word(2, {2, 1, -2})}));

    CHECK_THROWS_AS(map_AS(h, SIndex::explicit_finite(2, {Word(2, {1})})), DomainError);
}

TEST_CASE("automorphism serialization") {
    CHECK(to_json(conj_aut(Word(2, {2}))).dump() ==
          R"({"rank":2,"images":["x2 x1 x2^-1","x2"]})");
}
