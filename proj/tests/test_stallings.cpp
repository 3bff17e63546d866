#include <doctest.h>

#include <set>

#include "grouporder/jsonio.hpp"
#include "grouporder/sampling.hpp"
#include "grouporder/stallings.hpp"

using namespace grouporder;

namespace {

// Membership surrogate: all reduced products of at most `depth` factors
// drawn from the generators and their inverses.
std::set<std::string> short_products(const std::vector<Word>& gens, int depth) {
    std::set<std::string> seen{format_word(Word::identity(gens.front().rank()))};
    std::vector<Word> frontier{Word::identity(gens.front().rank())};
    for (int d = 0; d < depth; ++d) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (const Word& g : gens) {
                for (const Word& f : {multiply(w, g), multiply(w, invert(g))}) {
                    if (seen.insert(format_word(f)).second) next.push_back(f);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

} // namespace

TEST_CASE("fold: spec examples") {
    StallingsGraph loop = fold(2, {Word(2, {1})});
    CHECK(loop.vertex_count() == 1);
    REQUIRE(loop.edges().size() == 1);
    CHECK(loop.edges().front() == StallingsGraph::Edge{0, 1, 0});

    CHECK(fold(2, {Word(2, {1, 1}), Word(2, {1, 1, 1})}) == fold(2, {Word(2, {1})}));

    StallingsGraph trivial = fold(2, {});
    CHECK(trivial.vertex_count() == 1);
    CHECK(trivial.edges().empty());
    CHECK(contains(trivial, Word::identity(2)));
    CHECK_FALSE(contains(trivial, Word(2, {1})));
}

TEST_CASE("contains: spec examples") {
    StallingsGraph g1 = fold(2, {Word(2, {1})});
    CHECK(contains(g1, Word(2, {1, 1, 1})));
    CHECK_FALSE(contains(g1, Word(2, {2})));
    StallingsGraph g12 = fold(2, {Word(2, {1, 2})});
    CHECK(contains(g12, Word(2, {1, 2, 1, 2})));
    CHECK_FALSE(contains(g12, Word(2, {1})));
    CHECK_THROWS_AS(contains(g1, Word(3, {1})), DomainError);
}

TEST_CASE("equal: spec examples") {
    CHECK(equal(fold(2, {Word(2, {1, 1}), Word(2, {1, 1, 1})}), fold(2, {Word(2, {1})})));
    CHECK_FALSE(equal(fold(2, {Word(2, {1})}), fold(2, {Word(2, {2})})));
    StallingsGraph g = fold(2, {Word(2, {1, 2})});
    CHECK(equal(g, g));
}

TEST_CASE("conjugate_subgroup: spec examples") {
    StallingsGraph g = fold(2, {Word(2, {1})});
    CHECK(conjugate_subgroup(g, Word::identity(2)) == g);

    StallingsGraph conj = conjugate_subgroup(g, Word(2, {2}));
    CHECK(contains(conj, Word(2, {2, 1, -2})));
    CHECK_FALSE(contains(conj, Word(2, {1})));

    CHECK(conjugate_subgroup(conj, Word(2, {-2})) == g);
}

TEST_CASE("conjugation is a group action (seeded)") {
    SampleRng rng(17);
    for (int i = 0; i < 200; ++i) {
        StallingsGraph g = random_subgroup(rng, 2, 2, 3);
        Word h = random_reduced_word(rng, 2, 3);
        Word h2 = random_reduced_word(rng, 2, 3);
        if (!(conjugate_subgroup(conjugate_subgroup(g, h), h2) ==
              conjugate_subgroup(g, multiply(h2, h)))) {
            FAIL("action law fails");
        }
    }
}

TEST_CASE("conjugacy_witness: spec examples") {
    StallingsGraph g1 = fold(2, {Word(2, {1})});
    auto self = conjugacy_witness(g1, g1, 0);
    REQUIRE(self.has_value());
    CHECK(self->empty());

    auto w = conjugacy_witness(g1, fold(2, {Word(2, {2, 1, -2})}), 2);
    REQUIRE(w.has_value());
    CHECK(*w == Word(2, {2}));

    CHECK_FALSE(conjugacy_witness(g1, fold(2, {Word(2, {2})}), 3).has_value());
}

TEST_CASE("cone_intersection_ball: spec examples") {
    CHECK(cone_intersection_ball(fold(2, {}), 3).empty());

    auto in_x1 = cone_intersection_ball(fold(2, {Word(2, {1})}), 2);
    REQUIRE(in_x1.size() == 2);
    CHECK(in_x1[0] == Word(2, {1}));
    CHECK(in_x1[1] == Word(2, {1, 1}));

    // |x1 x2| = 2 exceeds radius 1
    CHECK(cone_intersection_ball(fold(2, {Word(2, {1, 2})}), 1).empty());
}

TEST_CASE("membership closes over short products of the generators (seeded)") {
    SampleRng rng(23);
    for (int i = 0; i < 50; ++i) {
        std::vector<Word> gens;
        int n = 1 + static_cast<int>(rng.bounded(3));
        for (int j = 0; j < n; ++j) gens.push_back(random_nonempty_word(rng, 2, 4));
        StallingsGraph g = fold(2, gens);
        CHECK(g.is_well_formed());
        for (const Word& gen : gens) {
            CHECK(contains(g, gen));
        }
        for (const std::string& text : short_products(gens, 3)) {
            if (!contains(g, parse_word(text, 2))) {
                FAIL("subgroup membership misses the product " << text);
            }
        }
    }
}

TEST_CASE("membership in cyclic subgroups is exactly the powers") {
    // <x1 x2>: the ball members are exactly the powers of x1 x2
    StallingsGraph g = fold(2, {Word(2, {1, 2})});
    std::set<std::string> powers;
    for (int e = -4; e <= 4; ++e) powers.insert(format_word(power(Word(2, {1, 2}), e)));
    for (const Word& w : ball(2, 4)) {
        CHECK(contains(g, w) == (powers.count(format_word(w)) != 0));
    }
}

TEST_CASE("refolding the loop generators reproduces the subgroup") {
    SampleRng rng(29);
    for (int i = 0; i < 50; ++i) {
        StallingsGraph g = random_subgroup(rng, 2);
        CHECK(fold(2, loop_generators(g)) == g);
    }
}

TEST_CASE("graph serialization is canonical") {
    CHECK(to_json(fold(2, {Word(2, {1})})).dump() ==
          R"({"rank":2,"base":0,"edges":[[0,"x1",0]]})");
    StallingsGraph g = fold(2, {Word(2, {2, 1, -2})});
    CHECK(to_json(g).dump() == R"({"rank":2,"base":0,"edges":[[0,"x2",1],[1,"x1",1]]})");
}
