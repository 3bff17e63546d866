#include <doctest.h>

#include "grouporder/cones.hpp"
#include "grouporder/hgp.hpp"
#include "grouporder/jsonio.hpp"
#include "grouporder/magnus.hpp"
#include "grouporder/sampling.hpp"

using namespace grouporder;

namespace {

ConeClass sign_to_class(Sign s) {
    switch (s) {
    case Sign::Positive: return ConeClass::Pos;
    case Sign::Negative: return ConeClass::Neg;
    default: return ConeClass::Sub;
    }
}

ConeOracle<Word> magnus_cone() {
    return {[](const Word& w) { return sign_to_class(magnus_sign(w)); }, "Magnus cone"};
}

GroupOps<Word> word_ops(int rank) {
    return {[](const Word& u, const Word& v) { return multiply(u, v); },
            [](const Word& w) { return invert(w); }, Word::identity(rank),
            [](const Word& w) { return format_word(w); }};
}

// Positive iff the first letter is a plain generator. Not even a semigroup
// globally, and visibly not conjugation invariant.
ConeOracle<Word> first_letter_cone() {
    return {[](const Word& w) {
                if (w.empty()) return ConeClass::Sub;
                return w.letters().front() > 0 ? ConeClass::Pos : ConeClass::Neg;
            },
            "first-letter cone"};
}

} // namespace

TEST_CASE("check_relative_cone: the Magnus cone passes on ball(2,3)") {
    BallReport report = check_relative_cone(magnus_cone(), word_ops(2), ball(2, 3));
    CHECK(report.ok);
    CHECK(report.violations.empty());
    CHECK(report.conditions_checked.size() == 4);
}

TEST_CASE("check_relative_cone: a single flipped classification is caught") {
    ConeOracle<Word> flipped{[](const Word& w) {
                                 ConeClass c = sign_to_class(magnus_sign(w));
                                 if (w == Word(2, {1, 2})) {
                                     return c == ConeClass::Pos ? ConeClass::Neg : ConeClass::Pos;
                                 }
                                 return c;
                             },
                             "flipped Magnus cone"};
    BallReport report = check_relative_cone(flipped, word_ops(2), ball(2, 3));
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.violations.empty());
}

TEST_CASE("check_relative_cone: inverse-closure precondition") {
    std::vector<Word> missing{Word::identity(2), Word(2, {1})};
    CHECK_THROWS_AS(check_relative_cone(magnus_cone(), word_ops(2), missing), DomainError);
    std::vector<Word> no_identity{Word(2, {1}), Word(2, {-1})};
    CHECK_THROWS_AS(check_relative_cone(magnus_cone(), word_ops(2), no_identity), DomainError);
}

TEST_CASE("check_bicone: Magnus cone is conjugation invariant on samples") {
    BallReport report = check_bicone(magnus_cone(), word_ops(2), ball(2, 3), ball(2, 2));
    CHECK(report.ok);

    // empty conjugator list reduces to the relative check
    BallReport relative = check_bicone(magnus_cone(), word_ops(2), ball(2, 3), {});
    CHECK(relative.ok);
}

TEST_CASE("check_bicone: the first-letter cone fails conjugation invariance") {
    BallReport report = check_bicone(first_letter_cone(), word_ops(2), ball(2, 3), ball(2, 2));
    CHECK_FALSE(report.ok);
    bool has_conj_violation = false;
    for (const auto& v : report.violations) {
        if (v.condition == ConeCondition::ConjInv) has_conj_violation = true;
    }
    CHECK(has_conj_violation);
}

TEST_CASE("convex_subgroup: spec examples") {
    auto sub = convex_subgroup(magnus_cone(), ball(2, 3));
    REQUIRE(sub.size() == 1);
    CHECK(sub.front().empty());

    ConeOracle<Word> all_sub{[](const Word&) { return ConeClass::Sub; }, "everything"};
    CHECK(convex_subgroup(all_sub, ball(2, 2)).size() == ball(2, 2).size());
}

TEST_CASE("extend_relative_cone: relative cone of H over A extended by a cone on A") {
    // relative cone: classify through the quotient H -> B x| G; Sub is A
    ConeOracle<HElement> relative{[](const HElement& x) {
                                      if (!x.g.empty()) return sign_to_class(magnus_sign(x.g));
                                      if (!x.ab.b.is_zero()) {
                                          return sign_to_class(least_index_sign(x.ab.b.coeffs()));
                                      }
                                      return ConeClass::Sub;
                                  },
                                  "H relative to A"};
    ConeOracle<HElement> a_cone{[](const HElement& x) {
                                    return sign_to_class(least_index_sign(x.ab.a.coeffs()));
                                },
                                "free-abelian cone on A"};
    ConeOracle<HElement> total = extend_relative_cone(relative, a_cone);

    // pass-through on non-Sub, delegation on Sub, identity stays Sub
    SampleRng rng(31);
    SIndex empty_s = SIndex::explicit_finite(2, {});
    std::size_t delegated = 0;
    for (int i = 0; i < 300; ++i) {
        HElement x = random_h_element(rng, 2);
        ConeClass rel = relative.classify(x);
        if (rel != ConeClass::Sub) {
            CHECK(total.classify(x) == rel);
        } else {
            ++delegated;
            CHECK(total.classify(x) == a_cone.classify(x));
        }
        // the extension is exactly the S-empty quotient order
        CHECK(total.classify(x) == sign_to_class(hq_sign(x, empty_s)));
    }
    CHECK(delegated > 0);
    CHECK(total.classify(h_identity(2)) == ConeClass::Sub);

    // and it is a genuine total cone on sampled elements
    std::vector<HElement> elems{h_identity(2)};
    for (int i = 0; i < 30; ++i) {
        HElement x = random_h_element(rng, 2);
        elems.push_back(x);
        elems.push_back(h_inv(x));
    }
    BallReport report = check_relative_cone(total, h_group_ops(2), elems);
    CHECK(report.ok);
    CHECK(convex_subgroup(total, elems).size() == 1);
}

TEST_CASE("quotient_cone: well-defined on A_S cosets, IllDefined otherwise") {
    SIndex s = SIndex::cone_intersection(fold(2, {Word(2, {1})}));
    ConeOracle<HElement> cone = hq_cone(s);
    std::function<HElement(const HElement&)> project = [s](const HElement& x) {
        return as_mod(x, s);
    };

    SampleRng rng(37);
    std::vector<HElement> samples;
    for (int i = 0; i < 50; ++i) samples.push_back(random_h_element(rng, 2));

    ConeOracle<HElement> q = quotient_cone(cone, project, samples);
    CHECK(q.classify(h_identity(2)) == ConeClass::Sub);
    for (const HElement& x : samples) {
        CHECK(q.classify(x) == cone.classify(as_mod(x, s)));
    }

    // a projection that forgets the whole a-part disagrees with the cone on
    // some coset representative
    std::function<HElement(const HElement&)> broken = [](const HElement& x) {
        return HElement{{AVector(x.rank()), x.ab.b}, x.g};
    };
    std::vector<HElement> witness{
        {{AVector::basis(Word(2, {2, 2})), BVector(2)}, Word::identity(2)}};
    CHECK_THROWS_AS(quotient_cone(cone, broken, witness), DomainError);
}

TEST_CASE("lex_ses_cone: quotient class decides first") {
    // 1 -> A/A_S -> H/A_S -> B x| G -> 1, exactly the hq_sign stacking
    SIndex s = SIndex::cone_intersection(fold(2, {Word(2, {1})}));
    ConeOracle<HElement> kernel{[s](const HElement& x) {
                                    HElement n = as_mod(x, s);
                                    return sign_to_class(least_index_sign(n.ab.a.coeffs()));
                                },
                                "A/A_S cone"};
    ConeOracle<HElement> quotient{[](const HElement& x) {
                                      if (!x.g.empty()) return sign_to_class(magnus_sign(x.g));
                                      return sign_to_class(least_index_sign(x.ab.b.coeffs()));
                                  },
                                  "B x| G cone"};
    std::function<HElement(const HElement&)> strip_a = [](const HElement& x) {
        return HElement{{AVector(x.rank()), x.ab.b}, x.g};
    };
    ConeOracle<HElement> stacked = lex_ses_cone(kernel, quotient, strip_a);

    SampleRng rng(41);
    for (int i = 0; i < 400; ++i) {
        HElement x = random_h_element(rng, 2);
        CHECK(stacked.classify(x) == sign_to_class(hq_sign(x, s)));
    }

    // kernel element with positive kernel class
    HElement a_pos{{AVector::basis(Word(2, {2})), BVector(2)}, Word::identity(2)};
    CHECK(stacked.classify(a_pos) == ConeClass::Pos);
    // negative quotient class wins regardless of the kernel part
    HElement mixed{{AVector::basis(Word(2, {2})), BVector(2)}, Word(2, {-1})};
    CHECK(stacked.classify(mixed) == ConeClass::Neg);
}

TEST_CASE("semidirect_b_cone: spec examples and action invariance") {
    auto cone = semidirect_b_cone();
    CHECK(cone.classify(BVector::basis(Word(2, {1}))) == ConeClass::Pos);
    CHECK(cone.classify(BVector(2)) == ConeClass::Sub);

    // b = -2 b_id + 5 b_g with id < g
    Word g(2, {1});
    REQUIRE(magnus_sign(g) == Sign::Positive);
    BVector b = BVector::basis(Word::identity(2), -2) + BVector::basis(g, 5);
    CHECK(cone.classify(b) == ConeClass::Neg);

    SampleRng rng(43);
    for (int i = 0; i < 500; ++i) {
        Word h = random_reduced_word(rng, 2, 3);
        BVector v = random_b_vector(rng, 2, 3, 3);
        CHECK(cone.classify(g_action(h, v)) == cone.classify(v));
    }

    // and it is a bi-cone on B with conjugators from the action orbit:
    // conjugation in B x| G by (0, h) sends (b, id) to (h . b, id)
    std::vector<BVector> elems{BVector(2)};
    for (int i = 0; i < 25; ++i) {
        BVector v = random_b_vector(rng, 2, 3, 2);
        elems.push_back(v);
        elems.push_back(-v);
    }
    BallReport report = check_relative_cone(cone, b_group_ops(2), elems);
    CHECK(report.ok);
}

TEST_CASE("BallReport serialization") {
    BallReport ok_report;
    ok_report.conditions_checked = {ConeCondition::Semigroup};
    CHECK(to_json(ok_report).dump() == R"({"ok":true,"violations":[]})");

    BallReport bad;
    bad.add(ConeCondition::CPC, {"a", "b", "c"});
    CHECK(to_json(bad).dump() ==
          R"({"ok":false,"violations":[{"condition":"CPC","witness":["a","b","c"]}]})");
}
