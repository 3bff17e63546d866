#ifndef GROUPORDER_CONES_HPP
#define GROUPORDER_CONES_HPP

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouporder/errors.hpp"

namespace grouporder {

// Pos/Neg are the cone and its inverse; Sub is the complement subgroup C of a
// relative cone ({id} for total cones).
enum class ConeClass { Pos, Neg, Sub };

const char* to_string(ConeClass c);

// Group structure handed to the generic validators by the instantiating
// module. `format` must be injective on the elements in play (normal forms
// are), since the validators use it both for witnesses and for lookups.
template <class E>
struct GroupOps {
    std::function<E(const E&, const E&)> mul;
    std::function<E(const E&)> inv;
    E identity;
    std::function<std::string(const E&)> format;
};

template <class E>
struct ConeOracle {
    std::function<ConeClass(const E&)> classify;
    std::string description;
};

enum class ConeCondition { Semigroup, Partition, CPC, Disjoint, ConjInv };

const char* to_string(ConeCondition c);

struct ConeViolation {
    ConeCondition condition;
    std::vector<std::string> witness;
};

struct BallReport {
    bool ok = true;
    std::vector<ConeViolation> violations;
    std::vector<ConeCondition> conditions_checked;

    void add(ConeCondition condition, std::vector<std::string> witness) {
        ok = false;
        violations.push_back({condition, std::move(witness)});
    }
};

namespace detail {

template <class E>
class SampleIndex {
public:
    SampleIndex(const GroupOps<E>& ops, const std::vector<E>& elems) {
        for (std::size_t i = 0; i < elems.size(); ++i) {
            index_.emplace(ops.format(elems[i]), i);
        }
    }

    const E* find(const std::vector<E>& elems, const std::string& key) const {
        auto it = index_.find(key);
        return it == index_.end() ? nullptr : &elems[it->second];
    }

    bool contains(const std::string& key) const { return index_.count(key) != 0; }

private:
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace detail

// Finite-ball validation of the relative-cone axioms: only pairs/triples
// whose products land back inside `elems` are judged; nothing is claimed
// beyond the sample. `elems` must contain the identity and be closed under
// inverse (NotInverseClosed otherwise).
template <class E>
BallReport check_relative_cone(const ConeOracle<E>& oracle, const GroupOps<E>& ops,
                               const std::vector<E>& elems) {
    detail::SampleIndex<E> index(ops, elems);
    if (!index.contains(ops.format(ops.identity))) {
        throw DomainError("NotInverseClosed", "sample does not contain the identity");
    }
    for (const E& e : elems) {
        if (!index.contains(ops.format(ops.inv(e)))) {
            throw DomainError("NotInverseClosed",
                              "sample misses the inverse of " + ops.format(e));
        }
    }

    BallReport report;
    report.conditions_checked = {ConeCondition::Semigroup, ConeCondition::Partition,
                                 ConeCondition::CPC, ConeCondition::Disjoint};

    // Partition: identity in Sub, and inversion swaps Pos and Neg.
    if (oracle.classify(ops.identity) != ConeClass::Sub) {
        report.add(ConeCondition::Partition, {ops.format(ops.identity)});
    }
    for (const E& e : elems) {
        ConeClass c = oracle.classify(e);
        ConeClass ci = oracle.classify(ops.inv(e));
        ConeClass expected = c == ConeClass::Pos   ? ConeClass::Neg
                             : c == ConeClass::Neg ? ConeClass::Pos
                                                   : ConeClass::Sub;
        if (ci != expected) {
            report.add(ConeCondition::Partition, {ops.format(e), ops.format(ops.inv(e))});
        }
    }

    // Semigroup on Pos, subgroup closure on Sub, and C.P.C inside the sample.
    std::vector<const E*> pos, sub;
    for (const E& e : elems) {
        switch (oracle.classify(e)) {
        case ConeClass::Pos: pos.push_back(&e); break;
        case ConeClass::Sub: sub.push_back(&e); break;
        default: break;
        }
    }
    for (const E* a : pos) {
        for (const E* b : pos) {
            E ab = ops.mul(*a, *b);
            if (!index.contains(ops.format(ab))) continue;
            if (oracle.classify(ab) != ConeClass::Pos) {
                report.add(ConeCondition::Semigroup,
                           {ops.format(*a), ops.format(*b), ops.format(ab)});
            }
        }
    }
    for (const E* a : sub) {
        for (const E* b : sub) {
            E ab = ops.mul(*a, *b);
            if (!index.contains(ops.format(ab))) continue;
            if (oracle.classify(ab) != ConeClass::Sub) {
                report.add(ConeCondition::Partition,
                           {ops.format(*a), ops.format(*b), ops.format(ab)});
            }
        }
    }
    for (const E* c : sub) {
        for (const E* p : pos) {
            for (const E* c2 : sub) {
                E cpc = ops.mul(ops.mul(*c, *p), *c2);
                if (!index.contains(ops.format(cpc))) continue;
                if (oracle.classify(cpc) != ConeClass::Pos) {
                    report.add(ConeCondition::CPC, {ops.format(*c), ops.format(*p),
                                                    ops.format(*c2), ops.format(cpc)});
                }
            }
        }
    }

    // Disjointness of Pos and Neg is structural for an oracle (classify is a
    // function); recorded as checked for bookkeeping.
    return report;
}

// check_relative_cone plus conjugation invariance of Pos under the supplied
// conjugators (no in-sample restriction: classify is total).
template <class E>
BallReport check_bicone(const ConeOracle<E>& oracle, const GroupOps<E>& ops,
                        const std::vector<E>& elems, const std::vector<E>& conjugators) {
    BallReport report = check_relative_cone(oracle, ops, elems);
    report.conditions_checked.push_back(ConeCondition::ConjInv);
    for (const E& g : conjugators) {
        for (const E& p : elems) {
            if (oracle.classify(p) != ConeClass::Pos) continue;
            E c = ops.mul(ops.mul(g, p), ops.inv(g));
            if (oracle.classify(c) != ConeClass::Pos) {
                report.add(ConeCondition::ConjInv, {ops.format(g), ops.format(p), ops.format(c)});
            }
        }
    }
    return report;
}

template <class E>
std::vector<E> convex_subgroup(const ConeOracle<E>& oracle, const std::vector<E>& elems) {
    std::vector<E> out;
    for (const E& e : elems) {
        if (oracle.classify(e) == ConeClass::Sub) out.push_back(e);
    }
    return out;
}

// Extension of a relative cone by a total cone on its convex subgroup:
// R = P u Q. `q` is consulted only on elements `p` classifies Sub.
template <class E>
ConeOracle<E> extend_relative_cone(const ConeOracle<E>& p, const ConeOracle<E>& q) {
    return {[p, q](const E& e) {
                ConeClass c = p.classify(e);
                return c == ConeClass::Sub ? q.classify(e) : c;
            },
            "(" + p.description + ") extended by (" + q.description + ")"};
}

// Cone induced on a quotient: classify any representative through `p`.
// Well-definedness is spot-checked by comparing each sample against its
// canonical representative (IllDefined on disagreement).
template <class E>
ConeOracle<E> quotient_cone(const ConeOracle<E>& p, std::function<E(const E&)> project,
                            const std::vector<E>& spot_samples) {
    for (const E& e : spot_samples) {
        if (p.classify(e) != p.classify(project(e))) {
            throw DomainError("IllDefined", "representatives of one coset classify differently");
        }
    }
    return {[p, project](const E& e) { return p.classify(project(e)); },
            "quotient of (" + p.description + ")"};
}

// Lexicographic cone of a short exact sequence: the quotient class decides
// unless it is Sub, in which case the kernel cone does.
template <class E, class Q>
ConeOracle<E> lex_ses_cone(const ConeOracle<E>& kernel_cone, const ConeOracle<Q>& quotient_cone,
                           std::function<Q(const E&)> projection) {
    return {[kernel_cone, quotient_cone, projection](const E& e) {
                ConeClass c = quotient_cone.classify(projection(e));
                return c == ConeClass::Sub ? kernel_cone.classify(e) : c;
            },
            "(" + quotient_cone.description + ") over (" + kernel_cone.description + ")"};
}

} // namespace grouporder

#endif // GROUPORDER_CONES_HPP
