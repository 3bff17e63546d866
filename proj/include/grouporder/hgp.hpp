#ifndef GROUPORDER_HGP_HPP
#define GROUPORDER_HGP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "grouporder/cones.hpp"
#include "grouporder/magnus.hpp"
#include "grouporder/stallings.hpp"
#include "grouporder/words.hpp"

namespace grouporder {

// Finitely supported integer vector indexed by reduced words, keys kept in
// shortlex order and zero entries dropped, so value equality is group
// equality in the free abelian groups A and B.
using SparseVec = std::map<Word, std::int64_t, ShortlexLess>;

// Free abelian group on the positive cone P: every key must be positive.
class AVector {
public:
    explicit AVector(int rank) : rank_(rank) {}
    AVector(int rank, SparseVec coeffs);

    static AVector basis(const Word& h, std::int64_t coef = 1);

    int rank() const { return rank_; }
    const SparseVec& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    friend AVector operator+(const AVector& x, const AVector& y);
    friend AVector operator-(const AVector& x);

    friend bool operator==(const AVector& x, const AVector& y) {
        return x.rank_ == y.rank_ && x.coeffs_ == y.coeffs_;
    }

private:
    int rank_;
    SparseVec coeffs_;
};

// Free abelian group on all of G.
class BVector {
public:
    explicit BVector(int rank) : rank_(rank) {}
    BVector(int rank, SparseVec coeffs);

    static BVector basis(const Word& g, std::int64_t coef = 1);

    int rank() const { return rank_; }
    const SparseVec& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    friend BVector operator+(const BVector& x, const BVector& y);
    friend BVector operator-(const BVector& x);

    friend bool operator==(const BVector& x, const BVector& y) {
        return x.rank_ == y.rank_ && x.coeffs_ == y.coeffs_;
    }

private:
    int rank_;
    SparseVec coeffs_;
};

// Order cocycle on basis vectors: f(b_g, b_h) = a_{g^-1 h} when g < h in the
// Magnus order, 0 otherwise; extended bilinearly.
AVector cocycle_f(const BVector& x, const BVector& y);

// Central extension of B by A along the order cocycle.
struct BfElement {
    AVector a;
    BVector b;

    int rank() const { return a.rank(); }
    friend bool operator==(const BfElement&, const BfElement&) = default;
};

BfElement bf_identity(int rank);
// (a, b)(a', b') = (a + a' + f(b, b'), b + b')
BfElement bf_mul(const BfElement& x, const BfElement& y);
BfElement bf_inv(const BfElement& x);

// Left translation of the b-indices; a untouched.
BVector g_action(const Word& g, const BVector& b);
BfElement g_action(const Word& g, const BfElement& x);

// H(G, P) = B_f x| G for G free of rank k with the Magnus cone.
struct HElement {
    BfElement ab;
    Word g;

    int rank() const { return g.rank(); }
    friend bool operator==(const HElement&, const HElement&) = default;
};

HElement h_identity(int rank);
// ((u, g), (v, h)) -> (u * (g . v), g h)
HElement h_mul(const HElement& x, const HElement& y);
HElement h_inv(const HElement& x);
bool h_is_identity(const HElement& x);

// The k+1 canonical generators: ((0, b_id), id) first, then ((0,0), e_i).
std::vector<HElement> h_generators(int rank);

// Evaluation of a word over the rank-(k+1) window at the generators;
// letters beyond the window act as the identity.
HElement theta(const Word& w, int k);

// Index set S of the central subgroup A_S, either P n G for a subgroup G
// (the canonical form) or an explicit finite set of positive words.
class SIndex {
public:
    static SIndex cone_intersection(StallingsGraph g);
    static SIndex explicit_finite(int rank, const std::vector<Word>& words);

    int rank() const { return rank_; }
    bool contains_key(const Word& w) const;
    const StallingsGraph* graph() const { return graph_ ? &*graph_ : nullptr; }
    std::string describe() const;

private:
    SIndex(int rank, std::optional<StallingsGraph> graph, std::set<std::string> words)
        : rank_(rank), graph_(std::move(graph)), words_(std::move(words)) {}

    int rank_;
    std::optional<StallingsGraph> graph_;
    std::set<std::string> words_;
};

// Normal form of the coset x A_S: a-keys inside S are deleted. Idempotent and
// compatible with h_mul.
HElement as_mod(const HElement& x, const SIndex& s);

// Sign of the nonzero coefficient at the Magnus-least index of the support;
// Zero on the empty support. The bi-order rule shared by B and by A (and by
// A reduced mod S).
Sign least_index_sign(const SparseVec& coeffs);

// Bi-order of H/A_S, stacking the short exact sequences of the construction
// lexicographically: the G-part decides, then the B-part, then the A-part
// reduced mod S. Zero exactly on A_S.
Sign hq_sign(const HElement& x, const SIndex& s);

// Canonical renderings (the wire format, keys in shortlex order):
//   {"a":[{"key":"x1 x2","coef":2}],"b":[{"key":"1","coef":-1}],"g":"x1"}
std::string format_a(const AVector& a);
std::string format_b(const BVector& b);
std::string format_h(const HElement& x);

// Cone-oracle and group-structure adapters for the generic validators.
GroupOps<HElement> h_group_ops(int rank);
GroupOps<HElement> hq_group_ops(int rank, const SIndex& s);
ConeOracle<HElement> hq_cone(const SIndex& s);

ConeOracle<BVector> semidirect_b_cone();
GroupOps<BVector> b_group_ops(int rank);

} // namespace grouporder

#endif // GROUPORDER_HGP_HPP
