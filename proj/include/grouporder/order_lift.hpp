#ifndef GROUPORDER_ORDER_LIFT_HPP
#define GROUPORDER_ORDER_LIFT_HPP

#include <array>
#include <functional>
#include <vector>

#include "grouporder/hgp.hpp"
#include "grouporder/words.hpp"

namespace grouporder {

// Automorphism of the free group expected to preserve the Magnus order.
// Inner automorphisms carry an a-priori certificate; anything else is
// certified by a finite sample sweep only.
class OrderAutomorphism {
public:
    // Throws NotInverse unless images and inverse_images compose to the
    // identity on every generator.
    OrderAutomorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images);

    static OrderAutomorphism identity(int rank);

    int rank() const { return rank_; }
    const std::vector<Word>& images() const { return images_; }
    const std::vector<Word>& inverse_images() const { return inverse_images_; }

    bool is_inner() const { return inner_; }
    // "inner" or "sampled only"
    const char* certificate() const { return inner_ ? "inner" : "sampled only"; }

    // sign(apply(w)) == sign(w) for all w in ball(rank, radius); immediate
    // for inner automorphisms.
    bool order_preserving_sampled(int radius = 3) const;

private:
    friend OrderAutomorphism conj_aut(const Word& h);

    int rank_;
    std::vector<Word> images_;
    std::vector<Word> inverse_images_;
    bool inner_ = false;
};

// phi_h(g) = h g h^-1; order-preserving a priori.
OrderAutomorphism conj_aut(const Word& h);

// Substitution homomorphism.
Word apply(const OrderAutomorphism& phi, const Word& w);
Word apply_inverse(const OrderAutomorphism& phi, const Word& w);

// (phi . psi)(w) = phi(psi(w))
OrderAutomorphism compose(const OrderAutomorphism& phi, const OrderAutomorphism& psi);

// Lift to an automorphism of H(F, P): re-index a-keys and b-keys by phi and
// apply phi to the group part. Throws NotOrderPreserving if the sampled
// order-preservation check fails.
std::function<HElement(const HElement&)> lift(const OrderAutomorphism& phi);

struct Aut1Report {
    bool ok = true;
    std::vector<std::array<Word, 2>> witnesses;
    std::size_t checks = 0;
};

// Compatibility of the lift with the cocycle on all basis pairs from
// ball(rank, radius): phi_A(f(b_u, b_v)) == f(b_phi(u), b_phi(v)).
Aut1Report check_aut1(const OrderAutomorphism& phi, int radius = 2);

struct MapAsReport {
    bool ok = true;
    std::vector<Word> failed_generators;   // a_w not mapped into A_S'
    std::vector<Word> conj_set_failures;   // w where S' and h S h^-1 disagree
    std::size_t checks = 0;
};

// S' = P n hGh^-1 for S = P n G, with verification that the lifted inner
// automorphism carries the sampled A_S generators into A_S' and that
// P n G' = h (P n G) h^-1 holds elementwise on a ball.
std::pair<SIndex, MapAsReport> map_AS(const Word& h, const SIndex& s, int sample_radius = 3);

} // namespace grouporder

#endif // GROUPORDER_ORDER_LIFT_HPP
