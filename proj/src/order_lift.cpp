#include "grouporder/order_lift.hpp"

#include "grouporder/magnus.hpp"

namespace grouporder {

namespace {

Word substitute(const std::vector<Word>& images, int rank, const Word& w) {
    Word out = Word::identity(rank);
    for (Letter l : w.letters()) {
        const Word& img = images[static_cast<std::size_t>(letter_index(l) - 1)];
        out = multiply(out, l > 0 ? img : invert(img));
    }
    return out;
}

} // namespace

OrderAutomorphism::OrderAutomorphism(int rank, std::vector<Word> images,
                                     std::vector<Word> inverse_images)
    : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
    if (static_cast<int>(images_.size()) != rank ||
        static_cast<int>(inverse_images_.size()) != rank) {
        throw DomainError("RankMismatch", "automorphism needs one image per generator");
    }
    for (int i = 1; i <= rank; ++i) {
        Word gen(rank, {make_letter(i, +1)});
        if (substitute(inverse_images_, rank, substitute(images_, rank, gen)) != gen ||
            substitute(images_, rank, substitute(inverse_images_, rank, gen)) != gen) {
            throw DomainError("NotInverse",
                              "images and inverse_images do not compose to the identity on x" +
                                  std::to_string(i));
        }
    }
}

OrderAutomorphism OrderAutomorphism::identity(int rank) {
    std::vector<Word> gens;
    for (int i = 1; i <= rank; ++i) gens.push_back(Word(rank, {make_letter(i, +1)}));
    OrderAutomorphism phi(rank, gens, gens);
    phi.inner_ = true; // conjugation by the identity
    return phi;
}

bool OrderAutomorphism::order_preserving_sampled(int radius) const {
    if (inner_) return true;
    for (const Word& w : ball(rank_, radius)) {
        if (magnus_sign(apply(*this, w)) != magnus_sign(w)) return false;
    }
    return true;
}

OrderAutomorphism conj_aut(const Word& h) {
    const int rank = h.rank();
    std::vector<Word> images, inverse_images;
    const Word hi = invert(h);
    for (int i = 1; i <= rank; ++i) {
        Word gen(rank, {make_letter(i, +1)});
        images.push_back(conjugate(h, gen));
        inverse_images.push_back(conjugate(hi, gen));
    }
    OrderAutomorphism phi(rank, std::move(images), std::move(inverse_images));
    phi.inner_ = true;
    return phi;
}

Word apply(const OrderAutomorphism& phi, const Word& w) {
    if (phi.rank() != w.rank()) {
        throw DomainError("RankMismatch", "apply: automorphism rank " + std::to_string(phi.rank()) +
                                              " vs word rank " + std::to_string(w.rank()));
    }
    return substitute(phi.images(), phi.rank(), w);
}

Word apply_inverse(const OrderAutomorphism& phi, const Word& w) {
    if (phi.rank() != w.rank()) {
        throw DomainError("RankMismatch", "apply_inverse: rank mismatch");
    }
    return substitute(phi.inverse_images(), phi.rank(), w);
}

OrderAutomorphism compose(const OrderAutomorphism& phi, const OrderAutomorphism& psi) {
    if (phi.rank() != psi.rank()) {
        throw DomainError("RankMismatch", "compose: rank mismatch");
    }
    std::vector<Word> images, inverse_images;
    for (int i = 1; i <= phi.rank(); ++i) {
        Word gen(phi.rank(), {make_letter(i, +1)});
        images.push_back(apply(phi, apply(psi, gen)));
        inverse_images.push_back(apply_inverse(psi, apply_inverse(phi, gen)));
    }
    return OrderAutomorphism(phi.rank(), std::move(images), std::move(inverse_images));
}

std::function<HElement(const HElement&)> lift(const OrderAutomorphism& phi) {
    if (!phi.order_preserving_sampled()) {
        throw DomainError("NotOrderPreserving",
                          "sampled order-preservation check failed; cannot lift");
    }
    return [phi](const HElement& x) {
        SparseVec a, b;
        for (const auto& [key, coef] : x.ab.a.coeffs()) a[apply(phi, key)] += coef;
        for (const auto& [key, coef] : x.ab.b.coeffs()) b[apply(phi, key)] += coef;
        return HElement{{AVector(x.rank(), std::move(a)), BVector(x.rank(), std::move(b))},
                        apply(phi, x.g)};
    };
}

Aut1Report check_aut1(const OrderAutomorphism& phi, int radius) {
    Aut1Report report;
    const std::vector<Word> basis = ball(phi.rank(), radius);
    for (const Word& u : basis) {
        for (const Word& v : basis) {
            AVector fv = cocycle_f(BVector::basis(u), BVector::basis(v));
            SparseVec mapped;
            for (const auto& [key, coef] : fv.coeffs()) mapped[apply(phi, key)] += coef;
            AVector lhs(phi.rank(), std::move(mapped));
            AVector rhs = cocycle_f(BVector::basis(apply(phi, u)), BVector::basis(apply(phi, v)));
            ++report.checks;
            if (!(lhs == rhs)) {
                report.ok = false;
                report.witnesses.push_back({u, v});
            }
        }
    }
    return report;
}

std::pair<SIndex, MapAsReport> map_AS(const Word& h, const SIndex& s, int sample_radius) {
    const StallingsGraph* g = s.graph();
    if (g == nullptr) {
        throw DomainError("DomainMismatch", "map_AS expects S in the form P n G");
    }
    StallingsGraph conj = conjugate_subgroup(*g, h);
    SIndex s_prime = SIndex::cone_intersection(conj);

    MapAsReport report;
    auto lifted = lift(conj_aut(h));
    for (const Word& w : cone_intersection_ball(*g, sample_radius)) {
        HElement image = lifted({{AVector::basis(w), BVector(h.rank())}, Word::identity(h.rank())});
        ++report.checks;
        if (!h_is_identity(as_mod(image, s_prime))) {
            report.ok = false;
            report.failed_generators.push_back(w);
        }
    }
    const Word hi = invert(h);
    for (const Word& w : ball(h.rank(), sample_radius)) {
        ++report.checks;
        if (s_prime.contains_key(w) != s.contains_key(conjugate(hi, w))) {
            report.ok = false;
            report.conj_set_failures.push_back(w);
        }
    }
    return {std::move(s_prime), std::move(report)};
}

} // namespace grouporder
