#ifndef GROUPORDER_REDUCTION_HPP
#define GROUPORDER_REDUCTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grouporder/hgp.hpp"
#include "grouporder/stallings.hpp"
#include "grouporder/words.hpp"

namespace grouporder {

// Membership oracle for a normal subgroup of the infinite-rank free group,
// restricted to the active generators x_1..x_window. Letters beyond the
// window are understood to lie in the subgroup.
struct MarkedGroup {
    int window;
    std::function<bool(const Word&)> member;
    std::string label;

    // member() after dropping letters beyond the window.
    bool member_windowed(const Word& w) const;
};

// The reduction G -> N_G: w is a member iff theta(w) lands in A_{P n G}.
// The window is k+1 (x_1 carries the b_id generator, x_{1+i} carries e_i).
MarkedGroup reduce_map(const StallingsGraph& g, int k);

struct PreimageResult {
    enum class Kind { Empty, Full, Cylinder };
    Kind kind;
    std::vector<Word> words; // nonempty exactly for Cylinder; positive words
};

// Case analysis for the subbasic open set U_g: theta(g) = id gives Full,
// theta(g) in A_P \ {id} gives the cylinder over its support, anything else
// gives Empty.
PreimageResult preimage_query(const Word& g, int k);

struct IsoWitnessReport {
    bool ok = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

// Discharges the conjugacy step: with G2 = h G1 h^-1 (NotConjugate
// otherwise), verifies on the generators of H and on seeded elements that
// reducing mod A_S' after the lift equals lifting the reduction mod A_S, and
// that the quotient signs agree.
IsoWitnessReport iso_witness(const StallingsGraph& g1, const StallingsGraph& g2, const Word& h,
                             std::uint64_t seed = 0xC0C0, int samples = 100);

// For distinct subgroups (SameSubgroup otherwise): the shortlex-least
// separating g in the ball, rewritten as the window word
// [x1, g^ x1 g^-1] on which the two marked groups differ; nullopt when no
// separator lies within the radius.
std::optional<Word> injectivity_witness(const StallingsGraph& g1, const StallingsGraph& g2,
                                        int radius, int radius_cap = kDefaultRadiusCap);

// The separating word above, exposed for tests: g is rewritten over
// x_2..x_{k+1} and wrapped into a commutator with x_1.
Word separating_window_word(const Word& g, int k);

struct ConvergenceRow {
    Word word;
    int k;
    bool in_nk;
    bool in_limit;
};

// Membership table for the kernels N_k of the coordinate projections to Z^k
// against the commutator-subgroup limit, over ball(k_max, radius).
std::vector<ConvergenceRow> convergence_demo(int k_max, int radius,
                                             int radius_cap = kDefaultRadiusCap);

std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

// Kernel N_k of the projection onto the first k coordinates, as a marked
// group on the given window.
MarkedGroup exponent_kernel(int window, int k);

// Isolation-breaking perturbation: K agrees with N on every constraint word
// (ConstraintViolated unless all are members) but excludes x_ell for
// ell = window + 1.
MarkedGroup perturb(const MarkedGroup& n, const std::vector<Word>& constraints);

} // namespace grouporder

#endif // GROUPORDER_REDUCTION_HPP
