#ifndef GROUPORDER_STALLINGS_HPP
#define GROUPORDER_STALLINGS_HPP

#include <array>
#include <optional>
#include <vector>

#include "grouporder/words.hpp"

namespace grouporder {

// Folded core graph of a finitely generated subgroup of a free group, in
// canonical form: vertices are numbered by breadth-first order from the base
// (edges explored x1-out, x1-in, x2-out, ...), the base is vertex 0, and the
// edge list is sorted. Equality of subgroups is structural equality.
class StallingsGraph {
public:
    struct Edge {
        int src;
        int label; // generator index, 1-based
        int dst;
        friend auto operator<=>(const Edge&, const Edge&) = default;
    };

    int rank() const { return rank_; }
    int base() const { return 0; }
    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Out-/in-neighbor along x_label, or -1.
    int step(int vertex, int label, bool forward) const;

    friend bool operator==(const StallingsGraph& a, const StallingsGraph& b) {
        return a.rank_ == b.rank_ && a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

    // Folded + core + canonical-numbering sanity check (test support).
    bool is_well_formed() const;

private:
    friend StallingsGraph fold(int rank, const std::vector<Word>& generators);

    StallingsGraph(int rank, std::size_t vertex_count, std::vector<Edge> edges);

    int rank_ = 0;
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_; // vertex_count x 2*rank slots, -1 when absent
};

// Folded core graph of the subgroup generated by `generators` (all of rank
// `rank`; the empty list gives the trivial subgroup).
StallingsGraph fold(int rank, const std::vector<Word>& generators);

// Membership: w traces a base-to-base loop.
bool contains(const StallingsGraph& g, const Word& w);

bool equal(const StallingsGraph& g1, const StallingsGraph& g2);

// Free generating set read off a spanning tree (one word per chord).
std::vector<Word> loop_generators(const StallingsGraph& g);

// Graph of h G h^-1.
StallingsGraph conjugate_subgroup(const StallingsGraph& g, const Word& h);

// Shortlex-least h in ball(rank, radius) with h G1 h^-1 = G2, if any; absence
// does not certify non-conjugacy.
std::optional<Word> conjugacy_witness(const StallingsGraph& g1, const StallingsGraph& g2,
                                      int radius, int radius_cap = kDefaultRadiusCap);

// {w in ball(rank, radius) : w in G and w positive}, shortlex order.
std::vector<Word> cone_intersection_ball(const StallingsGraph& g, int radius,
                                         int radius_cap = kDefaultRadiusCap);

} // namespace grouporder

#endif // GROUPORDER_STALLINGS_HPP
