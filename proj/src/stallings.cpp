#include "grouporder/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "grouporder/magnus.hpp"

namespace grouporder {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

using RawEdge = std::array<int, 3>; // src, label, dst

void check_graph_rank(const StallingsGraph& g, int rank, const char* what) {
    if (g.rank() != rank) {
        throw DomainError("RankMismatch", std::string(what) + ": graph rank " +
                                              std::to_string(g.rank()) + " vs " +
                                              std::to_string(rank));
    }
}

} // namespace

StallingsGraph::StallingsGraph(int rank, std::size_t vertex_count, std::vector<Edge> edges)
    : rank_(rank), vertex_count_(vertex_count), edges_(std::move(edges)) {
    adj_.assign(vertex_count_ * static_cast<std::size_t>(2 * rank_), -1);
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.src) * static_cast<std::size_t>(2 * rank_) +
             static_cast<std::size_t>(2 * (e.label - 1))] = e.dst;
        adj_[static_cast<std::size_t>(e.dst) * static_cast<std::size_t>(2 * rank_) +
             static_cast<std::size_t>(2 * (e.label - 1) + 1)] = e.src;
    }
}

int StallingsGraph::step(int vertex, int label, bool forward) const {
    return adj_[static_cast<std::size_t>(vertex) * static_cast<std::size_t>(2 * rank_) +
                static_cast<std::size_t>(2 * (label - 1) + (forward ? 0 : 1))];
}

bool StallingsGraph::is_well_formed() const {
    std::vector<int> degree(vertex_count_, 0);
    std::map<std::pair<int, int>, int> out_seen, in_seen;
    for (const Edge& e : edges_) {
        if (e.src < 0 || e.dst < 0 || e.src >= static_cast<int>(vertex_count_) ||
            e.dst >= static_cast<int>(vertex_count_) || e.label < 1 || e.label > rank_) {
            return false;
        }
        if (++out_seen[{e.src, e.label}] > 1) return false; // not folded
        if (++in_seen[{e.dst, e.label}] > 1) return false;
        degree[static_cast<std::size_t>(e.src)] += 1;
        degree[static_cast<std::size_t>(e.dst)] += 1;
    }
    for (std::size_t v = 1; v < vertex_count_; ++v) {
        if (degree[v] < 2) return false; // not core
    }
    if (!std::is_sorted(edges_.begin(), edges_.end())) return false;
    return true;
}

StallingsGraph fold(int rank, const std::vector<Word>& generators) {
    if (rank < 1) throw DomainError("IndexOutOfRank", "fold: rank must be >= 1");
    for (const Word& w : generators) {
        if (w.rank() != rank) {
            throw DomainError("RankMismatch", "fold: generator '" + format_word(w) +
                                                  "' has rank " + std::to_string(w.rank()));
        }
    }

    // Flower: one petal per nonempty generator.
    std::vector<RawEdge> edges;
    int next_vertex = 1;
    for (const Word& w : generators) {
        if (w.empty()) continue;
        int prev = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Letter l = w.letters()[i];
            int next = (i + 1 == w.size()) ? 0 : next_vertex++;
            if (l > 0) {
                edges.push_back({prev, letter_index(l), next});
            } else {
                edges.push_back({next, letter_index(l), prev});
            }
            prev = next;
        }
    }

    // Fold to a fixed point: merge the targets of equal-labeled parallel
    // out-edges (and sources of parallel in-edges).
    UnionFind uf(static_cast<std::size_t>(next_vertex));
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::pair<int, int>, int> out_to, in_from;
        for (const RawEdge& e : edges) {
            int a = uf.find(e[0]);
            int b = uf.find(e[2]);
            auto [out_it, out_new] = out_to.try_emplace({a, e[1]}, b);
            if (!out_new && out_it->second != b) {
                uf.merge(out_it->second, b);
                changed = true;
                break;
            }
            auto [in_it, in_new] = in_from.try_emplace({b, e[1]}, a);
            if (!in_new && in_it->second != a) {
                uf.merge(in_it->second, a);
                changed = true;
                break;
            }
        }
    }

    // Canonical renumbering: breadth-first from the base, slots in label
    // order x1-out, x1-in, x2-out, ...
    std::map<std::pair<int, int>, int> out_to, in_from;
    for (const RawEdge& e : edges) {
        out_to[{uf.find(e[0]), e[1]}] = uf.find(e[2]);
        in_from[{uf.find(e[2]), e[1]}] = uf.find(e[0]);
    }
    std::map<int, int> number;
    number[uf.find(0)] = 0;
    std::queue<int> frontier;
    frontier.push(uf.find(0));
    int count = 1;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int label = 1; label <= rank; ++label) {
            for (const auto& table : {std::cref(out_to), std::cref(in_from)}) {
                auto it = table.get().find({v, label});
                if (it != table.get().end() && number.try_emplace(it->second, count).second) {
                    frontier.push(it->second);
                    ++count;
                }
            }
        }
    }

    std::vector<StallingsGraph::Edge> canonical;
    for (const auto& [key, dst] : out_to) {
        canonical.push_back({number.at(key.first), key.second, number.at(dst)});
    }
    std::sort(canonical.begin(), canonical.end());
    return StallingsGraph(rank, static_cast<std::size_t>(count), std::move(canonical));
}

bool contains(const StallingsGraph& g, const Word& w) {
    check_graph_rank(g, w.rank(), "contains");
    int at = g.base();
    for (Letter l : w.letters()) {
        at = g.step(at, letter_index(l), l > 0);
        if (at < 0) return false;
    }
    return at == g.base();
}

bool equal(const StallingsGraph& g1, const StallingsGraph& g2) {
    check_graph_rank(g1, g2.rank(), "equal");
    return g1 == g2;
}

std::vector<Word> loop_generators(const StallingsGraph& g) {
    // Spanning tree by the same BFS order as the canonical numbering; each
    // chord (u, label, v) contributes path(u) * x_label * path(v)^-1.
    const std::size_t n = g.vertex_count();
    std::vector<std::optional<Word>> path(n);
    path[0] = Word::identity(g.rank());
    std::vector<StallingsGraph::Edge> chords;
    std::vector<char> tree_edge(g.edges().size(), 0);
    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int label = 1; label <= g.rank(); ++label) {
            for (bool forward : {true, false}) {
                int to = g.step(v, label, forward);
                if (to < 0 || path[static_cast<std::size_t>(to)].has_value()) continue;
                std::vector<Letter> ext(path[static_cast<std::size_t>(v)]->letters().begin(),
                                        path[static_cast<std::size_t>(v)]->letters().end());
                ext.push_back(make_letter(label, forward ? +1 : -1));
                path[static_cast<std::size_t>(to)] = Word(g.rank(), ext);
                frontier.push(to);
                // mark the tree edge
                StallingsGraph::Edge te =
                    forward ? StallingsGraph::Edge{v, label, to} : StallingsGraph::Edge{to, label, v};
                auto it = std::lower_bound(g.edges().begin(), g.edges().end(), te);
                tree_edge[static_cast<std::size_t>(it - g.edges().begin())] = 1;
            }
        }
    }
    std::vector<Word> gens;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (tree_edge[i]) continue;
        const auto& e = g.edges()[i];
        Word mid(g.rank(), {make_letter(e.label, +1)});
        gens.push_back(multiply(multiply(*path[static_cast<std::size_t>(e.src)], mid),
                                invert(*path[static_cast<std::size_t>(e.dst)])));
    }
    return gens;
}

StallingsGraph conjugate_subgroup(const StallingsGraph& g, const Word& h) {
    check_graph_rank(g, h.rank(), "conjugate_subgroup");
    std::vector<Word> gens;
    for (const Word& w : loop_generators(g)) {
        gens.push_back(conjugate(h, w));
    }
    return fold(g.rank(), gens);
}

std::optional<Word> conjugacy_witness(const StallingsGraph& g1, const StallingsGraph& g2,
                                      int radius, int radius_cap) {
    check_graph_rank(g1, g2.rank(), "conjugacy_witness");
    for (const Word& h : ball(g1.rank(), radius, radius_cap)) {
        if (conjugate_subgroup(g1, h) == g2) return h;
    }
    return std::nullopt;
}

std::vector<Word> cone_intersection_ball(const StallingsGraph& g, int radius, int radius_cap) {
    std::vector<Word> out;
    for (const Word& w : ball(g.rank(), radius, radius_cap)) {
        if (contains(g, w) && magnus_sign(w) == Sign::Positive) out.push_back(w);
    }
    return out;
}

} // namespace grouporder
