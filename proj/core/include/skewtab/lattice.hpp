#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewtab/shapes.hpp"
#include "skewtab/tableaux.hpp"
#include "skewtab/weights.hpp"

namespace skewtab {

struct Edge {
    int src;
    int dst;
    int color;  // 1-based
    int pos;    // changed payload position, -1 if unknown
};

struct Diamond {
    int r, s, t, u;      // r -> s -> u, r -> t -> u
    int rs, rt, su, tu;  // edge indices
};

struct VecHash {
    size_t operator()(const std::vector<int>& v) const noexcept {
        uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<uint64_t>(static_cast<uint32_t>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

class ColoredLattice {
  public:
    int num_colors = 0;
    std::vector<std::vector<int>> payload;
    std::vector<Weight> weight;
    std::vector<Edge> edges;

    // derived by finalize()
    std::vector<std::vector<int>> out_edges, in_edges;
    std::vector<int> rank;
    std::vector<std::vector<int>> m;  // m[v][i-1]
    int bottom = -1;
    int top = -1;

    int size() const { return static_cast<int>(payload.size()); }
    int length() const { return top >= 0 ? rank[top] : 0; }
    int find(const std::vector<int>& p) const;
    int edge_between(int a, int b) const;

    // Adjacency, ranks (graded check), m_i; weights are set from m_i when empty.
    void finalize();
    void index_payloads();

  private:
    std::unordered_map<std::vector<int>, int, VecHash> index_;
    std::unordered_map<uint64_t, int> edge_index_;
};

// Vertices from payload vectors; edge s->t whenever t = s + e_pos for a single
// position pos with color_of_pos(pos) > 0.
template <class ColorOf>
ColoredLattice lattice_from_payloads(std::vector<std::vector<int>> payloads, int num_colors, ColorOf color_of_pos) {
    ColoredLattice L;
    L.num_colors = num_colors;
    L.payload = std::move(payloads);
    L.index_payloads();
    for (int v = 0; v < L.size(); ++v) {
        auto p = L.payload[v];
        for (size_t k = 0; k < p.size(); ++k) {
            int c = color_of_pos(static_cast<int>(k));
            if (c <= 0) continue;
            ++p[k];
            int w = L.find(p);
            --p[k];
            if (w >= 0) L.edges.push_back({v, w, c, static_cast<int>(k)});
        }
    }
    return L;
}

struct SkewLattice {
    SkewShape shape;
    ColoredLattice L;
    GTParallelogram gt(int v) const { return {shape.n, shape.m(), L.payload[v]}; }
    // changed position (i, j) of an edge
    std::pair<int, int> edge_position(int e) const;
};

SkewLattice build(const SkewShape& s);
// classical GT lattice L^GT_{A_{n-1}}(P), n = |P|
SkewLattice build_gt(const Partition& P);

bool verify_diamond_colored(const ColoredLattice& L);
bool verify_join_meet_closed(const ColoredLattice& L);
std::vector<Diamond> diamonds(const ColoredLattice& L);

std::vector<int> comp(const ColoredLattice& L, const std::vector<int>& J, int x);
// J-components as lists of vertices; every vertex in exactly one
std::vector<std::vector<int>> components(const ColoredLattice& L, const std::vector<int>& J);
// induced sub-lattice; `members` is the map back into L
ColoredLattice sublattice(const ColoredLattice& L, const std::vector<int>& members);

struct ChainWindow {
    int color;
    std::vector<std::pair<int, int>> bounds;  // (b_r, t_r)
    long long size() const;
};
ChainWindow chain_window(const GTParallelogram& x, int k);

int m_i(const ColoredLattice& L, int x, int i);
LaurentPoly wgf(const ColoredLattice& L);
QPoly rgf(const ColoredLattice& L);
// <wt(x) + wt(max), rho^vee>
long long rank_via_pairing(const ColoredLattice& L, const RootData& rd, int x);
bool is_structured(const ColoredLattice& L, const RootData& rd);
bool is_rank_symmetric_unimodal(const ColoredLattice& L);

// recolor i -> sigma(i)
ColoredLattice recolor(const ColoredLattice& L, const std::vector<int>& sigma);
ColoredLattice lattice_op(const ColoredLattice& L, ShapeOp op);

enum class IsoResult { Isomorphic, NotIsomorphic, Unknown };
const char* iso_name(IsoResult r);
IsoResult check_iso(const ColoredLattice& A, const ColoredLattice& B, long long node_budget = 2000000,
                    std::vector<int>* mapping = nullptr);

}  // namespace skewtab
