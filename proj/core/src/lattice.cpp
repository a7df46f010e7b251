#include "skewtab/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "skewtab/errors.hpp"

namespace skewtab {

namespace {

uint64_t pair_key(int a, int b) { return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b); }

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int ColoredLattice::find(const std::vector<int>& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int ColoredLattice::edge_between(int a, int b) const {
    auto it = edge_index_.find(pair_key(a, b));
    return it == edge_index_.end() ? -1 : it->second;
}

void ColoredLattice::index_payloads() {
    index_.clear();
    index_.reserve(payload.size() * 2);
    for (int v = 0; v < size(); ++v) index_.emplace(payload[v], v);
}

void ColoredLattice::finalize() {
    int n = size();
    if (static_cast<int>(index_.size()) != n) index_payloads();
    out_edges.assign(n, {});
    in_edges.assign(n, {});
    edge_index_.clear();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto& E = edges[e];
        if (E.color < 1 || E.color > num_colors) throw InvariantError("edge color out of range");
        out_edges[E.src].push_back(e);
        in_edges[E.dst].push_back(e);
        edge_index_[pair_key(E.src, E.dst)] = e;
    }
    bottom = top = -1;
    for (int v = 0; v < n; ++v) {
        if (in_edges[v].empty()) {
            if (bottom >= 0) throw InvariantError("more than one minimal element");
            bottom = v;
        }
        if (out_edges[v].empty()) {
            if (top >= 0) throw InvariantError("more than one maximal element");
            top = v;
        }
    }
    rank.assign(n, -1);
    if (n == 0) return;
    if (bottom < 0) throw InvariantError("no minimal element");
    std::deque<int> q{bottom};
    rank[bottom] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int e : out_edges[v]) {
            int w = edges[e].dst;
            if (rank[w] < 0) {
                rank[w] = rank[v] + 1;
                q.push_back(w);
            } else if (rank[w] != rank[v] + 1) {
                throw InvariantError("poset is not graded");
            }
        }
        for (int e : in_edges[v]) {
            int w = edges[e].src;
            if (rank[w] < 0) {
                rank[w] = rank[v] - 1;
                q.push_back(w);
            } else if (rank[w] != rank[v] - 1) {
                throw InvariantError("poset is not graded");
            }
        }
    }
    if (std::any_of(rank.begin(), rank.end(), [](int r) { return r < 0; }))
        throw InvariantError("poset is not connected");

    m.assign(n, std::vector<int>(num_colors, 0));
    for (int c = 1; c <= num_colors; ++c) {
        UnionFind uf(n);
        for (const auto& E : edges)
            if (E.color == c) uf.unite(E.src, E.dst);
        std::vector<int> lo(n, INT32_MAX), hi(n, INT32_MIN);
        for (int v = 0; v < n; ++v) {
            int r = uf.find(v);
            lo[r] = std::min(lo[r], rank[v]);
            hi[r] = std::max(hi[r], rank[v]);
        }
        for (int v = 0; v < n; ++v) {
            int r = uf.find(v);
            m[v][c - 1] = 2 * rank[v] - lo[r] - hi[r];
        }
    }
    if (weight.empty()) weight = m;
}

std::pair<int, int> SkewLattice::edge_position(int e) const {
    int pos = L.edges[e].pos;
    int i = pos / shape.m(), r = pos % shape.m();
    return {i, i - r};
}

SkewLattice build(const SkewShape& s) {
    auto tabs = enumerate_tableaux(s);
    std::vector<std::vector<int>> pl;
    std::vector<Weight> ws;
    pl.reserve(tabs.size());
    for (const auto& T : tabs) {
        pl.push_back(to_parallelogram(T).g);
        ws.push_back(wt(T));
    }
    int m = s.m(), n = s.n;
    auto L = lattice_from_payloads(std::move(pl), n - 1, [&](int pos) {
        int i = pos / m;
        return (i >= 1 && i <= n - 1) ? i : 0;
    });
    L.weight = std::move(ws);
    L.finalize();
    if (L.weight != L.m) throw InvariantError("tableau weights disagree with m_i");
    // entry-sum rank
    for (int v = 0; v < L.size(); ++v) {
        int r = 0;
        for (size_t k = 0; k < L.payload[v].size(); ++k) r += L.payload[v][k] - L.payload[L.bottom][k];
        if (r != L.rank[v]) throw InvariantError("entry-sum rank disagrees with graded rank");
    }
    return {s, std::move(L)};
}

SkewLattice build_gt(const Partition& P) {
    return build(make_shape(P, {}, static_cast<int>(P.size())));
}

std::vector<Diamond> diamonds(const ColoredLattice& L) {
    std::vector<Diamond> out;
    for (int r = 0; r < L.size(); ++r) {
        const auto& oe = L.out_edges[r];
        for (size_t a = 0; a < oe.size(); ++a)
            for (size_t b = a + 1; b < oe.size(); ++b) {
                int s = L.edges[oe[a]].dst, t = L.edges[oe[b]].dst;
                for (int su : L.out_edges[s]) {
                    int u = L.edges[su].dst;
                    int tu = L.edge_between(t, u);
                    if (tu >= 0) out.push_back({r, s, t, u, oe[a], oe[b], su, tu});
                }
            }
    }
    return out;
}

bool verify_diamond_colored(const ColoredLattice& L) {
    for (const auto& d : diamonds(L))
        if (L.edges[d.rs].color != L.edges[d.tu].color || L.edges[d.rt].color != L.edges[d.su].color) return false;
    return true;
}

bool verify_join_meet_closed(const ColoredLattice& L) {
    int n = L.size();
    std::vector<int> a, b;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const auto& p = L.payload[x];
            const auto& q = L.payload[y];
            a.resize(p.size());
            b.resize(p.size());
            for (size_t k = 0; k < p.size(); ++k) {
                a[k] = std::max(p[k], q[k]);
                b[k] = std::min(p[k], q[k]);
            }
            if (L.find(a) < 0 || L.find(b) < 0) return false;
        }
    return true;
}

std::vector<int> comp(const ColoredLattice& L, const std::vector<int>& J, int x) {
    std::vector<char> inJ(L.num_colors + 1, 0);
    for (int c : J)
        if (c >= 1 && c <= L.num_colors) inJ[c] = 1;
    std::vector<char> seen(L.size(), 0);
    std::vector<int> out{x}, stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        auto visit = [&](int e, int w) {
            if (inJ[L.edges[e].color] && !seen[w]) {
                seen[w] = 1;
                out.push_back(w);
                stack.push_back(w);
            }
        };
        for (int e : L.out_edges[v]) visit(e, L.edges[e].dst);
        for (int e : L.in_edges[v]) visit(e, L.edges[e].src);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> components(const ColoredLattice& L, const std::vector<int>& J) {
    std::vector<char> inJ(L.num_colors + 1, 0);
    for (int c : J)
        if (c >= 1 && c <= L.num_colors) inJ[c] = 1;
    UnionFind uf(L.size());
    for (const auto& E : L.edges)
        if (inJ[E.color]) uf.unite(E.src, E.dst);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < L.size(); ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [r, vs] : groups) out.push_back(std::move(vs));
    std::sort(out.begin(), out.end());
    return out;
}

ColoredLattice sublattice(const ColoredLattice& L, const std::vector<int>& members) {
    ColoredLattice S;
    S.num_colors = L.num_colors;
    std::unordered_map<int, int> local;
    for (int v : members) {
        local[v] = S.size();
        S.payload.push_back(L.payload[v]);
    }
    for (int v : members)
        for (int e : L.out_edges[v]) {
            auto it = local.find(L.edges[e].dst);
            if (it != local.end()) S.edges.push_back({local[v], it->second, L.edges[e].color, L.edges[e].pos});
        }
    S.finalize();
    return S;
}

long long ChainWindow::size() const {
    long long s = 1;
    for (auto [b, t] : bounds) s *= (t - b + 1);
    return s;
}

ChainWindow chain_window(const GTParallelogram& x, int k) {
    ChainWindow w{k, {}};
    for (int r = 0; r < x.m; ++r) {
        int b = x.t(k - 1, r);
        if (r + 1 < x.m) b = std::max(b, x.t(k + 1, r + 1));
        int t = x.t(k + 1, r);
        if (r > 0) t = std::min(t, x.t(k - 1, r - 1));
        w.bounds.push_back({b, t});
    }
    return w;
}

int m_i(const ColoredLattice& L, int x, int i) { return L.m.at(x).at(i - 1); }

LaurentPoly wgf(const ColoredLattice& L) {
    LaurentPoly p;
    for (const auto& w : L.weight) p.add_term(w, 1);
    return p;
}

QPoly rgf(const ColoredLattice& L) {
    std::vector<long long> c(L.length() + 1, 0);
    for (int r : L.rank) ++c[r];
    return QPoly(c);
}

long long rank_via_pairing(const ColoredLattice& L, const RootData& rd, int x) {
    Weight s(rd.rank);
    for (int k = 0; k < rd.rank; ++k) s[k] = L.weight[x][k] + L.weight[L.top][k];
    long long two = two_rho_pairing(rd, s);
    if (two % 2 != 0) throw InvariantError("odd rho pairing");
    return two / 2;
}

bool is_structured(const ColoredLattice& L, const RootData& rd) {
    if (L.num_colors != rd.rank) return false;
    if (L.weight != L.m) return false;
    for (const auto& E : L.edges)
        for (int j = 0; j < rd.rank; ++j)
            if (L.m[E.dst][j] - L.m[E.src][j] != rd.cartan[E.color - 1][j]) return false;
    return true;
}

bool is_rank_symmetric_unimodal(const ColoredLattice& L) {
    auto p = poly_props(rgf(L));
    return p.symmetric && p.unimodal;
}

ColoredLattice recolor(const ColoredLattice& L, const std::vector<int>& sigma) {
    ColoredLattice R;
    R.num_colors = L.num_colors;
    R.payload = L.payload;
    R.edges = L.edges;
    for (auto& E : R.edges) E.color = sigma.at(E.color);
    R.finalize();
    return R;
}

ColoredLattice lattice_op(const ColoredLattice& L, ShapeOp op) {
    int N = L.num_colors;
    std::vector<int> flip(N + 1);
    for (int i = 1; i <= N; ++i) flip[i] = N + 1 - i;
    auto reverse = [](const ColoredLattice& A) {
        ColoredLattice R;
        R.num_colors = A.num_colors;
        R.payload = A.payload;
        R.edges = A.edges;
        for (auto& E : R.edges) std::swap(E.src, E.dst);
        R.finalize();
        return R;
    };
    switch (op) {
        case ShapeOp::Eps: {
            ColoredLattice R = L;
            R.weight.clear();
            R.finalize();
            return R;
        }
        case ShapeOp::Sigma0: return recolor(L, flip);
        case ShapeOp::Star: return reverse(L);
        case ShapeOp::Bowtie: return reverse(recolor(L, flip));
    }
    return L;
}

const char* iso_name(IsoResult r) {
    switch (r) {
        case IsoResult::Isomorphic: return "isomorphic";
        case IsoResult::NotIsomorphic: return "not-isomorphic";
        case IsoResult::Unknown: return "unknown";
    }
    return "?";
}

namespace {

std::vector<long long> signature(const ColoredLattice& L, int v) {
    std::vector<long long> s{L.rank[v]};
    for (int c = 1; c <= L.num_colors; ++c) {
        int in = 0, out = 0;
        for (int e : L.in_edges[v]) in += L.edges[e].color == c;
        for (int e : L.out_edges[v]) out += L.edges[e].color == c;
        s.push_back(in);
        s.push_back(out);
    }
    return s;
}

}  // namespace

IsoResult check_iso(const ColoredLattice& A, const ColoredLattice& B, long long node_budget, std::vector<int>* mapping) {
    if (A.size() != B.size() || A.edges.size() != B.edges.size() || A.num_colors != B.num_colors)
        return IsoResult::NotIsomorphic;
    int n = A.size();
    if (n == 0) return IsoResult::Isomorphic;
    std::vector<std::vector<long long>> sa(n), sb(n);
    for (int v = 0; v < n; ++v) sa[v] = signature(A, v), sb[v] = signature(B, v);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return IsoResult::NotIsomorphic;
    }
    if (sa[A.bottom] != sb[B.bottom]) return IsoResult::NotIsomorphic;

    // BFS order from the bottom; each later vertex hangs off an earlier parent edge
    std::vector<int> order{A.bottom}, parent_edge(n, -1);
    std::vector<char> seen(n, 0);
    seen[A.bottom] = 1;
    for (size_t k = 0; k < order.size(); ++k) {
        int v = order[k];
        for (int e : A.out_edges[v]) {
            int w = A.edges[e].dst;
            if (!seen[w]) {
                seen[w] = 1;
                parent_edge[w] = e;
                order.push_back(w);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) return IsoResult::NotIsomorphic;

    std::vector<int> f(n, -1), finv(n, -1);
    long long nodes = 0;
    bool out_of_budget = false;
    auto consistent = [&](int v, int w) {
        for (int e : A.out_edges[v]) {
            int x = f[A.edges[e].dst];
            if (x < 0) continue;
            int be = B.edge_between(w, x);
            if (be < 0 || B.edges[be].color != A.edges[e].color) return false;
        }
        for (int e : A.in_edges[v]) {
            int x = f[A.edges[e].src];
            if (x < 0) continue;
            int be = B.edge_between(x, w);
            if (be < 0 || B.edges[be].color != A.edges[e].color) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, size_t k) -> bool {
        if (k == order.size()) return true;
        if (++nodes > node_budget) {
            out_of_budget = true;
            return false;
        }
        int v = order[k];
        const Edge& pe = A.edges[parent_edge[v]];
        int pw = f[pe.src];
        for (int be : B.out_edges[pw]) {
            if (B.edges[be].color != pe.color) continue;
            int w = B.edges[be].dst;
            if (finv[w] >= 0 || sb[w] != sa[v] || !consistent(v, w)) continue;
            f[v] = w;
            finv[w] = v;
            if (self(self, k + 1)) return true;
            f[v] = -1;
            finv[w] = -1;
            if (out_of_budget) return false;
        }
        return false;
    };
    f[A.bottom] = B.bottom;
    finv[B.bottom] = A.bottom;
    bool ok = rec(rec, 1);
    if (out_of_budget) return IsoResult::Unknown;
    if (ok && mapping) *mapping = f;
    return ok ? IsoResult::Isomorphic : IsoResult::NotIsomorphic;
}

}  // namespace skewtab
