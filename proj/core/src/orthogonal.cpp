#include "skewtab/orthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

#include "skewtab/errors.hpp"
#include "skewtab/schur.hpp"

namespace skewtab {

std::string OrthSpec::str() const {
    std::ostringstream os;
    os << kind_char(kind) << ":" << n << "," << m;
    if (kind == Kind::D) os << "," << spin;
    return os.str();
}

bool looks_like_orth(const std::string& text) {
    return text.size() > 2 && (text[0] == 'B' || text[0] == 'D') && text[1] == ':';
}

OrthSpec parse_orth(const std::string& text) {
    if (!looks_like_orth(text)) throw ParseError("orthogonal spec must look like B:n,m or D:n,m[,spin]");
    std::vector<int> nums;
    std::stringstream ss(text.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.size() > 4 || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad number '" + tok + "' in " + text);
        nums.push_back(std::stoi(tok));
    }
    OrthSpec s;
    s.kind = text[0] == 'B' ? Kind::B : Kind::D;
    if (nums.size() < 2 || nums.size() > 3 || (s.kind == Kind::B && nums.size() != 2))
        throw ParseError("wrong number of fields in " + text);
    s.n = nums[0];
    s.m = nums[1];
    s.spin = nums.size() == 3 ? nums[2] : (s.kind == Kind::B ? s.n : s.n - 1);
    return s;
}

std::pair<int, int> OrthLattice::slot(int k) const {
    int T = (N - 2) * (N - 1) / 2;
    if (k >= T) return {N - 1, k - T + 1};
    int p = 1;
    while (tri_index(p + 1, 1) <= k) ++p;
    return {p, k - tri_index(p, 1) + 1};
}

std::vector<std::vector<int>> OrthLattice::array_rows(int v) const {
    std::vector<std::vector<int>> rows;
    for (int p = 1; p <= N - 2; ++p) {
        rows.emplace_back();
        for (int q = 1; q <= p; ++q) rows.back().push_back(c(v, p, q));
    }
    if (spec.kind == Kind::B) {
        rows.emplace_back();
        for (int q = 1; q <= N - 1; ++q) rows.back().push_back(hhat(v, q));
    } else {
        std::vector<int> odd, even;
        for (int q = 1; q <= N - 1; ++q) (q % 2 ? odd : even).push_back(hhat(v, q));
        rows.push_back(odd);
        rows.push_back(even);
    }
    return rows;
}

namespace {

int slot_color(const OrthLattice& OL, int k) {
    auto [p, q] = OL.slot(k);
    if (p <= OL.N - 2) return p;
    if (OL.spec.kind == Kind::B) return OL.spec.n;
    int odd = OL.spec.spin == OL.N - 1 ? OL.N - 1 : OL.N;
    int even = OL.spec.spin == OL.N - 1 ? OL.N : OL.N - 1;
    return q % 2 ? odd : even;
}

}  // namespace

OrthLattice build_orth(const OrthSpec& spec) {
    OrthLattice OL;
    OL.spec = spec;
    if (spec.m < 0) throw ConstraintError("m must be nonnegative");
    if (spec.kind == Kind::B) {
        if (spec.n < 2) throw ConstraintError("B_n needs n >= 2");
        OL.spec.spin = spec.n;
        OL.N = spec.n + 1;
    } else {
        if (spec.n < 4) throw ConstraintError("D_n needs n >= 4");
        if (spec.spin != spec.n - 1 && spec.spin != spec.n) throw ConstraintError("D spin must be n-1 or n");
        OL.N = spec.n;
    }
    OL.rd = root_data(spec.kind, spec.n);
    const int N = OL.N, m = spec.m;
    const int len = (N - 2) * (N - 1) / 2 + (N - 1);

    std::vector<std::vector<int>> payloads;
    std::vector<int> cur(len, 0);
    // triangle row p interlaces row p+1: c_{p+1,q} <= c_{p,q} <= c_{p+1,q+1}
    auto row_value = [&](int p, int q) { return p == N - 1 ? cur[OL.hhat_index(q)] : cur[OL.tri_index(p, q)]; };
    auto fill = [&](auto&& self, int p, int q) -> void {
        if (p == 0) {
            payloads.push_back(cur);
            return;
        }
        if (q > p) return self(self, p - 1, 1);
        int lo = row_value(p + 1, q), hi = row_value(p + 1, q + 1);
        for (int v = lo; v <= hi; ++v) {
            cur[OL.tri_index(p, q)] = v;
            self(self, p, q + 1);
        }
    };
    auto hrec = [&](auto&& self, int q, int lo) -> void {
        if (q == N) {
            fill(fill, N - 2, 1);
            return;
        }
        for (int v = lo; v <= m; ++v) {
            cur[OL.hhat_index(q)] = v;
            self(self, q + 1, v);
        }
    };
    hrec(hrec, 1, 0);
    std::sort(payloads.begin(), payloads.end());

    int colors = spec.n;
    OL.L = lattice_from_payloads(std::move(payloads), colors, [&](int k) { return slot_color(OL, k); });
    std::vector<int> top(len, 0);
    for (const auto& p : OL.L.payload)
        for (int k = 0; k < len; ++k) top[k] = std::max(top[k], p[k]);
    Weight hw(colors, 0);
    hw[OL.spec.spin - 1] = m;
    for (const auto& p : OL.L.payload) {
        Weight w = hw;
        for (int k = 0; k < len; ++k) {
            int d = top[k] - p[k], c = slot_color(OL, k);
            for (int j = 0; j < colors; ++j) w[j] -= d * OL.rd.cartan[c - 1][j];
        }
        OL.L.weight.push_back(w);
    }
    OL.L.finalize();
    return OL;
}

std::vector<int> orth_frame(const OrthLattice& OL, int v, bool prime) {
    const int N = OL.N;
    std::vector<int> g(N + 1, 0);  // 1-based
    if (!prime) {
        g[1] = 0;
        for (int q = 2; q < N; ++q) g[q] = OL.hhat(v, 2 * (q / 2));
        g[N] = N % 2 == 0 ? OL.spec.m : OL.hhat(v, N - 1);
    } else {
        g[1] = OL.hhat(v, 1);
        for (int k = 2; k < N; ++k) g[k] = OL.hhat(v, 2 * ((k + 1) / 2) - 1);
        g[N] = N % 2 == 0 ? OL.hhat(v, N - 1) : OL.spec.m;
    }
    return g;
}

GTParallelogram orth_triangle(const OrthLattice& OL, int v, bool prime) {
    const int N = OL.N;
    GTParallelogram x{N, N, std::vector<int>((N + 1) * N, 0)};
    auto frame = orth_frame(OL, v, prime);
    auto g = [&](int i, int j) {
        if (i == N) return frame[j];
        if (i == N - 1) return OL.hhat(v, j);
        return OL.c(v, i, j);
    };
    for (int i = 1; i <= N; ++i)
        for (int r = 0; r < i; ++r) x.t(i, r) = g(i, i - r);
    return x;
}

std::pair<int, int> orth_edge_position(const OrthLattice& OL, int e) { return OL.slot(OL.L.edges[e].pos); }

bool route_available(const OrthLattice& OL, int e, bool prime) {
    auto [p, q] = orth_edge_position(OL, e);
    if (p <= OL.N - 2) return true;
    return prime ? q % 2 == 0 : q % 2 == 1;
}

Rational orth_edge_product(const OrthLattice& OL, int e, bool prime) {
    if (!route_available(OL, e, prime)) throw ConstraintError("edge not inside the requested GT component");
    auto [i, j] = orth_edge_position(OL, e);
    auto t = orth_triangle(OL, OL.L.edges[e].dst, prime);
    auto s = orth_triangle(OL, OL.L.edges[e].src, prime);
    ++s.t(i, i - j);
    if (s.g != t.g) throw InvariantError("edge is not a unit step of the identified GT triangle");
    auto tag = coeffs_skew(t, i, j);
    Rational P = tag.X * tag.Y;
    if (P <= 0) throw InvariantError("non-positive edge product");
    return P;
}

std::vector<Rational> edge_products(const OrthLattice& OL) {
    std::vector<Rational> P;
    P.reserve(OL.L.edges.size());
    for (int e = 0; e < static_cast<int>(OL.L.edges.size()); ++e) {
        bool prime = !route_available(OL, e, false);
        P.push_back(orth_edge_product(OL, e, prime));
    }
    return P;
}

RouteAgreement compare_routes(const OrthLattice& OL) {
    RouteAgreement r;
    for (int e = 0; e < static_cast<int>(OL.L.edges.size()); ++e) {
        if (!route_available(OL, e, false) || !route_available(OL, e, true)) continue;
        ++r.compared;
        if (orth_edge_product(OL, e, false) != orth_edge_product(OL, e, true)) ++r.mismatches;
    }
    return r;
}

namespace {

// which payload slots move inside the identified GT lattice
bool slot_in_component(const OrthLattice& OL, int k, bool prime) {
    auto [p, q] = OL.slot(k);
    if (p <= OL.N - 2) return true;
    if (OL.spec.kind == Kind::B) return false;
    return prime ? q % 2 == 0 : q % 2 == 1;
}

}  // namespace

GTComponentReport gt_component(const OrthLattice& OL, int x, bool prime) {
    const auto& L = OL.L;
    const bool B = OL.spec.kind == Kind::B;
    const int size = B ? OL.N - 1 : OL.N;  // rows of the GT triangle
    GTComponentReport rep;

    std::vector<char> seen(L.size(), 0);
    std::vector<int> stack{x};
    seen[x] = 1;
    std::vector<int> comp_edges;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        rep.members.push_back(v);
        for (int e : L.out_edges[v]) {
            if (!slot_in_component(OL, L.edges[e].pos, prime)) continue;
            comp_edges.push_back(e);
            int w = L.edges[e].dst;
            if (!seen[w]) seen[w] = 1, stack.push_back(w);
        }
        for (int e : L.in_edges[v]) {
            if (!slot_in_component(OL, L.edges[e].pos, prime)) continue;
            int w = L.edges[e].src;
            if (!seen[w]) seen[w] = 1, stack.push_back(w);
        }
    }
    std::sort(rep.members.begin(), rep.members.end());

    // top row of the GT triangle, increasing in j
    std::vector<int> top(size + 1, 0);
    if (B) {
        for (int q = 1; q <= size; ++q) top[q] = OL.hhat(x, q);
    } else {
        top = orth_frame(OL, x, prime);
    }
    int shift = top[1];
    for (int q = size; q >= 1; --q) rep.frame.push_back(top[q] - shift);

    auto to_gt = [&](int v) {
        GTParallelogram y{size, size, std::vector<int>((size + 1) * size, 0)};
        auto g = [&](int i, int j) {
            if (i == size) return top[j];
            if (i == OL.N - 1) return OL.hhat(v, j);
            return OL.c(v, i, j);
        };
        for (int i = 1; i <= size; ++i)
            for (int r = 0; r < i; ++r) y.t(i, r) = g(i, i - r) - shift;
        return y;
    };

    auto GT = build_gt(rep.frame);
    rep.gt_size = GT.L.size();
    std::vector<int> image;
    std::unordered_set<int> hit;
    for (int v : rep.members) {
        int w = GT.L.find(to_gt(v).g);
        image.push_back(w);
        if (w >= 0) hit.insert(w);
    }
    rep.bijective = static_cast<long long>(hit.size()) == rep.gt_size &&
                    rep.members.size() == static_cast<size_t>(rep.gt_size);
    if (!rep.bijective) return rep;

    std::map<int, int> local;
    for (size_t k = 0; k < rep.members.size(); ++k) local[rep.members[k]] = image[k];
    rep.edges_match = comp_edges.size() == GT.L.edges.size();
    for (int e : comp_edges) {
        if (!rep.edges_match) break;
        int a = local.at(L.edges[e].src), b = local.at(L.edges[e].dst);
        int ge = GT.L.edge_between(a, b);
        int row = OL.slot(L.edges[e].pos).first;
        if (ge < 0 || GT.L.edges[ge].color != row) rep.edges_match = false;
    }
    return rep;
}

QPoly orth_product_formula(int n, int m) {
    std::vector<int> nums, dens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            nums.push_back(m + 2 * n + 2 - i - j);
            dens.push_back(2 * n + 2 - i - j);
        }
    return q_ratio(nums, dens);
}

bool rgf_orth_check(const OrthLattice& OL, QPoly* expected) {
    int formula_n = OL.spec.kind == Kind::B ? OL.spec.n : OL.N - 1;
    QPoly f = orth_product_formula(formula_n, OL.spec.m);
    if (expected) *expected = f;
    Weight hw(OL.rd.rank, 0);
    hw[OL.spec.spin - 1] = OL.spec.m;
    QPoly r = rgf(OL.L);
    auto pp = poly_props(r);
    return r == f && r == dynkin_poly(OL.rd, hw) && pp.symmetric && pp.unimodal;
}

RestrictionReport restriction_check(const OrthLattice& OL) {
    RestrictionReport rep;
    const auto& L = OL.L;
    const int r = OL.rd.rank;
    auto fail = [&](const std::string& s) {
        if (rep.ok) rep.failure = s;
        rep.ok = false;
    };
    auto prefix = [](int k) {
        std::vector<int> J;
        for (int c = 1; c <= k; ++c) J.push_back(c);
        return J;
    };
    auto comp_max = [&](const std::vector<int>& members) {
        int best = members.front();
        for (int v : members)
            if (L.rank[v] > L.rank[best]) best = v;
        return best;
    };

    // top-level prefix {1..r-1}
    {
        bool prime = OL.spec.kind == Kind::D && OL.spec.spin == OL.N;
        for (const auto& comp : components(L, prefix(r - 1))) {
            ++rep.components_checked;
            auto g = gt_component(OL, comp.front(), prime);
            if (!g.ok() || g.members != comp) fail("top-level component is not the identified GT lattice");
        }
    }
    // lower prefixes: row k+1 is pinned, so the component is L^GT of that row
    for (int k = 1; k <= r - 2; ++k)
        for (const auto& comp : components(L, prefix(k))) {
            ++rep.components_checked;
            int v = comp.front();
            Partition row;
            for (int q = k + 1; q >= 1; --q) row.push_back(OL.c(v, k + 1, q) - OL.c(v, k + 1, 1));
            long long expect = rgf_card_length_typeA(partition_to_weight(row, k + 1)).card;
            if (static_cast<long long>(comp.size()) != expect)
                fail("J_" + std::to_string(k) + " component size differs from the GT count");
        }
    // maxima of J_k components inside one J_{k+1} component carry distinct weights
    for (int k = 1; k <= r - 1; ++k) {
        ++rep.levels;
        auto outer = components(L, prefix(k + 1));
        std::vector<int> outer_id(L.size());
        for (size_t a = 0; a < outer.size(); ++a)
            for (int v : outer[a]) outer_id[v] = static_cast<int>(a);
        std::vector<std::map<Weight, int>> seen(outer.size());
        for (const auto& comp : components(L, prefix(k))) {
            int mx = comp_max(comp);
            auto& s = seen[outer_id[mx]];
            if (!s.emplace(L.weight[mx], mx).second)
                fail("weight collision among J_" + std::to_string(k) + " component maxima");
        }
    }
    return rep;
}

double float_sanity_residual(const OrthLattice& OL, const std::vector<Rational>& P) {
    const auto& L = OL.L;
    const int N = L.size(), R = L.num_colors;
    using Row = std::map<int, double>;
    using Mat = std::vector<Row>;
    std::vector<Mat> X(R, Mat(N)), Y(R, Mat(N));
    for (size_t e = 0; e < L.edges.size(); ++e) {
        const auto& E = L.edges[e];
        double s = std::sqrt(P[e].get_d());
        X[E.color - 1][E.dst][E.src] = s;
        Y[E.color - 1][E.src][E.dst] = s;
    }
    auto mul = [&](const Mat& a, const Mat& b) {
        Mat out(N);
        for (int r = 0; r < N; ++r)
            for (auto [k, x] : a[r])
                for (auto [c, y] : b[k]) out[r][c] += x * y;
        return out;
    };
    double worst = 0;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j) {
            Mat xy = mul(X[i], Y[j]), yx = mul(Y[j], X[i]);
            for (int r = 0; r < N; ++r) {
                Row diff = xy[r];
                for (auto [c, v] : yx[r]) diff[c] -= v;
                if (i == j) diff[r] -= L.m[r][i];
                for (auto [c, v] : diff) worst = std::max(worst, std::fabs(v));
            }
        }
    return worst;
}

}  // namespace skewtab
