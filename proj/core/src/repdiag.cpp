#include "skewtab/repdiag.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "skewtab/errors.hpp"

namespace skewtab {

EdgeTag coeffs_skew(const GTParallelogram& t, int i, int j) {
    const int m = t.m;
    if (i < 1 || i > t.n - 1 || !t.has(i, j)) throw ConstraintError("not an edge position");
    auto C = [&](int l) {
        std::vector<int> ks;
        for (int k = l - m + 1; k <= l; ++k) ks.push_back(k);
        return ks;
    };
    const long gij = t.at(i, j);
    Rational num = 1, den = 1;
    for (int k : C(i + 1)) num *= gij - t.at(i + 1, k) + j - k;
    for (int k : C(i))
        if (k != j) den *= gij - t.at(i, k) + j - k - 1;
    if (den == 0) throw InvariantError("zero denominator in X");
    EdgeTag r;
    r.X = -num / den;
    num = 1, den = 1;
    for (int k : C(i - 1)) num *= gij - t.at(i - 1, k) + j - k - 1;
    for (int k : C(i))
        if (k != j) den *= gij - t.at(i, k) + j - k;
    if (den == 0) throw InvariantError("zero denominator in Y");
    r.Y = num / den;
    r.X.canonicalize();
    r.Y.canonicalize();
    return r;
}

EdgeTag coeffs_classical(const GTParallelogram& t, int i, int j) {
    for (int r = 0; r < t.m; ++r)
        if (t.t(0, r) != 0) throw ConstraintError("classical coefficients need Q = 0");
    if (i < 1 || i > t.n - 1 || j < 1 || j > i) throw ConstraintError("not a triangle position");
    const long gij = t.at(i, j);
    Rational num = 1, den = 1;
    for (int k = 1; k <= i + 1; ++k) num *= gij - t.at(i + 1, k) + j - k;
    for (int k = 1; k <= i; ++k)
        if (k != j) den *= gij - t.at(i, k) + j - k - 1;
    if (den == 0) throw InvariantError("zero denominator in X");
    EdgeTag r;
    r.X = -num / den;
    num = 1, den = 1;
    for (int k = 1; k <= i - 1; ++k) num *= gij - t.at(i - 1, k) + j - k - 1;
    for (int k = 1; k <= i; ++k)
        if (k != j) den *= gij - t.at(i, k) + j - k;
    if (den == 0) throw InvariantError("zero denominator in Y");
    r.Y = num / den;
    r.X.canonicalize();
    r.Y.canonicalize();
    return r;
}

HLResult coeffs_hersh_lenart(const GTParallelogram& s, const GTParallelogram& t, int i, int j) {
    HLResult res;
    auto fallback = [&](const std::string& why) {
        res.tag = coeffs_skew(t, i, j);
        res.fallback = true;
        res.note = why;
        return res;
    };
    for (int r = 0; r < t.m; ++r)
        if (t.t(0, r) != 0) throw ConstraintError("Hersh-Lenart coefficients need Q = 0");
    if (i < 1 || i > t.n - 1 || j < 1 || j > i) throw ConstraintError("not a triangle position");
    // triangle entries; row 0 and column index <= 0 are inert zeros
    auto g = [](const GTParallelogram& y, int a, int b) -> long { return (a == 0 || b <= 0) ? 0 : y.at(a, b); };

    // X: significance read in s, columns q = i, i-1, ..., 0
    std::vector<int> qs;
    for (int q = i; q >= 0; --q)
        if (q == i || g(s, i, q) < g(s, i, q + 1)) qs.push_back(q);
    auto kit = std::find(qs.begin(), qs.end(), j);
    if (kit == qs.end()) return fallback("changed column not significant on the X side");
    size_t k = kit - qs.begin();
    std::vector<Rational> a, b;
    for (size_t l = 0; l < qs.size(); ++l) {
        int q = qs[l], r = i + 1 - q;
        if (l == k) {
            a.emplace_back(r + g(t, i, i) - g(t, i, j) + 1);
            b.emplace_back(g(t, i + 1, j + 1) - g(s, i, j));
        } else {
            a.emplace_back(r + g(t, i, i) - g(t, i, q));
            b.emplace_back(g(t, i + 1, q + 1) - g(t, i, q));
        }
    }
    Rational X = b[k];
    for (size_t l = 0; l < qs.size(); ++l) {
        if (l == k) continue;
        Rational d = l < k ? a[k] - a[l] : a[l] - a[k];
        if (d == 0) return fallback("pole on the X side");
        X *= l < k ? Rational(1 + b[l] / d) : Rational(1 - b[l] / d);
    }

    // Y: poles at q in {1..i} where t steps up from column q-1
    std::vector<int> qy;
    for (int q = i; q >= 1; --q)
        if (q == j || g(t, i, q - 1) < g(t, i, q)) qy.push_back(q);
    size_t k2 = std::find(qy.begin(), qy.end(), j) - qy.begin();
    std::vector<Rational> ap, bp;
    for (int q : qy) {
        ap.emplace_back((i + 2 - q) + g(t, i, i) - g(t, i, q));
        bp.emplace_back(g(t, i, q) - g(t, i - 1, q - 1));
    }
    Rational Y = bp[k2];
    for (size_t l = 0; l < qy.size(); ++l) {
        if (l == k2) continue;
        Rational d = l < k2 ? ap[k2] - ap[l] : ap[l] - ap[k2];
        if (d == 0) return fallback("pole on the Y side");
        Y *= l < k2 ? Rational(1 - bp[l] / d) : Rational(1 + bp[l] / d);
    }
    X.canonicalize();
    Y.canonicalize();
    res.tag = {X, Y};
    return res;
}

namespace {

template <class F>
TaggedLattice tag_with(const SkewLattice& SL, F f) {
    TaggedLattice TL{SL.L, {}};
    TL.tags.reserve(SL.L.edges.size());
    for (int e = 0; e < static_cast<int>(SL.L.edges.size()); ++e) {
        auto [i, j] = SL.edge_position(e);
        TL.tags.push_back(f(e, i, j));
    }
    return TL;
}

std::string rat(const Rational& r) { return r.get_str(); }

}  // namespace

TaggedLattice tag_skew(const SkewLattice& SL) {
    return tag_with(SL, [&](int e, int i, int j) { return coeffs_skew(SL.gt(SL.L.edges[e].dst), i, j); });
}

TaggedLattice tag_classical(const SkewLattice& SL) {
    return tag_with(SL, [&](int e, int i, int j) { return coeffs_classical(SL.gt(SL.L.edges[e].dst), i, j); });
}

TaggedLattice tag_hersh_lenart(const SkewLattice& SL, int* fallbacks) {
    if (fallbacks) *fallbacks = 0;
    return tag_with(SL, [&](int e, int i, int j) {
        auto r = coeffs_hersh_lenart(SL.gt(SL.L.edges[e].src), SL.gt(SL.L.edges[e].dst), i, j);
        if (r.fallback && fallbacks) ++*fallbacks;
        return r.tag;
    });
}

Certificate dc_verify(const TaggedLattice& TL) {
    const auto& L = TL.L;
    if (TL.tags.size() != L.edges.size()) throw ConstraintError("untagged edge");
    Certificate c;
    for (const auto& d : diamonds(L)) {
        ++c.checked_diamonds;
        const auto &rs = TL.tags[d.rs], &rt = TL.tags[d.rt], &su = TL.tags[d.su], &tu = TL.tags[d.tu];
        if (su.X * tu.Y != rs.Y * rt.X || tu.X * su.Y != rt.Y * rs.X) {
            std::ostringstream os;
            os << "diamond relation fails at r=" << d.r << " s=" << d.s << " t=" << d.t << " u=" << d.u;
            c.ok = false;
            c.violation = os.str();
            return c;
        }
    }
    for (int v = 0; v < L.size(); ++v)
        for (int col = 1; col <= L.num_colors; ++col) {
            ++c.checked_crossings;
            Rational s = 0;
            for (int e : L.in_edges[v])
                if (L.edges[e].color == col) s += TL.tags[e].X * TL.tags[e].Y;
            for (int e : L.out_edges[v])
                if (L.edges[e].color == col) s -= TL.tags[e].X * TL.tags[e].Y;
            if (s != L.m[v][col - 1]) {
                std::ostringstream os;
                os << "crossing relation fails at vertex " << v << " color " << col << ": " << rat(s)
                   << " != " << L.m[v][col - 1];
                c.ok = false;
                c.violation = os.str();
                return c;
            }
        }
    return c;
}

Certificate dc_verify_products(const ColoredLattice& L, const std::vector<Rational>& P) {
    if (P.size() != L.edges.size()) throw ConstraintError("edge without product");
    Certificate c;
    for (const auto& d : diamonds(L)) {
        ++c.checked_diamonds;
        if (P[d.su] * P[d.tu] != P[d.rs] * P[d.rt]) {
            std::ostringstream os;
            os << "product diamond relation fails at r=" << d.r << " s=" << d.s << " t=" << d.t << " u=" << d.u;
            c.ok = false;
            c.violation = os.str();
            return c;
        }
    }
    for (int v = 0; v < L.size(); ++v)
        for (int col = 1; col <= L.num_colors; ++col) {
            ++c.checked_crossings;
            Rational s = 0;
            for (int e : L.in_edges[v])
                if (L.edges[e].color == col) s += P[e];
            for (int e : L.out_edges[v])
                if (L.edges[e].color == col) s -= P[e];
            if (s != L.m[v][col - 1]) {
                std::ostringstream os;
                os << "crossing relation fails at vertex " << v << " color " << col << ": " << rat(s)
                   << " != " << L.m[v][col - 1];
                c.ok = false;
                c.violation = os.str();
                return c;
            }
        }
    return c;
}

// ---------------------------------------------------------------- matrices

void SparseMatrix::set(int r, int c, const Rational& v) {
    if (v == 0) rows_[r].erase(c);
    else rows_[r][c] = v;
}

Rational SparseMatrix::get(int r, int c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    SparseMatrix out(n_);
    for (int r = 0; r < n_; ++r) {
        auto& dst = out.rows_[r];
        for (const auto& [k, a] : rows_[r])
            for (const auto& [c, b] : o.rows_[k]) dst[c] += a * b;
        for (auto it = dst.begin(); it != dst.end();) it = it->second == 0 ? dst.erase(it) : std::next(it);
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    SparseMatrix out = *this;
    for (int r = 0; r < n_; ++r)
        for (const auto& [c, v] : o.rows_[r]) out.set(r, c, out.get(r, c) + v);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const { return *this + o.scaled(-1); }

SparseMatrix SparseMatrix::scaled(const Rational& k) const {
    SparseMatrix out(n_);
    if (k == 0) return out;
    for (int r = 0; r < n_; ++r)
        for (const auto& [c, v] : rows_[r]) out.rows_[r][c] = v * k;
    return out;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

std::pair<int, int> SparseMatrix::witness() const {
    for (int r = 0; r < n_; ++r)
        if (!rows_[r].empty()) return {r, rows_[r].begin()->first};
    return {-1, -1};
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

GeneratorMatrices generator_matrices(const TaggedLattice& TL) {
    const auto& L = TL.L;
    int N = L.size();
    GeneratorMatrices G;
    for (int c = 0; c < L.num_colors; ++c) {
        G.X.emplace_back(N);
        G.Y.emplace_back(N);
        G.H.emplace_back(N);
        for (int v = 0; v < N; ++v) G.H[c].set(v, v, L.m[v][c]);
    }
    for (size_t e = 0; e < L.edges.size(); ++e) {
        const auto& E = L.edges[e];
        G.X[E.color - 1].set(E.dst, E.src, TL.tags[e].X);
        G.Y[E.color - 1].set(E.src, E.dst, TL.tags[e].Y);
    }
    return G;
}

LieReport verify_lie_relations(const GeneratorMatrices& G, const RootData& rd, int vertex_cap) {
    LieReport rep;
    int r = static_cast<int>(G.X.size());
    if (r != rd.rank) throw ConstraintError("generator count does not match the root data");
    if (r && G.X[0].dim() > vertex_cap) {
        rep.ok = false;
        rep.failure = "lattice exceeds the vertex cap for matrix relations";
        return rep;
    }
    auto fail = [&](const std::string& what, int i, int j, const SparseMatrix& res) {
        auto [a, b] = res.witness();
        std::ostringstream os;
        os << what << " fails for (i,j)=(" << i + 1 << "," << j + 1 << ") at entry (" << a << "," << b
           << ") = " << res.get(a, b).get_str();
        rep.ok = false;
        rep.failure = os.str();
    };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            SparseMatrix res = commutator(G.H[i], G.H[j]);
            ++rep.relations_checked;
            if (!res.is_zero()) return fail("[H_i,H_j]=0", i, j, res), rep;
            res = commutator(G.X[i], G.Y[j]);
            if (i == j) res = res - G.H[i];
            ++rep.relations_checked;
            if (!res.is_zero()) return fail("[X_i,Y_j]=d_ij H_i", i, j, res), rep;
            res = commutator(G.H[i], G.X[j]) - G.X[j].scaled(rd.cartan[j][i]);
            ++rep.relations_checked;
            if (!res.is_zero()) return fail("[H_i,X_j]=a_ji X_j", i, j, res), rep;
            res = commutator(G.H[i], G.Y[j]) + G.Y[j].scaled(rd.cartan[j][i]);
            ++rep.relations_checked;
            if (!res.is_zero()) return fail("[H_i,Y_j]=-a_ji Y_j", i, j, res), rep;
            if (i == j) continue;
            int pw = 1 - rd.cartan[j][i];
            SparseMatrix ax = G.X[j], ay = G.Y[j];
            for (int k = 0; k < pw; ++k) {
                ax = commutator(G.X[i], ax);
                ay = commutator(G.Y[i], ay);
            }
            ++rep.relations_checked;
            if (!ax.is_zero()) return fail("Serre relation for X", i, j, ax), rep;
            ++rep.relations_checked;
            if (!ay.is_zero()) return fail("Serre relation for Y", i, j, ay), rep;
        }
    return rep;
}

namespace {

// incremental row echelon basis over Q, dense vectors
struct EchelonBasis {
    int n;
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivots;
    explicit EchelonBasis(int dim) : n(dim) {}
    bool reduce(std::vector<Rational>& v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            int p = pivots[k];
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (int c = 0; c < n; ++c)
                if (rows[k][c] != 0) v[c] -= f * rows[k][c];
        }
        return std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    }
    bool add(std::vector<Rational> v) {
        if (!reduce(v)) return false;
        int p = 0;
        while (v[p] == 0) ++p;
        Rational f = v[p];
        for (auto& x : v) x /= f;
        for (auto& row : rows)
            if (row[p] != 0) {
                Rational g = row[p];
                for (int c = 0; c < n; ++c) row[c] -= g * v[c];
            }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

// nullspace of a dense matrix (rows x cols)
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> A, int cols) {
    std::vector<int> pivcol;
    int row = 0;
    for (int c = 0; c < cols && row < static_cast<int>(A.size()); ++c) {
        int sel = -1;
        for (int r = row; r < static_cast<int>(A.size()); ++r)
            if (A[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(A[row], A[sel]);
        Rational f = A[row][c];
        for (auto& x : A[row]) x /= f;
        for (int r = 0; r < static_cast<int>(A.size()); ++r)
            if (r != row && A[r][c] != 0) {
                Rational g = A[r][c];
                for (int k = 0; k < cols; ++k) A[r][k] -= g * A[row][k];
            }
        pivcol.push_back(c);
        ++row;
    }
    std::vector<char> is_piv(cols, 0);
    for (int c : pivcol) is_piv[c] = 1;
    std::vector<std::vector<Rational>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(cols, 0);
        v[f] = 1;
        for (size_t k = 0; k < pivcol.size(); ++k) v[pivcol[k]] = -A[k][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Rational> apply_matrix(const SparseMatrix& M, const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size(), 0);
    for (int r = 0; r < M.dim(); ++r)
        for (const auto& [c, x] : M.row(r))
            if (v[c] != 0) out[r] += x * v[c];
    return out;
}

}  // namespace

std::vector<HighestWeightBlock> highest_weight_blocks(const TaggedLattice& TL, const GeneratorMatrices& G) {
    const auto& L = TL.L;
    int N = L.size();
    std::map<Weight, std::vector<int>> spaces;
    for (int v = 0; v < N; ++v) spaces[L.weight[v]].push_back(v);
    std::vector<HighestWeightBlock> out;
    for (const auto& [mu, basis] : spaces) {
        int d = static_cast<int>(basis.size());
        std::vector<std::vector<Rational>> A;
        for (const auto& X : G.X) {
            std::map<int, std::vector<Rational>> rows;
            for (int c = 0; c < d; ++c)
                for (int r = 0; r < N; ++r) {
                    Rational x = X.get(r, basis[c]);
                    if (x == 0) continue;
                    auto& row = rows[r];
                    if (row.empty()) row.assign(d, 0);
                    row[c] = x;
                }
            for (auto& [r, row] : rows) A.push_back(std::move(row));
        }
        for (const auto& kv : nullspace(A, d)) {
            std::vector<Rational> v(N, 0);
            for (int c = 0; c < d; ++c) v[basis[c]] = kv[c];
            EchelonBasis span(N);
            std::deque<std::vector<Rational>> todo{v};
            span.add(v);
            while (!todo.empty()) {
                auto w = std::move(todo.front());
                todo.pop_front();
                for (const auto& Y : G.Y) {
                    auto z = apply_matrix(Y, w);
                    if (span.add(z)) todo.push_back(std::move(z));
                }
            }
            out.push_back({mu, static_cast<int>(span.rows.size())});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.dim != b.dim ? a.dim > b.dim : a.highest > b.highest;
    });
    return out;
}

// ---------------------------------------------------------------- embedding

std::vector<int> phi(const SkewShape& s, const std::vector<int>& g) {
    const int m = s.m(), n = s.n, M = m + n;
    std::vector<int> out((M + 1) * M, 0);
    for (int k = 0; k <= M; ++k)
        for (int r = 0; r < M; ++r) {
            int l = k - r;
            int v;
            if (k < m) {
                int idx = m + 1 - l;  // Q_{m+1-l}
                v = (idx >= 1 && idx <= m) ? s.Q[idx - 1] : 0;
            } else if (l <= k - m) {
                v = 0;
            } else {
                int i = k - m, j = l - m;
                v = g[i * m + (i - j)];
            }
            out[k * M + r] = v;
        }
    return out;
}

EmbeddingReport embed_phi(const SkewLattice& SL, long long max_component) {
    const auto& s = SL.shape;
    const auto& L = SL.L;
    const int m = s.m(), n = s.n, M = m + n;
    EmbeddingReport rep;
    Partition Pp = s.P;
    Pp.resize(M, 0);
    rep.target = make_shape(Pp, {}, M);
    for (int v = 0; v < L.size(); ++v) rep.image.push_back(phi(s, L.payload[v]));

    std::unordered_set<std::vector<int>, VecHash> img(rep.image.begin(), rep.image.end());
    rep.injective = static_cast<int>(img.size()) == L.size();
    bool valid = std::all_of(rep.image.begin(), rep.image.end(), [&](const auto& g) {
        return is_valid_parallelogram(GTParallelogram{M, M, g}, rep.target);
    });

    // implicit BFS for comp_J(phi(max)), J = {m+1, ..., m+n-1}
    std::unordered_set<std::vector<int>, VecHash> compset;
    std::deque<std::vector<int>> todo;
    compset.insert(rep.image[L.top]);
    todo.push_back(rep.image[L.top]);
    long long comp_edges = 0;
    bool overflow = false;
    while (!todo.empty() && !overflow) {
        auto x = todo.front();
        todo.pop_front();
        for (int k = m + 1; k <= m + n - 1; ++k)
            for (int r = 0; r < M; ++r)
                for (int d : {+1, -1}) {
                    auto y = x;
                    y[k * M + r] += d;
                    if (!is_valid_parallelogram(GTParallelogram{M, M, y}, rep.target)) continue;
                    if (d == +1) ++comp_edges;
                    if (compset.insert(y).second) {
                        todo.push_back(y);
                        if (static_cast<long long>(compset.size()) > max_component) overflow = true;
                    }
                }
    }
    rep.component_size = static_cast<long long>(compset.size());
    rep.onto_component = valid && !overflow && rep.injective && compset == img;

    rep.edges_preserved = rep.onto_component && comp_edges == static_cast<long long>(L.edges.size());
    rep.coefficients_equal = true;
    for (size_t e = 0; e < L.edges.size() && rep.edges_preserved; ++e) {
        const auto& E = L.edges[e];
        auto [i, j] = SL.edge_position(static_cast<int>(e));
        const auto &a = rep.image[E.src], &b = rep.image[E.dst];
        int diff = 0, where = -1;
        for (size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) ++diff, where = static_cast<int>(k);
        int ii = where / M, rr = where % M;
        if (diff != 1 || b[where] != a[where] + 1 || ii != i + m || ii - rr != j + m) {
            rep.edges_preserved = false;
            break;
        }
        EdgeTag src = coeffs_skew(SL.gt(E.dst), i, j);
        EdgeTag dst = coeffs_skew(GTParallelogram{M, M, b}, i + m, j + m);
        if (!(src == dst)) rep.coefficients_equal = false;
    }
    if (!rep.edges_preserved) rep.coefficients_equal = false;

    rep.weights_preserved = valid;
    for (int v = 0; v < L.size() && rep.weights_preserved; ++v) {
        Weight w = wt(GTParallelogram{M, M, rep.image[v]});
        for (int i = 1; i <= n - 1; ++i)
            if (w[i + m - 1] != L.m[v][i - 1]) rep.weights_preserved = false;
    }
    return rep;
}

}  // namespace skewtab
