#include "skewtab/tableaux.hpp"

#include <algorithm>
#include <map>

#include "skewtab/errors.hpp"

namespace skewtab {

namespace {

// index of cell (row, col) in cells(s), or -1
struct CellIndex {
    const SkewShape& s;
    std::vector<int> start;
    explicit CellIndex(const SkewShape& sh) : s(sh), start(sh.m() + 1, 0) {
        for (int r = 0; r < s.m(); ++r) start[r + 1] = start[r] + s.P[r] - s.Q[r];
    }
    int operator()(int row, int col) const {
        if (row < 1 || row > s.m()) return -1;
        if (col <= s.Q[row - 1] || col > s.P[row - 1]) return -1;
        return start[row - 1] + col - s.Q[row - 1] - 1;
    }
};

}  // namespace

std::vector<SkewTableau> enumerate_tableaux(const SkewShape& s) {
    auto cs = cells(s);
    CellIndex idx(s);
    // cells strictly below in the same column
    std::vector<int> below(cs.size(), 0), left(cs.size(), -1), up(cs.size(), -1);
    for (size_t k = 0; k < cs.size(); ++k) {
        auto [r, c] = cs[k];
        for (int rr = r + 1; idx(rr, c) >= 0; ++rr) ++below[k];
        left[k] = idx(r, c - 1);
        up[k] = idx(r - 1, c);
    }
    std::vector<SkewTableau> out;
    std::vector<int> e(cs.size(), 0);
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == cs.size()) {
            out.push_back({s, e});
            return;
        }
        int lo = 1;
        if (left[k] >= 0) lo = std::max(lo, e[left[k]]);
        if (up[k] >= 0) lo = std::max(lo, e[up[k]] + 1);
        for (int v = lo; v + below[k] <= s.n; ++v) {
            e[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool is_semistandard(const SkewTableau& T) {
    auto cs = cells(T.shape);
    if (cs.size() != T.entries.size()) return false;
    CellIndex idx(T.shape);
    for (size_t k = 0; k < cs.size(); ++k) {
        int v = T.entries[k];
        if (v < 1 || v > T.shape.n) return false;
        int l = idx(cs[k].row, cs[k].col - 1), u = idx(cs[k].row - 1, cs[k].col);
        if (l >= 0 && T.entries[l] > v) return false;
        if (u >= 0 && T.entries[u] >= v) return false;
    }
    return true;
}

GTParallelogram to_parallelogram(const SkewTableau& T) {
    const auto& s = T.shape;
    GTParallelogram x{s.n, s.m(), std::vector<int>((s.n + 1) * s.m(), 0)};
    auto cs = cells(s);
    for (int i = 0; i <= s.n; ++i)
        for (int r = 0; r < s.m(); ++r) x.t(i, r) = s.Q[r];
    for (size_t k = 0; k < cs.size(); ++k)
        for (int i = T.entries[k]; i <= s.n; ++i) ++x.t(i, cs[k].row - 1);
    return x;
}

bool is_valid_parallelogram(const GTParallelogram& x, const SkewShape& s) {
    if (x.n != s.n || x.m != s.m() || static_cast<int>(x.g.size()) != (s.n + 1) * s.m()) return false;
    for (int r = 0; r < s.m(); ++r)
        if (x.t(0, r) != s.Q[r] || x.t(s.n, r) != s.P[r]) return false;
    for (int i = 0; i <= s.n; ++i)
        for (int r = 0; r + 1 < s.m(); ++r)
            if (x.t(i, r) < x.t(i, r + 1)) return false;
    // t^(i)/t^(i-1) is a horizontal strip
    for (int i = 1; i <= s.n; ++i)
        for (int r = 0; r < s.m(); ++r) {
            if (x.t(i - 1, r) > x.t(i, r)) return false;
            if (r > 0 && x.t(i, r) > x.t(i - 1, r - 1)) return false;
        }
    return true;
}

SkewTableau to_tableau(const GTParallelogram& x, const SkewShape& s) {
    if (!is_valid_parallelogram(x, s)) throw InvariantError("malformed GT parallelogram");
    SkewTableau T{s, {}};
    for (auto [r, c] : cells(s)) {
        int i = 1;
        while (x.t(i, r - 1) < c) ++i;
        T.entries.push_back(i);
    }
    return T;
}

Weight wt_of_entries(const std::vector<int>& entries, int n) {
    std::vector<int> cnt(n + 2, 0);
    for (int v : entries) ++cnt.at(v);
    Weight w(n - 1);
    for (int i = 1; i < n; ++i) w[i - 1] = cnt[i] - cnt[i + 1];
    return w;
}

Weight wt(const SkewTableau& T) { return wt_of_entries(T.entries, T.shape.n); }

Weight wt(const GTParallelogram& x) {
    // #i = |t^(i)| - |t^(i-1)|
    std::vector<int> sz(x.n + 1, 0);
    for (int i = 0; i <= x.n; ++i)
        for (int r = 0; r < x.m; ++r) sz[i] += x.t(i, r);
    Weight w(x.n - 1);
    for (int i = 1; i < x.n; ++i) w[i - 1] = (sz[i] - sz[i - 1]) - (sz[i + 1] - sz[i]);
    return w;
}

long long ballot_d(const GTParallelogram& x, int k, int p) {
    if (k < 1 || k > x.n - 1 || p < 0 || p > x.m - 1) throw ConstraintError("ballot_d index out of range");
    long long d = 0;
    for (int q = 0; q < p; ++q) d += 2 * x.t(k, q) - x.t(k - 1, q) - x.t(k + 1, q);
    d += x.t(k, p) - x.t(k + 1, p);
    return d;
}

bool is_nu_ballot(const GTParallelogram& x, const Weight& nu) {
    if (!is_dominant(nu)) throw ConstraintError("nu must be dominant");
    for (int k = 1; k < x.n; ++k) {
        long long bound = -static_cast<long long>(nu.at(k - 1));
        for (int p = 0; p < x.m; ++p)
            if (ballot_d(x, k, p) < bound) return false;
    }
    return true;
}

bool is_ballot(const GTParallelogram& x) { return is_nu_ballot(x, Weight(x.n - 1, 0)); }

std::vector<std::vector<int>> rtl_subtableaux(const SkewTableau& T) {
    const auto& s = T.shape;
    CellIndex idx(s);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int r = 1; r <= s.m(); ++r)
        for (int c = s.P[r - 1]; c > s.Q[r - 1]; --c) {
            int v = T.entries[idx(r, c)];
            cur.push_back(v);
            bool string_continues = c - 1 > s.Q[r - 1] && T.entries[idx(r, c - 1)] == v;
            if (!string_continues) out.push_back(cur);
        }
    return out;
}

bool is_nu_ballot_rtl(const SkewTableau& T, const Weight& nu) {
    for (const auto& sub : rtl_subtableaux(T)) {
        Weight w = wt_of_entries(sub, T.shape.n);
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] + nu.at(i) < 0) return false;
    }
    return true;
}

}  // namespace skewtab
