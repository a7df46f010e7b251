#include "skewtab/shapes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "skewtab/errors.hpp"

namespace skewtab {

const char* op_name(ShapeOp op) {
    switch (op) {
        case ShapeOp::Eps: return "eps";
        case ShapeOp::Sigma0: return "sigma0";
        case ShapeOp::Star: return "star";
        case ShapeOp::Bowtie: return "bowtie";
    }
    return "?";
}

ShapeOp parse_op(const std::string& s) {
    if (s == "eps" || s == "e") return ShapeOp::Eps;
    if (s == "sigma0" || s == "s0") return ShapeOp::Sigma0;
    if (s == "star" || s == "*") return ShapeOp::Star;
    if (s == "bowtie" || s == "bt") return ShapeOp::Bowtie;
    throw ParseError("unknown shape operation: " + s);
}

int SkewShape::size() const {
    int c = 0;
    for (int r = 0; r < m(); ++r) c += P[r] - Q[r];
    return c;
}

std::string SkewShape::str() const {
    std::ostringstream os;
    for (int r = 0; r < m(); ++r) os << (r ? "," : "") << P[r];
    os << "/";
    for (int r = 0; r < m(); ++r) os << (r ? "," : "") << Q[r];
    os << ";" << n;
    return os.str();
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

std::vector<int> column_heights(const SkewShape& s) {
    int w = s.m() ? s.P[0] : 0;
    std::vector<int> h(w, 0);
    for (int r = 0; r < s.m(); ++r)
        for (int c = s.Q[r]; c < s.P[r]; ++c) ++h[c];
    return h;
}

bool is_skew_compatible(const Partition& P, const Partition& Q, int n) {
    size_t len = std::max(P.size(), Q.size());
    Partition p = P, q = Q;
    p.resize(len, 0);
    q.resize(len, 0);
    for (size_t r = 0; r < len; ++r)
        if (q[r] > p[r]) throw ConstraintError("Q is not contained in P");
    SkewShape s{p, q, n};
    auto h = column_heights(s);
    return std::all_of(h.begin(), h.end(), [&](int x) { return x <= n; });
}

SkewShape make_shape(Partition P, Partition Q, int n) {
    if (n < 2) throw ConstraintError("entry bound n must be at least 2");
    if (!is_partition(P) || !is_partition(Q)) throw ConstraintError("P and Q must be partitions");
    size_t len = std::max({P.size(), Q.size(), static_cast<size_t>(n)});
    P.resize(len, 0);
    Q.resize(len, 0);
    if (!is_skew_compatible(P, Q, n)) throw ConstraintError("shape has a column with more than n cells");
    return SkewShape{P, Q, n};
}

namespace {

Partition parse_parts(const std::string& text) {
    Partition out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad partition part '" + tok + "'");
        if (tok.size() > 6) throw ParseError("partition part too large");
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

SkewShape parse_shape(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("shape must look like P/Q;n");
    std::string lhs = text.substr(0, semi), ns = text.substr(semi + 1);
    if (ns.empty() || ns.size() > 4 || ns.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad entry bound '" + ns + "'");
    auto slash = lhs.find('/');
    std::string ps = slash == std::string::npos ? lhs : lhs.substr(0, slash);
    std::string qs = slash == std::string::npos ? "" : lhs.substr(slash + 1);
    if (ps.empty()) throw ParseError("empty P");
    return make_shape(parse_parts(ps), parse_parts(qs), std::stoi(ns));
}

std::vector<Cell> cells(const SkewShape& s) {
    std::vector<Cell> out;
    for (int r = 0; r < s.m(); ++r)
        for (int c = s.Q[r]; c < s.P[r]; ++c) out.push_back({r + 1, c + 1});
    return out;
}

std::vector<Partition> column_partitions(const SkewShape& s) {
    std::vector<Partition> out;
    for (int h : column_heights(s))
        if (h > 0) out.push_back(Partition(h, 1));
    return out;
}

SkewShape pad(const SkewShape& s, int k) {
    SkewShape r = s;
    r.P.resize(s.m() + k, 0);
    r.Q.resize(s.m() + k, 0);
    return r;
}

SkewShape shape_from_cells(const std::vector<Cell>& cs, int n) {
    if (cs.empty()) return make_shape({}, {}, n);
    std::map<int, std::pair<int, int>> rows;  // row -> [min col, max col]
    int cmin = cs.front().col;
    for (auto c : cs) {
        auto [it, fresh] = rows.emplace(c.row, std::make_pair(c.col, c.col));
        if (!fresh) {
            it->second.first = std::min(it->second.first, c.col);
            it->second.second = std::max(it->second.second, c.col);
        }
        cmin = std::min(cmin, c.col);
    }
    Partition P, Q;
    for (auto& [r, span] : rows) {
        P.push_back(span.second - cmin + 1);
        Q.push_back(span.first - cmin);
    }
    SkewShape out = make_shape(P, Q, n);
    auto back = cells(out);
    if (back.size() != cs.size()) throw InvariantError("cell set is not a skew shape");
    return out;
}

SkewShape normalize(const SkewShape& s) { return shape_from_cells(cells(s), s.n); }

SkewShape shape_op(const SkewShape& s, ShapeOp op) {
    switch (op) {
        case ShapeOp::Eps: return normalize(s);
        case ShapeOp::Sigma0: {
            // column c is rows q_c+1..p_c; fill it down to row q_c+n and drop the original cells.
            // an empty column between components gets n cells
            SkewShape t = normalize(s);
            std::vector<Cell> out;
            int w = t.m() ? t.P[0] : 0;
            for (int c = 1; c <= w; ++c) {
                int q = 0, p = 0;
                for (int r = 0; r < t.m(); ++r) {
                    q += t.Q[r] >= c;
                    p += t.P[r] >= c;
                }
                for (int r = p + 1; r <= q + t.n; ++r) out.push_back({r, c});
            }
            std::sort(out.begin(), out.end());
            return shape_from_cells(out, t.n);
        }
        case ShapeOp::Bowtie: {
            auto cs = cells(s);
            if (cs.empty()) return normalize(s);
            int R = 0, C = 0;
            for (auto c : cs) R = std::max(R, c.row), C = std::max(C, c.col);
            for (auto& c : cs) c = {R + 1 - c.row, C + 1 - c.col};
            std::sort(cs.begin(), cs.end());
            return shape_from_cells(cs, s.n);
        }
        case ShapeOp::Star: return shape_op(shape_op(s, ShapeOp::Sigma0), ShapeOp::Bowtie);
    }
    return s;
}

bool is_connected(const SkewShape& s) {
    int last = -1;
    for (int r = 0; r < s.m(); ++r) {
        if (s.P[r] == s.Q[r]) continue;
        if (last >= 0) {
            if (last != r - 1) return false;
            if (s.Q[last] >= s.P[r]) return false;
        }
        last = r;
    }
    return true;
}

namespace {

std::vector<SkewShape> enumerate_shapes(int max_cells, int n, bool connected) {
    std::vector<SkewShape> out;
    Partition P, Q;
    // rows are chosen top to bottom; the last row must start in column 1
    // consecutive rows overlap in some column when connected
    auto rec = [&](auto&& self, int used) -> void {
        if (!P.empty() && Q.back() == 0) {
            SkewShape s{P, Q, n};
            auto h = column_heights(s);
            if (std::all_of(h.begin(), h.end(), [&](int x) { return x <= n; }))
                out.push_back(make_shape(P, Q, n));
        }
        int pmax = P.empty() ? max_cells : P.back();
        for (int p = 1; p <= pmax; ++p) {
            int qmax = Q.empty() ? p - 1 : std::min(Q.back(), p - 1);
            for (int q = 0; q <= qmax; ++q) {
                if (connected && !P.empty() && Q.back() >= p) continue;
                int add = p - q;
                if (used + add > max_cells) continue;
                P.push_back(p);
                Q.push_back(q);
                self(self, used + add);
                P.pop_back();
                Q.pop_back();
            }
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const SkewShape& a, const SkewShape& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.P != b.P) return a.P < b.P;
        return a.Q < b.Q;
    });
    return out;
}

}  // namespace

std::vector<SkewShape> connected_shapes(int max_cells, int n) { return enumerate_shapes(max_cells, n, true); }

std::vector<SkewShape> normalized_shapes(int max_cells, int n) { return enumerate_shapes(max_cells, n, false); }

}  // namespace skewtab
