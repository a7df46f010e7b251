#include "skewtab/sweep.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "skewtab/errors.hpp"
#include "skewtab/repdiag.hpp"
#include "skewtab/schur.hpp"

namespace skewtab {

bool InstanceReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

template <class F>
void run(InstanceReport& rep, const std::string& name, F f) {
    CheckResult c{name, false, ""};
    try {
        c.pass = f(c.detail);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
}

bool w_invariant(const ColoredLattice& L, const RootData& rd) {
    auto p = wgf(L);
    for (int i = 1; i <= rd.rank; ++i)
        if (reflect(p, i, rd) != p) return false;
    return true;
}

}  // namespace

InstanceReport check_skew(const SkewShape& s, const SkewCheckOptions& opt) {
    InstanceReport rep;
    rep.instance = s.str();
    SkewLattice SL = build(s);
    const auto& L = SL.L;
    rep.vertices = L.size();
    RootData rd = root_data(Kind::A, s.n - 1);
    TaggedLattice TL = tag_skew(SL);

    run(rep, "structured", [&](std::string&) { return is_structured(L, rd); });
    run(rep, "diamond_colored", [&](std::string&) { return verify_diamond_colored(L); });
    run(rep, "distributive", [&](std::string&) { return verify_join_meet_closed(L); });
    run(rep, "rank_symmetric_unimodal", [&](std::string& d) {
        d = rgf(L).str();
        return is_rank_symmetric_unimodal(L);
    });
    run(rep, "w_invariant", [&](std::string&) { return w_invariant(L, rd); });
    run(rep, "theta_is_wgf", [&](std::string&) { return theta(s) == wgf(L); });
    run(rep, "chain_windows", [&](std::string&) {
        for (int k = 1; k <= s.n - 1; ++k)
            for (const auto& comp : components(L, {k}))
                for (int v : comp)
                    if (chain_window(SL.gt(v), k).size() != static_cast<long long>(comp.size())) return false;
        return true;
    });
    run(rep, "rank_pairing", [&](std::string&) {
        for (int v = 0; v < L.size(); ++v)
            if (rank_via_pairing(L, rd, v) != L.rank[v]) return false;
        return true;
    });
    run(rep, "positive_coefficients", [&](std::string&) {
        return std::all_of(TL.tags.begin(), TL.tags.end(), [](const EdgeTag& t) { return t.X > 0 && t.Y > 0; });
    });
    run(rep, "dc_relations", [&](std::string& d) {
        auto c = dc_verify(TL);
        d = c.violation;
        return c.ok;
    });
    run(rep, "padding_invariance", [&](std::string&) {
        SkewLattice P = build(pad(s, 1));
        if (P.L.size() != L.size() || P.L.edges.size() != L.edges.size()) return false;
        auto PT = tag_skew(P);
        for (size_t e = 0; e < L.edges.size(); ++e) {
            int pe = P.L.edge_between(L.edges[e].src, L.edges[e].dst);
            if (pe < 0 || !(PT.tags[pe] == TL.tags[e])) return false;
        }
        return true;
    });
    run(rep, "zs_rgf_three_ways", [&](std::string& d) {
        auto dec = zs_decompose(s, Weight(s.n - 1, 0));
        std::vector<Weight> lambdas;
        for (const auto& [w, k] : dec.constituents)
            for (int c = 0; c < k; ++c) lambdas.push_back(w);
        QPoly a = rgf(L);
        QPoly b = rgf_from_decomposition(rd, lambdas, L.weight[L.top]);
        QPoly c = rgf_via_zs(s);
        d = a.str();
        return a == b && b == c;
    });
    if (opt.extra_nus)
        run(rep, "chi_identity_nu", [&](std::string&) {
            Weight w1(s.n - 1, 0), rho(s.n - 1, 1);
            w1[0] = 1;
            zs_decompose(s, w1);
            zs_decompose(s, rho);
            return true;
        });
    if (opt.rtl)
        run(rep, "ballot_rtl_agrees", [&](std::string&) {
            Weight zero(s.n - 1, 0), w1(s.n - 1, 0);
            w1[0] = 1;
            for (const auto& T : enumerate_tableaux(s)) {
                auto x = to_parallelogram(T);
                if (is_nu_ballot(x, zero) != is_nu_ballot_rtl(T, zero)) return false;
                if (is_nu_ballot(x, w1) != is_nu_ballot_rtl(T, w1)) return false;
            }
            return true;
        });
    bool classical = std::all_of(s.Q.begin(), s.Q.end(), [](int q) { return q == 0; }) &&
                     static_cast<int>(std::count_if(s.P.begin(), s.P.end(), [](int p) { return p > 0; })) <= s.n;
    if (classical) {
        run(rep, "hersh_lenart_matches", [&](std::string& d) {
            int fb = 0;
            auto H = tag_hersh_lenart(SL, &fb);
            d = "fallbacks=" + std::to_string(fb);
            return fb == 0 && H.tags == TL.tags;
        });
        run(rep, "classical_product_matches", [&](std::string&) {
            auto C = tag_classical(SL);
            for (size_t e = 0; e < L.edges.size(); ++e)
                if (C.tags[e].X * C.tags[e].Y != TL.tags[e].X * TL.tags[e].Y) return false;
            return true;
        });
    }
    if (L.size() <= opt.lie_cap)
        run(rep, "lie_relations", [&](std::string& d) {
            auto r = verify_lie_relations(generator_matrices(TL), rd, opt.lie_cap);
            d = r.failure;
            return r.ok;
        });
    if (opt.dualities)
        run(rep, "dualities", [&](std::string& d) {
            for (auto op : {ShapeOp::Sigma0, ShapeOp::Star, ShapeOp::Bowtie}) {
                auto r = check_iso(build(shape_op(s, op)).L, lattice_op(L, op));
                if (r != IsoResult::Isomorphic) {
                    d = std::string(op_name(op)) + ": " + iso_name(r);
                    return false;
                }
            }
            return true;
        });
    if (opt.embedding)
        run(rep, "embedding", [&](std::string& d) {
            auto e = embed_phi(SL);
            d = "component=" + std::to_string(e.component_size);
            return e.ok();
        });
    return rep;
}

InstanceReport check_orth(const OrthSpec& spec, const OrthCheckOptions& opt) {
    InstanceReport rep;
    OrthLattice OL = build_orth(spec);
    rep.instance = OL.spec.str();
    const auto& L = OL.L;
    rep.vertices = L.size();
    std::vector<Rational> P;

    run(rep, "structured", [&](std::string&) { return is_structured(L, OL.rd); });
    run(rep, "diamond_colored", [&](std::string&) { return verify_diamond_colored(L); });
    run(rep, "distributive", [&](std::string&) { return verify_join_meet_closed(L); });
    run(rep, "w_invariant", [&](std::string&) { return w_invariant(L, OL.rd); });
    run(rep, "rgf_product_formula", [&](std::string& d) {
        d = rgf(L).str();
        return rgf_orth_check(OL);
    });
    run(rep, "positive_products", [&](std::string&) {
        P = edge_products(OL);
        return std::all_of(P.begin(), P.end(), [](const Rational& x) { return x > 0; });
    });
    run(rep, "dc_relations", [&](std::string& d) {
        auto c = dc_verify_products(L, P);
        d = c.violation;
        return c.ok;
    });
    run(rep, "route_agreement", [&](std::string& d) {
        auto r = compare_routes(OL);
        d = std::to_string(r.compared) + " compared";
        return r.mismatches == 0;
    });
    run(rep, "restriction", [&](std::string& d) {
        auto r = restriction_check(OL);
        d = r.failure;
        return r.ok;
    });
    if (OL.spec.kind == Kind::D)
        run(rep, "spin_recoloring", [&](std::string& d) {
            OrthSpec other = OL.spec;
            other.spin = OL.spec.spin == OL.spec.n ? OL.spec.n - 1 : OL.spec.n;
            auto O2 = build_orth(other);
            std::vector<int> sw(OL.spec.n + 1);
            for (int i = 0; i <= OL.spec.n; ++i) sw[i] = i;
            std::swap(sw[OL.spec.n - 1], sw[OL.spec.n]);
            auto r = check_iso(recolor(L, sw), O2.L);
            d = iso_name(r);
            return r == IsoResult::Isomorphic;
        });
    else if (OL.spec.n >= 3)
        run(rep, "d_recoloring", [&](std::string&) {
            // B_n is D_{n+1} with the two spin colors merged
            auto D = build_orth({Kind::D, OL.spec.n + 1, OL.spec.m, OL.spec.n});
            if (D.L.payload != L.payload || D.L.edges.size() != L.edges.size()) return false;
            for (size_t e = 0; e < L.edges.size(); ++e) {
                const auto &a = L.edges[e], &b = D.L.edges[e];
                int c = b.color > OL.spec.n ? OL.spec.n : b.color;
                if (a.src != b.src || a.dst != b.dst || a.color != c) return false;
            }
            return true;
        });
    if (opt.float_sanity)
        run(rep, "float_sanity", [&](std::string& d) {
            double r = float_sanity_residual(OL, P);
            d = "residual=" + std::to_string(r);
            return r < 1e-9;
        });
    return rep;
}

SweepSpec parse_sweep(const std::string& raw) {
    std::string text;
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw.compare(k, 3, "\xE2\x89\xA4") == 0) {
            text += "<=";
            k += 2;
        } else if (raw[k] != ' ') {
            text += raw[k];
        }
    }
    std::smatch m;
    static const std::regex skew(R"(cells<=(\d{1,2}),n<=(\d{1,2}))");
    static const std::regex orth(R"(([BD]):n<=(\d{1,2}),m<=(\d{1,2}))");
    SweepSpec s;
    if (std::regex_match(text, m, skew)) {
        s.max_cells = std::stoi(m[1]);
        s.max_n = std::stoi(m[2]);
        if (s.max_n < 2) throw ConstraintError("sweep needs n >= 2");
        return s;
    }
    if (std::regex_match(text, m, orth)) {
        s.orth = true;
        s.kind = m[1] == "B" ? Kind::B : Kind::D;
        s.max_n = std::stoi(m[2]);
        s.max_m = std::stoi(m[3]);
        return s;
    }
    throw ParseError("sweep spec must look like cells<=K,n<=N or B:n<=N,m<=M");
}

std::vector<SkewShape> sweep_shapes(const SweepSpec& s) {
    std::vector<SkewShape> out;
    for (int n = 2; n <= s.max_n; ++n) {
        auto v = connected_shapes(s.max_cells, n);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::vector<OrthSpec> sweep_orth(const SweepSpec& s) {
    std::vector<OrthSpec> out;
    if (s.kind == Kind::B) {
        for (int n = 2; n <= s.max_n; ++n)
            for (int m = 1; m <= s.max_m; ++m) out.push_back({Kind::B, n, m, n});
    } else {
        for (int n = 4; n <= s.max_n; ++n)
            for (int m = 1; m <= s.max_m; ++m)
                for (int spin : {n - 1, n}) out.push_back({Kind::D, n, m, spin});
    }
    return out;
}

}  // namespace skewtab
