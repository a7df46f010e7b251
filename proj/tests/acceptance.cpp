// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "skewtab/skewtab.hpp"

using namespace skewtab;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void fail(const std::string& why) {
        if (pass) note << "first failure: " << why << "; ";
        pass = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

std::vector<SkewShape> family(int cells, int max_n) {
    std::vector<SkewShape> out;
    for (int n = 2; n <= max_n; ++n) {
        auto v = connected_shapes(cells, n);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// disconnected shapes at a smaller bound; their lattices are products of the connected ones
std::vector<SkewShape> disconnected(int cells, int max_n) {
    std::vector<SkewShape> out;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& s : normalized_shapes(cells, n))
            if (!is_connected(s)) out.push_back(s);
    return out;
}

std::map<Partition, int> as_partitions(const SchurDecomposition& d) {
    std::map<Partition, int> out;
    for (const auto& [w, k] : d.constituents) {
        Partition p = weight_to_partition(w);
        while (!p.empty() && p.back() == 0) p.pop_back();
        out[p] += k;
    }
    return out;
}

bool w_invariant(const ColoredLattice& L, const RootData& rd) {
    auto p = wgf(L);
    for (int i = 1; i <= rd.rank; ++i)
        if (reflect(p, i, rd) != p) return false;
    return true;
}

bool padding_invariant(const SkewLattice& SL, const TaggedLattice& TL) {
    SkewLattice P = build(pad(SL.shape, 1));
    if (P.L.size() != SL.L.size()) return false;
    auto PT = tag_skew(P);
    for (size_t e = 0; e < SL.L.edges.size(); ++e) {
        int pe = P.L.edge_between(SL.L.edges[e].src, SL.L.edges[e].dst);
        if (pe < 0 || !(PT.tags[pe] == TL.tags[e])) return false;
    }
    return true;
}

Outcome criterion1() {
    Outcome o;
    std::vector<std::pair<std::string, int>> cases = {
        {"3,3/2,0;3", 15}, {"3,3,1/2,0,0;3", 21}, {"4,3,1/2,0,0;3", 55}, {"5,4,2/3,1,0;3", 144}};
    for (const auto& [text, want] : cases) {
        auto t0 = Clock::now();
        auto SL = build(parse_shape(text));
        double dt = since(t0);
        o.note << text << " -> " << SL.L.size() << " ";
        o.expect(SL.L.size() == want, text + " has " + std::to_string(SL.L.size()) + " elements");
        o.expect(dt < 1.0, text + " took " + std::to_string(dt) + "s");
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::vector<std::pair<std::string, std::vector<long long>>> cases = {
        {"4,3,1/2,0,0;3", {1, 4, 7, 10, 11, 10, 7, 4, 1}},
        {"5,4,2/3,1,0;3", {1, 5, 11, 18, 24, 26, 24, 18, 11, 5, 1}}};
    for (const auto& [text, coeffs] : cases) {
        auto s = parse_shape(text);
        auto SL = build(s);
        QPoly want(coeffs);
        QPoly by_rank = rgf(SL.L);
        auto dec = zs_decompose(s, Weight(s.n - 1, 0));
        std::vector<Weight> lambdas;
        for (const auto& [w, k] : dec.constituents)
            for (int c = 0; c < k; ++c) lambdas.push_back(w);
        QPoly by_sum = rgf_from_decomposition(root_data(Kind::A, s.n - 1), lambdas, SL.L.weight[SL.L.top]);
        QPoly by_formula = rgf_via_zs(s);
        o.expect(by_rank == want, text + " rank RGF " + by_rank.str());
        o.expect(by_sum == want, text + " constituent-sum RGF " + by_sum.str());
        o.expect(by_formula == want, text + " ZS RGF " + by_formula.str());
        o.note << text << " three ways agree; ";
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto SL = build_gt({3, 2, 0});
    int found = 0;
    for (int e = 0; e < static_cast<int>(SL.L.edges.size()); ++e) {
        auto s = SL.gt(SL.L.edges[e].src), t = SL.gt(SL.L.edges[e].dst);
        if (!(s.t(2, 0) == 2 && s.t(2, 1) == 1 && s.t(1, 0) == 2 && t.t(2, 1) == 2)) continue;
        ++found;
        auto [i, j] = SL.edge_position(e);
        auto star = coeffs_skew(t, i, j);
        auto tri = coeffs_classical(t, i, j);
        auto hl = coeffs_hersh_lenart(s, t, i, j);
        o.expect(star.X == Rational(3, 2) && star.Y == 2, "(X,Y) = " + to_string(star.X) + "," + to_string(star.Y));
        o.expect(tri.X == 3 && tri.Y == 1, "triangle variant = " + to_string(tri.X) + "," + to_string(tri.Y));
        o.expect(!hl.fallback && hl.tag.X == Rational(3, 2) && hl.tag.Y == 2,
                 "significant-index variant = " + to_string(hl.tag.X) + "," + to_string(hl.tag.Y));
        o.expect(star.X * star.Y == 3 && tri.X * tri.Y == 3 && hl.tag.X * hl.tag.Y == 3, "products differ from 3");
        o.note << "(" << star.X << "," << star.Y << ") (" << tri.X << "," << tri.Y << ") (" << hl.tag.X << ","
               << hl.tag.Y << "); ";
    }
    o.expect(found == 1, "edge located " + std::to_string(found) + " times");
    return o;
}

struct Family {
    std::vector<SkewLattice> lattices;
    std::vector<TaggedLattice> tagged;
};

Outcome criterion4(const Family& F, const std::vector<SkewShape>& extra) {
    Outcome o;
    auto t0 = Clock::now();
    long long diamonds = 0, relations = 0;
    for (size_t k = 0; k < F.lattices.size(); ++k) {
        auto c = dc_verify(F.tagged[k]);
        diamonds += c.checked_diamonds;
        o.expect(c.ok, F.lattices[k].shape.str() + ": " + c.violation);
        const auto& s = F.lattices[k].shape;
        auto rep = verify_lie_relations(generator_matrices(F.tagged[k]), root_data(Kind::A, s.n - 1), 1 << 20);
        relations += rep.relations_checked;
        o.expect(rep.ok, s.str() + ": " + rep.failure);
    }
    for (const auto& s : extra) {
        auto c = dc_verify(tag_skew(build(s)));
        o.expect(c.ok, s.str() + ": " + c.violation);
    }
    double dt = since(t0);
    o.expect(dt < 300, "took " + std::to_string(dt) + "s");
    o.note << F.lattices.size() << " connected lattices (dc + Lie), " << extra.size()
           << " disconnected (dc), " << diamonds << " diamonds, " << relations << " relations, " << dt << "s";
    return o;
}

Outcome criterion5(const std::vector<SkewShape>& shapes) {
    Outcome o;
    std::vector<std::pair<std::string, std::map<Partition, int>>> cases = {
        {"3,3,1/2,0,0;3", {{{3, 2}, 1}, {{2}, 1}}},
        {"4,3,1/2,0,0;3", {{{4, 2}, 1}, {{3, 3}, 1}, {{3}, 1}, {{2, 1}, 1}}},
        {"5,4,2/3,1,0;3", {{{5, 2}, 1}, {{4}, 1}, {{4, 3}, 2}, {{3, 1}, 2}, {{2, 2}, 1}, {{1}, 1}}}};
    for (const auto& [text, want] : cases) {
        auto s = parse_shape(text);
        auto got = as_partitions(zs_decompose(s, Weight(s.n - 1, 0)));
        o.expect(got == want, text + " constituents differ");
    }
    long long checks = 0;
    for (const auto& s : shapes) {
        Weight zero(s.n - 1, 0), w1(s.n - 1, 0), rho(s.n - 1, 1);
        w1[0] = 1;
        for (const auto& nu : {zero, w1, rho}) {
            try {
                zs_decompose(s, nu);
                ++checks;
            } catch (const std::exception& e) {
                o.fail(s.str() + ": " + e.what());
            }
        }
    }
    o.note << "reference constituent lists match; chi identity on " << checks << " (shape, nu) pairs";
    return o;
}

Outcome criterion6(const std::vector<SkewShape>& shapes) {
    Outcome o;
    long long edges = 0;
    for (const auto& s : shapes) {
        auto SL = build(s);
        auto r = embed_phi(SL);
        edges += SL.L.edges.size();
        if (!r.ok()) {
            std::string why = s.str() + ":";
            if (!r.injective) why += " not injective";
            if (!r.onto_component) why += " not onto";
            if (!r.edges_preserved) why += " edges";
            if (!r.weights_preserved) why += " weights";
            if (!r.coefficients_equal) why += " coefficients";
            o.fail(why);
        }
    }
    o.note << shapes.size() << " shapes, " << edges << " edges compared";
    return o;
}

std::vector<OrthSpec> envelope() {
    std::vector<OrthSpec> out;
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) out.push_back({Kind::B, n, m, n});
    for (int n = 4; n <= 5; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int spin : {n - 1, n}) out.push_back({Kind::D, n, m, spin});
    return out;
}

Outcome criterion7(const std::vector<OrthLattice>& orth) {
    Outcome o;
    for (const auto& OL : orth) {
        auto P = edge_products(OL);
        auto c = dc_verify_products(OL.L, P);
        o.expect(c.ok, OL.spec.str() + ": " + c.violation);
        o.expect(is_structured(OL.L, OL.rd), OL.spec.str() + " not structured");
        int formula_n = OL.spec.kind == Kind::B ? OL.spec.n : OL.spec.n - 1;
        QPoly formula = orth_product_formula(formula_n, OL.spec.m);
        o.expect(formula.at_one() == OL.L.size(), OL.spec.str() + " size " + std::to_string(OL.L.size()));
        o.expect(rgf(OL.L) == formula, OL.spec.str() + " RGF " + rgf(OL.L).str());
    }
    for (auto [spec, size] : std::vector<std::pair<std::string, int>>{{"B:3,1", 8}, {"B:3,2", 35}, {"D:4,1", 8}}) {
        auto OL = build_orth(parse_orth(spec));
        o.expect(OL.L.size() == size, spec + " has " + std::to_string(OL.L.size()));
        o.note << spec << " -> " << OL.L.size() << " ";
    }
    o.note << "; " << orth.size() << " orthogonal lattices certified";
    return o;
}

Outcome criterion8(const std::vector<SkewShape>& shapes) {
    Outcome o;
    long long pairs = 0;
    for (const auto& s : shapes) {
        auto L = build(s).L;
        for (auto op : {ShapeOp::Sigma0, ShapeOp::Star, ShapeOp::Bowtie}) {
            auto r = check_iso(build(shape_op(s, op)).L, lattice_op(L, op));
            ++pairs;
            o.expect(r == IsoResult::Isomorphic, s.str() + " " + op_name(op) + ": " + iso_name(r));
        }
    }
    auto base = parse_shape("3,3/2,0;3");
    auto sigma = parse_shape("3,2/0,0;3");
    auto bowtie = parse_shape("3,1/0,0;3");
    o.expect(normalize(shape_op(base, ShapeOp::Sigma0)) == normalize(sigma), "sigma0 image of (3,3)/(2)");
    o.expect(normalize(shape_op(base, ShapeOp::Bowtie)) == normalize(bowtie), "bowtie image of (3,3)/(2)");
    auto B = build(base).L;
    o.expect(check_iso(build(sigma).L, lattice_op(B, ShapeOp::Sigma0)) == IsoResult::Isomorphic, "(3,2) vs sigma0");
    o.expect(check_iso(build(bowtie).L, lattice_op(B, ShapeOp::Bowtie)) == IsoResult::Isomorphic, "(3,1) vs bowtie");
    o.note << pairs << " (shape, op) pairs isomorphic, figure instances included";
    return o;
}

Outcome criterion9(const Family& F, const std::vector<OrthLattice>& orth) {
    Outcome o;
    for (size_t k = 0; k < F.lattices.size(); ++k) {
        const auto& SL = F.lattices[k];
        auto rd = root_data(Kind::A, SL.shape.n - 1);
        o.expect(is_rank_symmetric_unimodal(SL.L), SL.shape.str() + " rank sequence");
        o.expect(w_invariant(SL.L, rd), SL.shape.str() + " WGF");
        o.expect(padding_invariant(SL, F.tagged[k]), SL.shape.str() + " padding");
    }
    long long comps = 0;
    for (const auto& OL : orth) {
        o.expect(is_rank_symmetric_unimodal(OL.L), OL.spec.str() + " rank sequence");
        o.expect(w_invariant(OL.L, OL.rd), OL.spec.str() + " WGF");
        auto r = restriction_check(OL);
        comps += r.components_checked;
        o.expect(r.ok, OL.spec.str() + " restriction: " + r.failure);
    }
    o.note << F.lattices.size() + orth.size() << " lattices; restriction on " << orth.size() << " orthogonal lattices, "
           << comps << " components";
    return o;
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    Family F;
    for (const auto& s : family(8, 4)) {
        F.lattices.push_back(build(s));
        F.tagged.push_back(tag_skew(F.lattices.back()));
    }
    std::vector<OrthLattice> orth;
    for (const auto& sp : envelope()) orth.push_back(build_orth(sp));

    std::vector<std::function<Outcome()>> crit = {
        criterion1,
        criterion2,
        criterion3,
        [&] { return criterion4(F, disconnected(6, 3)); },
        [&] {
            auto s = family(7, 4);
            auto d = disconnected(5, 4);
            s.insert(s.end(), d.begin(), d.end());
            return criterion5(s);
        },
        [&] {
            auto s = family(6, 4);
            auto d = disconnected(6, 3);
            s.insert(s.end(), d.begin(), d.end());
            return criterion6(s);
        },
        [&] { return criterion7(orth); },
        [&] {
            auto s = family(7, 4);
            auto d = disconnected(5, 3);
            s.insert(s.end(), d.begin(), d.end());
            return criterion8(s);
        },
        [&] { return criterion9(F, orth); },
    };
    bool all = true;
    for (size_t k = 0; k < crit.size(); ++k) {
        auto t1 = Clock::now();
        Outcome o;
        try {
            o = crit[k]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << o.note.str() << " ["
                  << since(t1) << "s]" << std::endl;
    }
    std::cout << "total " << since(t0) << "s" << std::endl;
    return all ? 0 : 1;
}
