#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "skewtab/skewtab.hpp"

using namespace skewtab;

namespace {
std::vector<SkewShape> fam(int cells, int max_n, bool connected_only) {
    std::vector<SkewShape> out;
    for (int n = 2; n <= max_n; ++n) {
        auto v = connected_only ? connected_shapes(cells, n) : normalized_shapes(cells, n);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// skew Schur polynomial by direct filling, pushed to z-variables through x_i = z_{i-1}^{-1} z_i
LaurentPoly schur_in_z(const SkewShape& s) {
    std::vector<std::pair<int, int>> cs;
    for (int r = 0; r < s.m(); ++r)
        for (int c = s.Q[r]; c < s.P[r]; ++c) cs.push_back({r, c});
    std::map<std::pair<int, int>, int> val;
    std::vector<int> content(s.n + 1, 0);
    LaurentPoly out;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cs.size()) {
            Weight mu(s.n - 1);
            for (int i = 1; i < s.n; ++i) mu[i - 1] = content[i] - content[i + 1];
            out.add_term(mu, 1);
            return;
        }
        auto [r, c] = cs[k];
        int lo = 1;
        if (auto it = val.find({r, c - 1}); it != val.end()) lo = std::max(lo, it->second);
        if (auto it = val.find({r - 1, c}); it != val.end()) lo = std::max(lo, it->second + 1);
        for (int v = lo; v <= s.n; ++v) {
            val[{r, c}] = v;
            ++content[v];
            rec(k + 1);
            --content[v];
        }
        val.erase({r, c});
    };
    rec(0);
    return out;
}

// peel characters off the top dominant weight until nothing is left
std::map<Weight, int> peel(LaurentPoly p) {
    std::map<Weight, int> out;
    for (;;) {
        Weight best;
        long long best_h = -1;
        for (const auto& [mu, c] : p.terms()) {
            if (c == 0 || !is_dominant(mu)) continue;
            long long h = 0;
            for (size_t i = 0; i < mu.size(); ++i) h += static_cast<long long>(mu[i]) * (i + 1) * (mu.size() - i);
            if (h > best_h) best_h = h, best = mu;
        }
        if (best_h < 0) {
            for (const auto& [mu, c] : p.terms()) REQUIRE(c == 0);
            break;
        }
        long long c = p.terms().at(best);
        REQUIRE(c > 0);
        out[best] += static_cast<int>(c);
        LaurentPoly sub;
        auto ch = chi(best);
        for (const auto& [mu, k] : ch.terms()) sub.add_term(mu, k * c);
        p = p - sub;
    }
    return out;
}
}  // namespace

TEST_SUITE("schur") {

TEST_CASE("theta examples") {
    CHECK(theta(parse_shape("1/0;2")) == LaurentPoly::monomial({1}) + LaurentPoly::monomial({-1}));
    CHECK(theta(parse_shape("3,3/2,0;3")).at_one() == 15);
}

TEST_CASE("theta is the skew Schur polynomial after the change of variables") {
    for (const auto& s : fam(6, 4, false)) CHECK(theta(s) == schur_in_z(s));
}

TEST_CASE("characters") {
    CHECK(chi({0, 0}) == LaurentPoly::one(2));
    CHECK(chi({1, 1}).at_one() == 8);
    CHECK(chi({1, 2}).at_one() == 15);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 2; ++c) {
                CHECK(chi({a, b, c}).at_one() == oracle::weyl_dim_partition({a + b + c, b + c, c}, 4));
                CHECK(weyl_dim_typeA({a, b, c}) == oracle::weyl_dim_partition({a + b + c, b + c, c}, 4));
            }
}

TEST_CASE("partition and weight conversions") {
    CHECK(weight_to_partition({1, 2}) == Partition{3, 2, 0});
    CHECK(partition_to_weight({3, 2, 0}, 3) == Weight{1, 2});
    CHECK(partition_to_weight({4, 3, 1}, 3) == Weight{1, 2});
}

TEST_CASE("decompositions from the introduction") {
    auto parts = [](const std::string& text) {
        std::map<Partition, int> out;
        auto s = parse_shape(text);
        for (const auto& [w, k] : zs_decompose(s, Weight(s.n - 1, 0)).constituents) out[weight_to_partition(w)] += k;
        return out;
    };
    CHECK(parts("3,3,1/2,0,0;3") == std::map<Partition, int>{{{3, 2, 0}, 1}, {{2, 0, 0}, 1}});
    CHECK(parts("4,3,1/2,0,0;3") ==
          std::map<Partition, int>{{{4, 2, 0}, 1}, {{3, 3, 0}, 1}, {{3, 0, 0}, 1}, {{2, 1, 0}, 1}});
    CHECK(parts("5,4,2/3,1,0;3") == std::map<Partition, int>{{{5, 2, 0}, 1},
                                                             {{4, 0, 0}, 1},
                                                             {{4, 3, 0}, 2},
                                                             {{3, 1, 0}, 2},
                                                             {{2, 2, 0}, 1},
                                                             {{1, 0, 0}, 1}});
    auto s = parse_shape("1/0;2");
    CHECK(zs_decompose(s, {0}).constituents == std::map<Weight, int>{{{1}, 1}});
}

TEST_CASE("multiplicity freeness") {
    auto mf = [](const std::string& t) {
        auto s = parse_shape(t);
        return is_multiplicity_free(zs_decompose(s, Weight(s.n - 1, 0)));
    };
    CHECK(mf("3,3,1/2,0,0;3"));
    CHECK(mf("4,3,1/2,0,0;3"));
    CHECK_FALSE(mf("5,4,2/3,1,0;3"));
}

TEST_CASE("ZS constituents agree with peeling characters off theta") {
    for (const auto& s : fam(6, 4, false)) {
        auto d = zs_decompose(s, Weight(s.n - 1, 0));
        CHECK(d.constituents == peel(theta(s)));
        int total = 0;
        for (const auto& [w, k] : d.constituents) total += k;
        CHECK(total == d.admissible);
    }
}

TEST_CASE("large nu admits everything") {
    auto s = parse_shape("3,3/2,0;3");
    auto d = zs_decompose(s, {20, 20});
    CHECK(d.admissible == 15);
}

TEST_CASE("chi identity for nonzero nu") {
    for (const auto& s : fam(6, 4, false)) {
        Weight w1(s.n - 1, 0), rho(s.n - 1, 1);
        w1[0] = 1;
        CHECK_NOTHROW(zs_decompose(s, w1));
        CHECK_NOTHROW(zs_decompose(s, rho));
    }
}

TEST_CASE("rgf via the decomposition") {
    CHECK(rgf_via_zs(parse_shape("4,3,1/2,0,0;3")) == QPoly({1, 4, 7, 10, 11, 10, 7, 4, 1}));
    CHECK(rgf_via_zs(parse_shape("1/0;2")) == QPoly({1, 1}));
    for (const auto& s : fam(8, 4, true)) CHECK(rgf_via_zs(s) == rgf(build(s).L));
}

TEST_CASE("dualities on theta") {
    for (const auto& s : fam(6, 4, false)) {
        auto t = theta(s);
        CHECK(theta(shape_op(s, ShapeOp::Star)) == dual_poly(t));
        CHECK(theta(shape_op(s, ShapeOp::Sigma0)) == sigma0_poly(t));
        CHECK(theta(shape_op(s, ShapeOp::Bowtie)) == dual_poly(sigma0_poly(t)));
        CHECK(dual_poly(t) == sigma0_poly(t));  // W-symmetric, so -mu and -w0 mu agree on the whole sum
    }
}

TEST_CASE("-w0 is coordinate reversal") {
    for (int r = 1; r <= 4; ++r) {
        auto rd = root_data(Kind::A, r);
        Weight mu(r);
        for (int k = 0; k < r; ++k) mu[k] = k + 1;
        Weight x = mu;
        for (bool moved = true; moved;) {
            moved = false;
            for (int i = 1; i <= r; ++i)
                if (x[i - 1] > 0) {
                    x = reflect_weight(x, i, rd);
                    moved = true;
                }
        }
        Weight neg(r);
        for (int k = 0; k < r; ++k) neg[k] = -x[k];
        CHECK(neg == neg_w0(mu));
    }
}

}
