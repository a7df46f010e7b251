#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewtab/skewtab.hpp"

using namespace skewtab;

TEST_SUITE("weights") {

TEST_CASE("A2 cartan and roots") {
    auto rd = root_data(Kind::A, 2);
    CHECK(rd.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(rd.positive_coroots.size() == 3);
}

TEST_CASE("cartan entries and root counts against closure") {
    for (auto [kind, lo, hi] : std::vector<std::tuple<Kind, int, int>>{{Kind::A, 1, 7}, {Kind::B, 2, 7}, {Kind::D, 3, 7}}) {
        for (int r = lo; r <= hi; ++r) {
            auto rd = root_data(kind, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    if (i == j) CHECK(rd.cartan[i][j] == 2);
                    else CHECK((rd.cartan[i][j] == 0 || rd.cartan[i][j] == -1 || rd.cartan[i][j] == -2));
                }
            size_t want = kind == Kind::A ? r * (r + 1) / 2 : kind == Kind::B ? r * r : r * (r - 1);
            CHECK(rd.positive_coroots.size() == want);
            CHECK(oracle::positive_root_count(rd.cartan) == want);
            for (int x : rd.rho_pairings) CHECK(x >= 1);
        }
    }
    CHECK(root_data(Kind::B, 3).positive_coroots.size() == 9);
    CHECK(root_data(Kind::D, 4).positive_coroots.size() == 12);
}

TEST_CASE("rank below the minimum is rejected") {
    CHECK_THROWS_AS(root_data(Kind::A, 0), ConstraintError);
    CHECK_THROWS_AS(root_data(Kind::B, 1), ConstraintError);
    CHECK_THROWS_AS(root_data(Kind::D, 2), ConstraintError);
}

TEST_CASE("dynkin_poly small cases") {
    CHECK(dynkin_poly(root_data(Kind::A, 1), {2}) == QPoly({1, 1, 1}));
    CHECK(dynkin_poly(root_data(Kind::A, 2), {1, 1}).at_one() == 8);
    CHECK(dynkin_poly(root_data(Kind::B, 3), {0, 0, 1}).at_one() == 8);
    CHECK(dynkin_poly(root_data(Kind::A, 2), {0, 0}) == QPoly({1}));
}

TEST_CASE("dynkin_poly at one is the Weyl dimension, and symmetric unimodal") {
    auto rd = root_data(Kind::A, 3);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                QPoly p = dynkin_poly(rd, {a, b, c});
                CHECK(p.at_one() == oracle::weyl_dim_partition({a + b + c, b + c, c}, 4));
                auto pp = poly_props(p);
                CHECK(pp.symmetric);
                CHECK(pp.unimodal);
            }
    for (int n = 2; n <= 5; ++n)
        for (int m = 0; m <= 3; ++m) {
            Weight lam(n, 0);
            lam[n - 1] = m;
            auto eb = oracle::eps_B(n);
            CHECK(dynkin_poly(root_data(Kind::B, n), lam).coeffs() == oracle::weyl_qdim(eb, oracle::spin_weight(n, m, false)));
        }
}

TEST_CASE("poly_props") {
    auto a = poly_props(QPoly({1, 1, 1}));
    CHECK(a.symmetric);
    CHECK(a.unimodal);
    auto b = poly_props(QPoly({1, 2, 0, 1}));
    CHECK_FALSE(b.symmetric);
    CHECK_FALSE(b.unimodal);
}

TEST_CASE("rgf_from_decomposition") {
    auto rd = root_data(Kind::A, 2);
    CHECK(rgf_from_decomposition(rd, {{1, 2}}, {1, 2}) == dynkin_poly(rd, {1, 2}));
    auto L21 = build(parse_shape("3,3,1/2,0,0;3")).L;
    CHECK(rgf_from_decomposition(rd, {{1, 2}, {2, 0}}, {1, 2}) == rgf(L21));
    QPoly want({1, 4, 7, 10, 11, 10, 7, 4, 1});
    CHECK(rgf_from_decomposition(rd, {{2, 2}, {0, 3}, {3, 0}, {1, 1}}, {2, 2}) == want);
}

TEST_CASE("rgf_card_length_typeA") {
    auto z = rgf_card_length_typeA({0, 0});
    CHECK(z.rgf == QPoly({1}));
    CHECK(z.card == 1);
    CHECK(z.length == 0);
    auto adj = rgf_card_length_typeA({1, 1});
    CHECK(adj.card == 8);
    CHECK(adj.length == 4);
    CHECK(rgf_card_length_typeA({1, 2}).card == 15);
}

TEST_CASE("reflect") {
    auto rd1 = root_data(Kind::A, 1);
    CHECK(reflect(LaurentPoly::one(1), 1, rd1) == LaurentPoly::one(1));
    CHECK(reflect(LaurentPoly::monomial({1}), 1, rd1) == LaurentPoly::monomial({-1}));
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> coord(-4, 4), coef(-3, 3);
    for (auto [kind, r] : std::vector<std::pair<Kind, int>>{{Kind::A, 3}, {Kind::B, 3}, {Kind::D, 4}}) {
        auto rd = root_data(kind, r);
        for (int trial = 0; trial < 20; ++trial) {
            LaurentPoly p;
            for (int t = 0; t < 6; ++t) {
                Weight mu(r);
                for (auto& x : mu) x = coord(gen);
                p.add_term(mu, coef(gen));
            }
            for (int i = 1; i <= r; ++i) CHECK(reflect(reflect(p, i, rd), i, rd) == p);
        }
    }
}

TEST_CASE("reflections satisfy the braid relations on weights") {
    for (auto [kind, r] : std::vector<std::pair<Kind, int>>{{Kind::A, 3}, {Kind::B, 3}, {Kind::D, 4}}) {
        auto rd = root_data(kind, r);
        Weight mu(r);
        for (int k = 0; k < r; ++k) mu[k] = 2 * k - 3;
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                int a = rd.cartan[i - 1][j - 1] * rd.cartan[j - 1][i - 1];
                int mij = a == 0 ? 2 : a == 1 ? 3 : 4;
                Weight x = mu, y = mu;
                for (int k = 0; k < mij; ++k) {
                    x = reflect_weight(reflect_weight(x, j, rd), i, rd);
                }
                CHECK(x == y);
            }
    }
}

TEST_CASE("q_ratio cancels to integer polynomials") {
    CHECK(q_ratio({3}, {1}) == QPoly({1, 1, 1}));
    CHECK(q_ratio({4, 3}, {2, 1}) == QPoly({1, 1, 2, 1, 1}));
    CHECK_THROWS(q_ratio({2}, {3}));
}

}
