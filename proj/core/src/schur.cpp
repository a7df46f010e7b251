#include "skewtab/schur.hpp"

#include <algorithm>
#include <mutex>

#include "skewtab/errors.hpp"

namespace skewtab {

LaurentPoly theta(const SkewShape& s) {
    LaurentPoly p;
    for (const auto& T : enumerate_tableaux(s)) p.add_term(wt(T), 1);
    return p;
}

Partition weight_to_partition(const Weight& lambda) {
    int n = static_cast<int>(lambda.size()) + 1;
    Partition P(n, 0);
    for (int i = n - 2; i >= 0; --i) P[i] = P[i + 1] + lambda[i];
    return P;
}

Weight partition_to_weight(const Partition& P, int n) {
    Partition p = P;
    p.resize(n, 0);
    Weight w(n - 1);
    for (int i = 0; i + 1 < n; ++i) w[i] = p[i] - p[i + 1];
    return w;
}

LaurentPoly chi(const Weight& lambda) {
    if (!is_dominant(lambda)) throw ConstraintError("chi needs a dominant weight");
    static std::mutex mu;
    static std::map<Weight, LaurentPoly> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    auto SL = build_gt(weight_to_partition(lambda));
    LaurentPoly p = wgf(SL.L);
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(lambda, p);
    return p;
}

long long weyl_dim_typeA(const Weight& lambda) { return rgf_card_length_typeA(lambda).card; }

SchurDecomposition zs_decompose(const SkewShape& s, const Weight& nu) {
    if (static_cast<int>(nu.size()) != s.n - 1) throw ConstraintError("nu has the wrong length");
    if (!is_dominant(nu)) throw ConstraintError("nu must be dominant");
    SchurDecomposition d{s, nu, {}, 0};
    for (const auto& T : enumerate_tableaux(s)) {
        auto x = to_parallelogram(T);
        if (!is_nu_ballot(x, nu)) continue;
        Weight w = wt(x);
        for (size_t k = 0; k < w.size(); ++k) w[k] += nu[k];
        ++d.constituents[w];
        ++d.admissible;
    }
    LaurentPoly lhs = chi(nu) * theta(s), rhs;
    for (const auto& [w, k] : d.constituents)
        for (int c = 0; c < k; ++c) rhs += chi(w);
    if (lhs != rhs) throw InvariantError("chi_nu * theta != sum of chi over admissible elements");
    return d;
}

QPoly rgf_via_zs(const SkewShape& s) {
    auto SL = build(s);
    const auto& L = SL.L;
    QPoly r;
    int top = L.rank[L.top];
    for (int v = 0; v < L.size(); ++v) {
        if (!is_ballot(SL.gt(v))) continue;
        r += QPoly::monomial(top - L.rank[v]) * rgf_card_length_typeA(L.weight[v]).rgf;
    }
    if (r != rgf(L)) throw InvariantError("rank generating function mismatch against the lattice");
    return r;
}

bool is_multiplicity_free(const SchurDecomposition& d) {
    return std::all_of(d.constituents.begin(), d.constituents.end(), [](const auto& kv) { return kv.second == 1; });
}

Weight neg_w0(const Weight& mu) { return Weight(mu.rbegin(), mu.rend()); }

LaurentPoly dual_poly(const LaurentPoly& p) {
    return p.map_exponents([](Weight mu) {
        for (auto& x : mu) x = -x;
        return mu;
    });
}

LaurentPoly sigma0_poly(const LaurentPoly& p) { return p.map_exponents(neg_w0); }

}  // namespace skewtab
