#pragma once

#include <map>
#include <vector>

#include "skewtab/lattice.hpp"
#include "skewtab/weights.hpp"

namespace skewtab {

struct SchurDecomposition {
    SkewShape shape;
    Weight nu;
    std::map<Weight, int> constituents;  // omega-coordinates -> multiplicity
    int admissible = 0;
};

LaurentPoly theta(const SkewShape& s);

// partition with P_i = sum_{k>=i} lambda_k and P_n = 0
Partition weight_to_partition(const Weight& lambda);
Weight partition_to_weight(const Partition& P, int n);

LaurentPoly chi(const Weight& lambda);
long long weyl_dim_typeA(const Weight& lambda);

SchurDecomposition zs_decompose(const SkewShape& s, const Weight& nu);
QPoly rgf_via_zs(const SkewShape& s);
bool is_multiplicity_free(const SchurDecomposition& d);

// -w0 on omega-coordinates of A_{n-1}: coordinate reversal
Weight neg_w0(const Weight& mu);
LaurentPoly dual_poly(const LaurentPoly& p);    // Z^mu -> Z^{-mu}
LaurentPoly sigma0_poly(const LaurentPoly& p);  // Z^mu -> Z^{-w0 mu}

}  // namespace skewtab
