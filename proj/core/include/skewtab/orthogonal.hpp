#pragma once

#include <string>
#include <vector>

#include "skewtab/lattice.hpp"
#include "skewtab/rational.hpp"
#include "skewtab/repdiag.hpp"

namespace skewtab {

struct OrthSpec {
    Kind kind = Kind::B;
    int n = 0;
    int m = 0;
    int spin = 0;  // B: n; D: n-1 or n
    std::string str() const;
};

// "B:n,m" or "D:n,m[,spin]"
OrthSpec parse_orth(const std::string& text);
bool looks_like_orth(const std::string& text);

// Payload: triangle rows 1..N-2 (row p has p entries), then hhat_1..hhat_{N-1}.
// B_n uses N = n+1 (hhat = row n of the odd array); D_n uses N = n with
// hhat_q = c_{n-1,(q+1)/2} for odd q and c_{n,q/2} for even q.
struct OrthLattice {
    OrthSpec spec;
    int N = 0;
    RootData rd;
    ColoredLattice L;

    int tri_index(int p, int q) const { return (p - 1) * p / 2 + (q - 1); }
    int hhat_index(int q) const { return (N - 2) * (N - 1) / 2 + (q - 1); }
    int c(int v, int p, int q) const { return L.payload[v][tri_index(p, q)]; }
    int hhat(int v, int q) const { return L.payload[v][hhat_index(q)]; }
    // (row p, column q) of payload slot k, with p = N-1 for hhat entries
    std::pair<int, int> slot(int k) const;
    // odd-array entries c_{i,j} (B) or c_{n-1,*}, c_{n,*} rows (D)
    std::vector<std::vector<int>> array_rows(int v) const;
};

OrthLattice build_orth(const OrthSpec& spec);

// classical N-row GT triangle, frame from the J route (prime = false) or J' route
std::vector<int> orth_frame(const OrthLattice& OL, int v, bool prime);
GTParallelogram orth_triangle(const OrthLattice& OL, int v, bool prime);
// triangle position (i, j) changed along edge e
std::pair<int, int> orth_edge_position(const OrthLattice& OL, int e);
// true when edge e may be read through the J' route, resp. J route
bool route_available(const OrthLattice& OL, int e, bool prime);
Rational orth_edge_product(const OrthLattice& OL, int e, bool prime);
std::vector<Rational> edge_products(const OrthLattice& OL);

struct RouteAgreement {
    long long compared = 0;
    long long mismatches = 0;
};
RouteAgreement compare_routes(const OrthLattice& OL);

struct GTComponentReport {
    std::vector<int> members;
    Partition frame;  // as a partition, largest part first
    long long gt_size = 0;
    bool bijective = false;
    bool edges_match = false;
    bool ok() const { return bijective && edges_match; }
};
// Top-level J (prime = false) or J' component through x, matched against L^GT(frame).
GTComponentReport gt_component(const OrthLattice& OL, int x, bool prime);

bool rgf_orth_check(const OrthLattice& OL, QPoly* expected = nullptr);
QPoly orth_product_formula(int formula_n, int m);

struct RestrictionReport {
    bool ok = true;
    int levels = 0;
    long long components_checked = 0;
    std::string failure;
};
RestrictionReport restriction_check(const OrthLattice& OL);

// float sanity only: max |[X_i,Y_j] - d_ij H_i| entry with X = Y = sqrt(P)
double float_sanity_residual(const OrthLattice& OL, const std::vector<Rational>& P);

}  // namespace skewtab
