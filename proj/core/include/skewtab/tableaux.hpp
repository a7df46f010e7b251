#pragma once

#include <vector>

#include "skewtab/shapes.hpp"
#include "skewtab/weights.hpp"

namespace skewtab {

struct SkewTableau {
    SkewShape shape;
    std::vector<int> entries;  // aligned with cells(shape)
    bool operator==(const SkewTableau&) const = default;
};

// g[i*m + r] = t^(i)_{r+1}; position (i, j) with j in C_i = {i-m+1..i} sits at r = i - j.
struct GTParallelogram {
    int n = 0;
    int m = 0;
    std::vector<int> g;

    int t(int i, int r) const { return g[i * m + r]; }
    int& t(int i, int r) { return g[i * m + r]; }
    bool has(int i, int j) const { return i >= 0 && i <= n && i - j >= 0 && i - j < m; }
    int at(int i, int j) const { return t(i, i - j); }
    bool operator==(const GTParallelogram&) const = default;
};

std::vector<SkewTableau> enumerate_tableaux(const SkewShape& s);
bool is_semistandard(const SkewTableau& T);

GTParallelogram to_parallelogram(const SkewTableau& T);
SkewTableau to_tableau(const GTParallelogram& x, const SkewShape& s);
// frame, interlacing and partition conditions
bool is_valid_parallelogram(const GTParallelogram& x, const SkewShape& s);

Weight wt(const SkewTableau& T);
Weight wt_of_entries(const std::vector<int>& entries, int n);
Weight wt(const GTParallelogram& x);

long long ballot_d(const GTParallelogram& x, int k, int p);
bool is_ballot(const GTParallelogram& x);
bool is_nu_ballot(const GTParallelogram& x, const Weight& nu);

std::vector<std::vector<int>> rtl_subtableaux(const SkewTableau& T);
bool is_nu_ballot_rtl(const SkewTableau& T, const Weight& nu);

}  // namespace skewtab
