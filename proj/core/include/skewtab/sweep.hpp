#pragma once

#include <string>
#include <vector>

#include "skewtab/orthogonal.hpp"
#include "skewtab/shapes.hpp"

namespace skewtab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct InstanceReport {
    std::string instance;
    int vertices = 0;
    std::vector<CheckResult> checks;
    bool pass() const;
};

struct SkewCheckOptions {
    int lie_cap = 2000;   // matrix relations only on lattices up to this size
    bool dualities = true;
    bool extra_nus = true;  // chi identity for nu = omega_1 and rho as well as 0
    bool embedding = false;
    bool rtl = true;
};

struct OrthCheckOptions {
    bool float_sanity = false;
};

InstanceReport check_skew(const SkewShape& s, const SkewCheckOptions& opt = {});
InstanceReport check_orth(const OrthSpec& spec, const OrthCheckOptions& opt = {});

struct SweepSpec {
    bool orth = false;
    int max_cells = 0;  // skew
    int max_n = 0;
    Kind kind = Kind::B;  // orth
    int max_m = 0;
};
// "cells<=K,n<=N" or "B:n<=N,m<=M" / "D:n<=N,m<=M"; the unicode sign is also accepted
SweepSpec parse_sweep(const std::string& text);
std::vector<SkewShape> sweep_shapes(const SweepSpec& s);
std::vector<OrthSpec> sweep_orth(const SweepSpec& s);

}  // namespace skewtab
