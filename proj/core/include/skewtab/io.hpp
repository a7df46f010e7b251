#pragma once

#include <string>
#include <vector>

#include "skewtab/lattice.hpp"
#include "skewtab/rational.hpp"
#include "skewtab/repdiag.hpp"

namespace skewtab {

enum class PayloadStyle { GTColumns, OrthRows, Flat };

struct ExportOptions {
    std::string shape;  // label stored under "shape"
    PayloadStyle style = PayloadStyle::Flat;
    int gt_m = 0;                                        // rows per column for GTColumns
    std::vector<std::vector<std::vector<int>>> rows;     // per vertex, for OrthRows
    const std::vector<EdgeTag>* tags = nullptr;
    const std::vector<Rational>* products = nullptr;
};

std::string gt_json(const GTParallelogram& x);
std::string lattice_json(const ColoredLattice& L, const ExportOptions& opt);
std::string lattice_dot(const ColoredLattice& L, const ExportOptions& opt);
std::string certificate_json(const Certificate& c);

struct ImportedLattice {
    std::string shape;
    ColoredLattice L;
    std::vector<EdgeTag> tags;
    std::vector<Rational> products;
    bool has_tags = false;
    bool has_products = false;
};
// throws ParseError on malformed documents
ImportedLattice parse_lattice_json(const std::string& text);

}  // namespace skewtab
