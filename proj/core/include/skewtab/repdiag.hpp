#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewtab/lattice.hpp"
#include "skewtab/rational.hpp"

namespace skewtab {

struct EdgeTag {
    Rational X;
    Rational Y;
    bool operator==(const EdgeTag&) const = default;
};

struct TaggedLattice {
    ColoredLattice L;
    std::vector<EdgeTag> tags;  // per edge
};

// (i, j) is the changed position of an i-edge s -> t; g read from t.
EdgeTag coeffs_skew(const GTParallelogram& t, int i, int j);
// C_l replaced by {1..l}; classical (Q = 0) input only
EdgeTag coeffs_classical(const GTParallelogram& t, int i, int j);

struct HLResult {
    EdgeTag tag;
    bool fallback = false;  // true when the significant-index data did not cover the edge
    std::string note;
};
HLResult coeffs_hersh_lenart(const GTParallelogram& s, const GTParallelogram& t, int i, int j);

TaggedLattice tag_skew(const SkewLattice& SL);
TaggedLattice tag_classical(const SkewLattice& SL);
TaggedLattice tag_hersh_lenart(const SkewLattice& SL, int* fallbacks = nullptr);

struct Certificate {
    bool ok = true;
    long long checked_diamonds = 0;
    long long checked_crossings = 0;
    std::string violation;  // empty when ok
};

Certificate dc_verify(const TaggedLattice& TL);
// products P per edge; X = Y = sqrt(P) never materialized
Certificate dc_verify_products(const ColoredLattice& L, const std::vector<Rational>& P);

// ---------------------------------------------------------------- matrices

class SparseMatrix {
  public:
    explicit SparseMatrix(int n = 0) : n_(n), rows_(n) {}
    int dim() const { return n_; }
    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    const std::map<int, Rational>& row(int r) const { return rows_[r]; }
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& k) const;
    bool is_zero() const;
    // first nonzero entry (row, col), or (-1, -1)
    std::pair<int, int> witness() const;
    bool operator==(const SparseMatrix& o) const { return (*this - o).is_zero(); }

  private:
    int n_;
    std::vector<std::map<int, Rational>> rows_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

struct GeneratorMatrices {
    std::vector<SparseMatrix> X, Y, H;  // index i-1
};

GeneratorMatrices generator_matrices(const TaggedLattice& TL);

struct LieReport {
    bool ok = true;
    int relations_checked = 0;
    std::string failure;
};
LieReport verify_lie_relations(const GeneratorMatrices& G, const RootData& rd, int vertex_cap = 2000);

struct HighestWeightBlock {
    Weight highest;
    int dim = 0;  // dimension of the submodule generated by the highest-weight vector
};
// One entry per highest-weight vector in a weight-space kernel basis.
std::vector<HighestWeightBlock> highest_weight_blocks(const TaggedLattice& TL, const GeneratorMatrices& G);

// ---------------------------------------------------------------- embedding

struct EmbeddingReport {
    SkewShape target;
    std::vector<std::vector<int>> image;  // phi(x) payload per source vertex
    long long component_size = 0;
    bool injective = false;
    bool onto_component = false;
    bool edges_preserved = false;
    bool weights_preserved = false;
    bool coefficients_equal = false;
    bool ok() const {
        return injective && onto_component && edges_preserved && weights_preserved && coefficients_equal;
    }
};

std::vector<int> phi(const SkewShape& s, const std::vector<int>& g);
EmbeddingReport embed_phi(const SkewLattice& SL, long long max_component = 2000000);

}  // namespace skewtab
