#pragma once

#include <string>
#include <utility>
#include <vector>

namespace skewtab {

using Partition = std::vector<int>;

struct Cell {
    int row;
    int col;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

enum class ShapeOp { Eps, Sigma0, Star, Bowtie };

const char* op_name(ShapeOp op);
ShapeOp parse_op(const std::string& s);

struct SkewShape {
    Partition P;  // length m >= n
    Partition Q;
    int n = 0;

    int m() const { return static_cast<int>(P.size()); }
    int size() const;
    bool operator==(const SkewShape&) const = default;
    std::string str() const;  // "P/Q;n"
};

bool is_partition(const Partition& p);

// Pads P and Q with zeros to length max(n, |P|, |Q|); validates.
SkewShape make_shape(Partition P, Partition Q, int n);
SkewShape parse_shape(const std::string& text);

std::vector<Cell> cells(const SkewShape& s);
std::vector<int> column_heights(const SkewShape& s);
bool is_skew_compatible(const Partition& P, const Partition& Q, int n);
std::vector<Partition> column_partitions(const SkewShape& s);

// Appends k zero rows to P and Q.
SkewShape pad(const SkewShape& s, int k);
SkewShape normalize(const SkewShape& s);
SkewShape shape_from_cells(const std::vector<Cell>& cs, int n);
SkewShape shape_op(const SkewShape& s, ShapeOp op);

bool is_connected(const SkewShape& s);

// Normalized connected skew shapes with 1..max_cells cells and entry bound n,
// in a fixed order (by cell count, then P, then Q).
std::vector<SkewShape> connected_shapes(int max_cells, int n);
// every normalized skew-compatible shape, connected or not
std::vector<SkewShape> normalized_shapes(int max_cells, int n);

}  // namespace skewtab
