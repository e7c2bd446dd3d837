#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bikei {

enum class Block : uint8_t { Under = 0, Over = 1 };

// Shared storage for complete tables and partial matrices.
// Entries are generator indices in 1..n; 0 means "unknown".
// under(j,k) holds x_j ▁ x_k, over(j,k) holds x_j ▔ x_k; indices are 1-based.
struct TableData {
    int n = 0;
    std::vector<int32_t> underCells;
    std::vector<int32_t> overCells;

    TableData() = default;
    explicit TableData(int size)
        : n(size), underCells(size_t(size) * size, 0), overCells(size_t(size) * size, 0) {}

    int32_t under(int r, int c) const { return underCells[size_t(r - 1) * n + (c - 1)]; }
    int32_t over(int r, int c) const { return overCells[size_t(r - 1) * n + (c - 1)]; }
    int32_t& under(int r, int c) { return underCells[size_t(r - 1) * n + (c - 1)]; }
    int32_t& over(int r, int c) { return overCells[size_t(r - 1) * n + (c - 1)]; }

    int32_t cell(Block b, int r, int c) const {
        return b == Block::Under ? under(r, c) : over(r, c);
    }
    int32_t& cell(Block b, int r, int c) {
        return b == Block::Under ? under(r, c) : over(r, c);
    }

    bool operator==(const TableData& o) const {
        return n == o.n && underCells == o.underCells && overCells == o.overCells;
    }
    bool operator!=(const TableData& o) const { return !(*this == o); }
};

// A complete n x 2n operation table; every entry in 1..n.
struct BikeiTable : TableData {
    BikeiTable() = default;
    explicit BikeiTable(int size) : TableData(size) {}
};

// A partial table; 0 entries are unknown. Working state of the engine.
struct PresentationMatrix : TableData {
    PresentationMatrix() = default;
    explicit PresentationMatrix(int size) : TableData(size) {}

    bool isComplete() const;
    std::vector<std::pair<Block, std::pair<int, int>>> zeroCells() const;
};

// Throws InvalidTable unless every entry is in 1..n.
BikeiTable toCompleteTable(const PresentationMatrix& m);
PresentationMatrix toMatrix(const BikeiTable& t);

struct AxiomViolation {
    std::string axiomId;        // one of i, ii.i..ii.iv, iii.i..iii.iii, m.i..m.iii
    std::vector<int> witness;   // instantiating element indices
    int lhs = 0;
    int rhs = 0;
};

// Exhaustive check of axioms (i), (ii.i)-(ii.iv), (iii.i)-(iii.iii).
// Throws InvalidTable if any entry is outside 1..n.
std::vector<AxiomViolation> checkBikeiAxioms(const BikeiTable& t);

// Exhaustive check of the medial axioms (m.i)-(m.iii).
std::vector<AxiomViolation> checkMedial(const BikeiTable& t);

// x ▁ y = tx + (s-t)y, x ▔ y = sx over Z_n, residue 0 represented by n.
// Throws InvalidParameters unless s*s = t*t = 1 and (1-s)(s-t) = 0 mod n.
BikeiTable alexanderBikei(int n, int s, int t);

// x ▁ y = y x^-1 y, x ▔ y = x over the group given by its multiplication
// table (1-based, groupMul[i-1][j-1] = index of g_i g_j).
// Throws InvalidParameters unless the table is a group.
BikeiTable coreKei(const std::vector<std::vector<int>>& groupMul);

// x ▁ y = 2y - x, x ▔ y = x over Z_n, residue 0 represented by n.
BikeiTable takasakiKei(int n);

// Componentwise operations on pairs; pair (i,j) flattened row-major to
// (i-1)*|b| + j.
BikeiTable cartesianProduct(const BikeiTable& a, const BikeiTable& b);

// Swap the two operation blocks.
BikeiTable verticalMirror(const BikeiTable& t);

} // namespace bikei
