#pragma once

#include <vector>

#include "nilflat/rational.hpp"

namespace nilflat {

// Dense matrix of exact rationals. Small sizes only (root matrices, Gram
// matrices), so no sparsity games.
class QMatrix {
public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool operator==(const QMatrix& o) const = default;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct RankKernel {
    int rank = 0;
    // Kernel basis in the reduced-echelon convention: one vector per free
    // column f, with entry 1 at f and the negated reduced column elsewhere.
    std::vector<std::vector<Rational>> kernel;
};

// Exact Gauss-Jordan elimination. Pivot choice within a column: smallest
// height first (ties: smallest row index), which keeps intermediate rationals
// small and makes the result deterministic.
RankKernel rank_and_kernel(QMatrix m);

// Canonical basis of the row space: the nonzero rows of the reduced echelon
// form. Equal spans produce identical bases.
std::vector<std::vector<Rational>> row_basis(QMatrix m);

// Dimension of span(vectors) ∩ {v : v∘σ = -v} for an involution σ given as a
// 0-based index map. The (-1)-eigenspace of σ is spanned by e_a - e_b over
// its transpositions.
int antiinvariant_dim(const std::vector<std::vector<Rational>>& vectors,
                      const std::vector<int>& sigma);

} // namespace nilflat
