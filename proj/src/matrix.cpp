#include "nilflat/matrix.hpp"

#include <algorithm>

namespace nilflat {

namespace {

// reduces m in place to reduced echelon form with pivot k in row k,
// returning the pivot columns
std::vector<int> reduce_in_place(QMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<bool> row_used(rows, false);

    // Gauss-Jordan, full reduction. Pivot choice: smallest height entry in the
    // column, then smallest row index. Keeps intermediate entries small without
    // leaving exact arithmetic.
    std::vector<int> pivot_cols;
    for (int c = 0; c < cols; ++c) {
        int prow = -1;
        Integer best_h = 0;
        for (int r = 0; r < rows; ++r) {
            if (row_used[r] || m.at(r, c) == 0)
                continue;
            Integer h = height(m.at(r, c));
            if (prow == -1 || h < best_h) {
                prow = r;
                best_h = h;
            }
        }
        if (prow == -1)
            continue;
        row_used[prow] = true;
        pivot_cols.push_back(c);

        Rational inv = Rational(1) / m.at(prow, c);
        for (int j = c; j < cols; ++j)
            m.at(prow, j) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == prow || m.at(r, c) == 0)
                continue;
            Rational f = m.at(r, c);
            for (int j = c; j < cols; ++j)
                m.at(r, j) -= f * m.at(prow, j);
        }
        // keep pivot k in row k so kernel extraction can read reduced rows directly
        if (prow != int(pivot_cols.size()) - 1) {
            int k = int(pivot_cols.size()) - 1;
            for (int j = 0; j < cols; ++j)
                std::swap(m.at(prow, j), m.at(k, j));
            std::swap(row_used[prow], row_used[k]);
        }
    }
    return pivot_cols;
}

} // namespace

RankKernel rank_and_kernel(QMatrix m) {
    const int cols = m.cols();
    std::vector<int> pivot_cols = reduce_in_place(m);

    RankKernel out;
    out.rank = int(pivot_cols.size());

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_cols)
        is_pivot[c] = true;

    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (int k = 0; k < out.rank; ++k)
            v[pivot_cols[k]] = -m.at(k, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<Rational>> row_basis(QMatrix m) {
    std::vector<int> pivot_cols = reduce_in_place(m);
    std::vector<std::vector<Rational>> basis;
    for (int k = 0; k < int(pivot_cols.size()); ++k) {
        std::vector<Rational> row(m.cols());
        for (int c = 0; c < m.cols(); ++c)
            row[c] = m.at(k, c);
        basis.push_back(std::move(row));
    }
    return basis;
}

int antiinvariant_dim(const std::vector<std::vector<Rational>>& vectors, const std::vector<int>& sigma) {
    if (vectors.empty())
        return 0;
    const int n = int(vectors[0].size());
    if (int(sigma.size()) != n)
        throw domain_error("involution size does not match vector dimension");

    // (-1)-eigenspace of the permutation action is spanned by e_a - e_b over
    // the transpositions (a b). dim(K cap E) = dim K + dim E - dim(K + E).
    std::vector<std::vector<Rational>> espan;
    for (int a = 0; a < n; ++a) {
        int b = sigma[a];
        if (b > a) {
            std::vector<Rational> v(n, Rational(0));
            v[a] = 1;
            v[b] = -1;
            espan.push_back(std::move(v));
        }
    }

    auto rank_of = [n](const std::vector<std::vector<Rational>>& vs) {
        QMatrix m(int(vs.size()), n);
        for (int r = 0; r < int(vs.size()); ++r)
            for (int c = 0; c < n; ++c)
                m.at(r, c) = vs[r][c];
        return rank_and_kernel(std::move(m)).rank;
    };

    int dim_k = rank_of(vectors);
    if (espan.empty())
        return 0;
    int dim_e = rank_of(espan);

    std::vector<std::vector<Rational>> joint = vectors;
    joint.insert(joint.end(), espan.begin(), espan.end());
    int dim_sum = rank_of(joint);
    return dim_k + dim_e - dim_sum;
}

}  // namespace nilflat
