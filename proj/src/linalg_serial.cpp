#include "superhom/linalg_serial.hpp"

#include <algorithm>

namespace superhom::serial {

Echelon rref_rows(const std::vector<SparseVector>& rows, int ncols) {
    std::vector<std::vector<Scalar>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) a.push_back(to_dense(r, ncols));

    Echelon e;
    e.ncols = ncols;
    std::size_t lead = 0;
    for (int c = 0; c < ncols && lead < a.size(); ++c) {
        std::size_t p = lead;
        while (p < a.size() && sgn(a[p][static_cast<std::size_t>(c)]) == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[lead]);
        Scalar inv = 1 / a[lead][static_cast<std::size_t>(c)];
        for (auto& x : a[lead]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == lead) continue;
            Scalar f = a[r][static_cast<std::size_t>(c)];
            if (sgn(f) == 0) continue;
            for (std::size_t k = 0; k < static_cast<std::size_t>(ncols); ++k) a[r][k] -= f * a[lead][k];
        }
        e.pivots.push_back(c);
        ++lead;
    }
    for (std::size_t k = 0; k < e.pivots.size(); ++k) e.rows.push_back(from_dense(a[k]));
    return e;
}

int rank(const SparseMatrix& m) {
    std::vector<SparseVector> cols;
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return rref_rows(cols, m.rows()).rank();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    SparseMatrix t = m.transpose();
    std::vector<SparseVector> rows;
    for (int j = 0; j < t.cols(); ++j) rows.push_back(t.col(j));
    Echelon e = rref_rows(rows, m.cols());
    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<SparseVector> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t k = 0; k < e.rows.size(); ++k)
            v[static_cast<std::size_t>(e.pivots[k])] = -entry(e.rows[k], f);
        out.push_back(from_dense(v));
    }
    return out;
}

}  // namespace superhom::serial
