#include "superhom/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superhom {

// ---------------------------------------------------------------- Weight

Weight Weight::operator+(const Weight& o) const {
    if (c.empty()) return o;
    if (o.c.empty()) return *this;
    if (c.size() != o.c.size()) throw LinalgError("weight length mismatch");
    Weight r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------- SuperSpace

SuperSpace::SuperSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
    std::set<std::string> seen;
    std::size_t wlen = basis_.empty() ? 0 : basis_.front().weight.size();
    for (const auto& b : basis_) {
        if (!seen.insert(b.label).second) throw LinalgError("duplicate basis label " + b.label);
        if (b.weight.size() != wlen) throw LinalgError("inconsistent weight lengths");
        if (b.parity == Parity::even) ++even_;
    }
}

SuperSpace SuperSpace::of_dims(int even, int odd) {
    std::vector<BasisVector> b;
    for (int i = 0; i < even + odd; ++i)
        b.push_back({"e" + std::to_string(i), i < even ? Parity::even : Parity::odd, {}});
    return SuperSpace(std::move(b));
}

// ---------------------------------------------------------------- sparse vectors

void add_scaled(SparseVector& acc, const SparseVector& v, const Scalar& s) {
    if (v.empty() || sgn(s) == 0) return;
    SparseVector out;
    out.reserve(acc.size() + v.size());
    auto a = acc.begin();
    auto b = v.begin();
    while (a != acc.end() || b != v.end()) {
        if (b == v.end() || (a != acc.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == acc.end() || b->first < a->first) {
            out.emplace_back(b->first, b->second * s);
            ++b;
        } else {
            Scalar x = a->second + b->second * s;
            if (sgn(x) != 0) out.emplace_back(a->first, std::move(x));
            ++a;
            ++b;
        }
    }
    acc = std::move(out);
}

SparseVector scaled(const SparseVector& v, const Scalar& s) {
    if (sgn(s) == 0) return {};
    SparseVector r = v;
    for (auto& e : r) e.second *= s;
    return r;
}

Scalar entry(const SparseVector& v, int index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != v.end() && it->first == index) return it->second;
    return 0;
}

std::vector<Scalar> to_dense(const SparseVector& v, int n) {
    std::vector<Scalar> d(static_cast<std::size_t>(n));
    for (const auto& [i, x] : v) d[static_cast<std::size_t>(i)] = x;
    return d;
}

SparseVector from_dense(const std::vector<Scalar>& v) {
    SparseVector r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) r.emplace_back(static_cast<int>(i), v[i]);
    return r;
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.col(i).emplace_back(i, 1);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.front().size()) : 0;
    SparseMatrix m(r, c);
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < r; ++i)
            if (sgn(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0)
                m.col(j).emplace_back(i, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, std::vector<SparseVector> cols) {
    SparseMatrix m(rows, static_cast<int>(cols.size()));
    for (auto& c : cols)
        if (!c.empty() && c.back().first >= rows) throw LinalgError("column entry out of range");
    m.col_ = std::move(cols);
    return m;
}

void SparseMatrix::set(int i, int j, const Scalar& v) {
    auto& c = col(j);
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int k) { return e.first < k; });
    if (it != c.end() && it->first == i) {
        if (sgn(v) == 0)
            c.erase(it);
        else
            it->second = v;
    } else if (sgn(v) != 0) {
        c.insert(it, {i, v});
    }
}

void SparseMatrix::add(int i, int j, const Scalar& v) {
    if (sgn(v) == 0) return;
    set(i, j, at(i, j) + v);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : col_) n += c.size();
    return n;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    SparseVector r;
    for (const auto& [j, x] : v) add_scaled(r, col(j), x);
    return r;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, x] : col(j)) t.col(i).emplace_back(j, x);
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw LinalgError("matrix product shape mismatch");
    SparseMatrix r(rows_, o.cols_);
    for (int j = 0; j < o.cols_; ++j) r.col(j) = apply(o.col(j));
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("matrix sum shape mismatch");
    SparseMatrix r = *this;
    for (int j = 0; j < cols_; ++j) add_scaled(r.col(j), o.col(j), 1);
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const { return *this + o.scaled(-1); }

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
    SparseMatrix r(rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.col(j) = superhom::scaled(col(j), s);
    return r;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
}

std::vector<std::vector<Scalar>> SparseMatrix::dense() const {
    std::vector<std::vector<Scalar>> d(static_cast<std::size_t>(rows_),
                                       std::vector<Scalar>(static_cast<std::size_t>(cols_)));
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, x] : col(j)) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
    return d;
}

SparseMatrix SparseMatrix::restrict_to(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::unordered_map<int, int> rpos;
    for (std::size_t k = 0; k < rows.size(); ++k) rpos[rows[k]] = static_cast<int>(k);
    SparseMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) {
        auto& out = r.col(static_cast<int>(k));
        for (const auto& [i, x] : col(cols[k])) {
            auto it = rpos.find(i);
            if (it != rpos.end()) out.emplace_back(it->second, x);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return r;
}

// ---------------------------------------------------------------- elimination

namespace {

std::size_t entry_size(const Scalar& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

// Incremental Gauss-Jordan on one block. Pivots prefer small entries to
// limit coefficient growth.
Echelon reduce_block(const std::vector<const SparseVector*>& rows, int ncols, int limit) {
    Echelon e;
    e.ncols = ncols;
    std::unordered_map<int, std::size_t> where;
    for (const SparseVector* r : rows) {
        SparseVector v = *r;
        std::vector<std::pair<std::size_t, Scalar>> hits;
        for (const auto& [c, x] : v) {
            auto it = where.find(c);
            if (it != where.end()) hits.emplace_back(it->second, x);
        }
        for (const auto& [k, x] : hits) add_scaled(v, e.rows[k], -x);
        if (v.empty()) continue;

        std::size_t best = 0;
        std::size_t best_size = entry_size(v[0].second);
        for (std::size_t k = 1; k < v.size() && best_size > 2; ++k) {
            if (v[k].first >= limit) break;
            std::size_t s = entry_size(v[k].second);
            if (s < best_size) {
                best = k;
                best_size = s;
            }
        }
        int p = v[best].first;
        Scalar inv = 1 / v[best].second;
        for (auto& [c, x] : v) x *= inv;
        for (auto& row : e.rows) {
            Scalar f = entry(row, p);
            if (sgn(f) != 0) add_scaled(row, v, -f);
        }
        where[p] = e.rows.size();
        e.pivots.push_back(p);
        e.rows.push_back(std::move(v));
    }
    return e;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

void sort_by_pivot(Echelon& e) {
    std::vector<std::size_t> order(e.pivots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return e.pivots[a] < e.pivots[b]; });
    Echelon s;
    s.ncols = e.ncols;
    for (auto k : order) {
        s.pivots.push_back(e.pivots[k]);
        s.rows.push_back(std::move(e.rows[k]));
    }
    e = std::move(s);
}

}  // namespace

Echelon rref_rows(const std::vector<SparseVector>& rows, int ncols, int pivot_limit) {
    const int limit = pivot_limit < 0 ? ncols : pivot_limit;
    UnionFind uf(ncols);
    for (const auto& r : rows)
        for (std::size_t k = 1; k < r.size(); ++k) uf.unite(r[0].first, r[k].first);

    std::unordered_map<int, std::size_t> group_of;
    std::vector<std::vector<const SparseVector*>> groups;
    for (const auto& r : rows) {
        if (r.empty()) continue;
        int root = uf.find(r[0].first);
        auto [it, fresh] = group_of.try_emplace(root, groups.size());
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(&r);
    }

    std::vector<Echelon> parts(groups.size());
    const auto n = static_cast<std::ptrdiff_t>(groups.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (std::ptrdiff_t g = 0; g < n; ++g) parts[static_cast<std::size_t>(g)] = reduce_block(groups[static_cast<std::size_t>(g)], ncols, limit);

    Echelon e;
    e.ncols = ncols;
    for (auto& p : parts) {
        for (std::size_t k = 0; k < p.pivots.size(); ++k) {
            e.pivots.push_back(p.pivots[k]);
            e.rows.push_back(std::move(p.rows[k]));
        }
    }
    sort_by_pivot(e);
    return e;
}

int rank(const SparseMatrix& m) {
    std::vector<SparseVector> cols;
    cols.reserve(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return rref_rows(cols, m.rows()).rank();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    SparseMatrix t = m.transpose();
    std::vector<SparseVector> rows;
    rows.reserve(static_cast<std::size_t>(t.cols()));
    for (int j = 0; j < t.cols(); ++j) rows.push_back(t.col(j));
    Echelon e = rref_rows(rows, m.cols());

    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    // Column f of the reduced rows gives the pivot coordinates of kernel vector f.
    std::vector<SparseVector> by_free(static_cast<std::size_t>(m.cols()));
    for (std::size_t k = 0; k < e.rows.size(); ++k)
        for (const auto& [c, x] : e.rows[k])
            if (!is_pivot[static_cast<std::size_t>(c)]) by_free[static_cast<std::size_t>(c)].emplace_back(e.pivots[k], -x);

    std::vector<SparseVector> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        SparseVector v = std::move(by_free[static_cast<std::size_t>(f)]);
        v.emplace_back(f, 1);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(const std::vector<SparseVector>& vectors, int ambient) {
    Echelon e = rref_rows(vectors, ambient);
    Subspace s(ambient);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::from_kernel(const SparseMatrix& m) { return span(kernel_basis(m), m.cols()); }

Subspace Subspace::whole(int n) {
    Subspace s(n);
    for (int i = 0; i < n; ++i) {
        s.basis_.push_back({{i, 1}});
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::from_reduced(int ambient, std::vector<SparseVector> basis, std::vector<int> pivots) {
    Subspace s(ambient);
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
}

std::vector<Scalar> Subspace::coordinates(const SparseVector& v) const {
    std::vector<Scalar> c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = entry(v, pivots_[k]);
    return c;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
    SparseVector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Scalar x = entry(v, pivots_[k]);
        if (sgn(x) != 0) add_scaled(r, basis_[k], -x);
    }
    return r;
}

Subspace Subspace::sum(const Subspace& o) const {
    std::vector<SparseVector> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(all, n_);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(n_);
    std::vector<SparseVector> cols = basis_;
    for (const auto& b : o.basis_) cols.push_back(superhom::scaled(b, -1));
    auto ker = kernel_basis(SparseMatrix::from_columns(n_, cols));
    std::vector<SparseVector> vecs;
    for (const auto& k : ker) {
        SparseVector v;
        for (const auto& [i, x] : k)
            if (i < dim()) add_scaled(v, basis_[static_cast<std::size_t>(i)], x);
        vecs.push_back(std::move(v));
    }
    return span(vecs, n_);
}

SparseMatrix Subspace::as_matrix() const { return SparseMatrix::from_columns(n_, basis_); }

SparseVector SpanBuilder::reduce(const SparseVector& v) const {
    SparseVector r = v;
    for (const auto& [c, x] : v) {
        auto it = where_.find(c);
        if (it != where_.end()) add_scaled(r, rows_[it->second], -x);
    }
    return r;
}

bool SpanBuilder::add(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    int p = r.front().first;
    Scalar inv = 1 / r.front().second;
    for (auto& [c, x] : r) x *= inv;
    for (auto& row : rows_) {
        Scalar f = entry(row, p);
        if (sgn(f) != 0) add_scaled(row, r, -f);
    }
    where_[p] = rows_.size();
    pivots_.push_back(p);
    rows_.push_back(std::move(r));
    return true;
}

Subspace SpanBuilder::subspace() const { return Subspace::from_reduced(n_, rows_, pivots_); }

void normalize(SparseVector& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(std::move(e));
        if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
    }
    v = std::move(out);
}

bool solve(const SparseMatrix& a, const SparseVector& b, SparseVector& x) {
    SparseMatrix t = a.transpose();
    std::vector<SparseVector> rows;
    for (int i = 0; i < a.rows(); ++i) {
        SparseVector r = t.col(i);
        Scalar bi = entry(b, i);
        if (sgn(bi) != 0) r.emplace_back(a.cols(), bi);
        rows.push_back(std::move(r));
    }
    Echelon e = rref_rows(rows, a.cols() + 1, a.cols());
    x.clear();
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivots[k] == a.cols()) return false;
        Scalar v = entry(e.rows[k], a.cols());
        if (sgn(v) != 0) x.emplace_back(e.pivots[k], v);
    }
    std::sort(x.begin(), x.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    return true;
}

SparseMatrix inverse(const SparseMatrix& a) {
    const int n = a.rows();
    if (a.cols() != n) throw LinalgError("inverse of a non-square matrix");
    SparseMatrix t = a.transpose();
    std::vector<SparseVector> rows;
    for (int i = 0; i < n; ++i) {
        SparseVector r = t.col(i);
        r.emplace_back(n + i, 1);
        rows.push_back(std::move(r));
    }
    Echelon e = rref_rows(rows, 2 * n, n);
    if (e.rank() != n || (n > 0 && e.pivots.back() >= n)) throw LinalgError("matrix is singular");
    SparseMatrix inv(n, n);
    for (int k = 0; k < n; ++k)
        for (const auto& [c, x] : e.rows[static_cast<std::size_t>(k)])
            if (c >= n) inv.col(c - n).emplace_back(e.pivots[static_cast<std::size_t>(k)], x);
    for (int j = 0; j < n; ++j) normalize(inv.col(j));
    return inv;
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(std::shared_ptr<const SuperSpace> domain, std::shared_ptr<const SuperSpace> codomain,
                     SparseMatrix matrix, Parity parity)
    : dom_(std::move(domain)), cod_(std::move(codomain)), mat_(std::move(matrix)), parity_(parity) {
    if (mat_.rows() != cod_->dim() || mat_.cols() != dom_->dim())
        throw LinalgError("linear map shape does not match its spaces");
    for (int j = 0; j < mat_.cols(); ++j)
        for (const auto& [i, x] : mat_.col(j))
            if (cod_->parity(i) != dom_->parity(j) + parity_)
                throw LinalgError("linear map is not homogeneous of the declared parity");
}

int rank(const LinearMap& m) { return rank(m.matrix()); }
std::vector<SparseVector> kernel_basis(const LinearMap& m) { return kernel_basis(m.matrix()); }

// ---------------------------------------------------------------- Complex

Complex::Complex(int lowest, std::vector<std::shared_ptr<const SuperSpace>> terms,
                 std::vector<SparseMatrix> differentials)
    : lowest_(lowest), terms_(std::move(terms)), diffs_(std::move(differentials)) {
    if (terms_.empty()) throw LinalgError("complex without terms");
    if (diffs_.size() + 1 != terms_.size()) throw LinalgError("complex needs one differential between consecutive terms");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].cols() != terms_[k + 1]->dim() || diffs_[k].rows() != terms_[k]->dim())
            throw LinalgError("differential shape mismatch at degree " + std::to_string(lowest_ + static_cast<int>(k) + 1));
    }
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
        if (!(diffs_[k] * diffs_[k + 1]).is_zero())
            throw LinalgError("d o d != 0 at degree " + std::to_string(lowest_ + static_cast<int>(k) + 1));
    }
}

const SuperSpace& Complex::term(int p) const { return *term_ptr(p); }

std::shared_ptr<const SuperSpace> Complex::term_ptr(int p) const {
    if (p < lowest() || p > highest()) throw LinalgError("term index out of range");
    return terms_[static_cast<std::size_t>(p - lowest_)];
}

const SparseMatrix& Complex::differential(int p) const {
    if (p <= lowest() || p > highest()) throw LinalgError("differential index out of range");
    return diffs_[static_cast<std::size_t>(p - lowest_ - 1)];
}

namespace {

std::vector<int> indices_of(const SuperSpace& s, Parity q) {
    std::vector<int> r;
    for (int i = 0; i < s.dim(); ++i)
        if (s.parity(i) == q) r.push_back(i);
    return r;
}

}  // namespace

std::map<int, ParityDims> homology_dims(const Complex& c) {
    for (int p = c.lowest() + 1; p <= c.highest(); ++p) {
        const auto& d = c.differential(p);
        for (int j = 0; j < d.cols(); ++j)
            for (const auto& [i, x] : d.col(j))
                if (c.term(p - 1).parity(i) != c.term(p).parity(j))
                    throw LinalgError("homology_dims needs even differentials");
    }
    std::map<int, ParityDims> out;
    for (int p = c.lowest(); p <= c.highest(); ++p) {
        ParityDims h;
        for (Parity q : {Parity::even, Parity::odd}) {
            auto here = indices_of(c.term(p), q);
            int ker = static_cast<int>(here.size());
            if (p > c.lowest())
                ker -= rank(c.differential(p).restrict_to(indices_of(c.term(p - 1), q), here));
            int im = 0;
            if (p < c.highest())
                im = rank(c.differential(p + 1).restrict_to(here, indices_of(c.term(p + 1), q)));
            (q == Parity::even ? h.even : h.odd) = ker - im;
        }
        out[p] = h;
    }
    return out;
}

}  // namespace superhom
