#pragma once

// Exact rational, Z2-graded linear algebra.
//
// Matrices are stored sparse and column-major. Elimination is done per
// connected component of the row/column incidence graph: weight-preserving
// maps split into many small independent blocks, and the blocks are reduced
// in parallel (OpenMP). A dense whole-matrix reference lives in
// linalg_serial.hpp and is used by the tests and the benchmark.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superhom {

using Scalar = mpq_class;

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline constexpr Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline constexpr int bit(Parity p) { return static_cast<int>(p); }
inline constexpr Parity parity_of(int n) { return (n & 1) ? Parity::odd : Parity::even; }
/// (-1)^{ab}
inline constexpr int koszul_sign(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

/// Integer weight vector in the Cartan coordinates of an algebra.
struct Weight {
    std::vector<int> c;

    Weight() = default;
    explicit Weight(std::vector<int> v) : c(std::move(v)) {}
    static Weight zero(std::size_t n) { return Weight(std::vector<int>(n, 0)); }

    std::size_t size() const { return c.size(); }
    int operator[](std::size_t i) const { return c[i]; }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    auto operator<=>(const Weight&) const = default;
    std::string str() const;
};

struct BasisVector {
    std::string label;
    Parity parity = Parity::even;
    Weight weight;
};

/// Finite-dimensional superspace with a labeled, parity-tagged basis.
class SuperSpace {
public:
    SuperSpace() = default;
    explicit SuperSpace(std::vector<BasisVector> basis);

    /// Unlabeled space of dimension (even|odd); labels are e0, e1, ...
    static SuperSpace of_dims(int even, int odd);

    int dim() const { return static_cast<int>(basis_.size()); }
    int even_dim() const { return even_; }
    int odd_dim() const { return dim() - even_; }
    const BasisVector& operator[](int i) const { return basis_[static_cast<std::size_t>(i)]; }
    Parity parity(int i) const { return basis_[static_cast<std::size_t>(i)].parity; }
    const Weight& weight(int i) const { return basis_[static_cast<std::size_t>(i)].weight; }
    bool has_weights() const { return !basis_.empty() && basis_.front().weight.size() > 0; }
    const std::vector<BasisVector>& basis() const { return basis_; }

private:
    std::vector<BasisVector> basis_;
    int even_ = 0;
};

using SparseVector = std::vector<std::pair<int, Scalar>>;  // sorted by index, no zeros

void add_scaled(SparseVector& acc, const SparseVector& v, const Scalar& s);
SparseVector scaled(const SparseVector& v, const Scalar& s);
Scalar entry(const SparseVector& v, int index);
std::vector<Scalar> to_dense(const SparseVector& v, int n);
SparseVector from_dense(const std::vector<Scalar>& v);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(static_cast<std::size_t>(cols)) {}

    static SparseMatrix identity(int n);
    static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);
    static SparseMatrix from_columns(int rows, std::vector<SparseVector> cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVector& col(int j) const { return col_[static_cast<std::size_t>(j)]; }
    SparseVector& col(int j) { return col_[static_cast<std::size_t>(j)]; }
    Scalar at(int i, int j) const { return entry(col(j), i); }
    void set(int i, int j, const Scalar& v);
    void add(int i, int j, const Scalar& v);
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    SparseVector apply(const SparseVector& v) const;
    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Scalar& s) const;
    bool operator==(const SparseMatrix& o) const;
    std::vector<std::vector<Scalar>> dense() const;
    /// Sub-matrix on the given row and column index lists.
    SparseMatrix restrict_to(const std::vector<int>& rows, const std::vector<int>& cols) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVector> col_;
};

/// Reduced row echelon form of the row space of a matrix.
struct Echelon {
    int ncols = 0;
    std::vector<int> pivots;          // pivot column of each reduced row
    std::vector<SparseVector> rows;   // rows[i][pivots[i]] == 1, zero at other pivots

    int rank() const { return static_cast<int>(pivots.size()); }
};

/// Row-reduce a set of row vectors of length ncols. Pivots are taken from
/// columns < pivot_limit whenever a row has an entry there.
Echelon rref_rows(const std::vector<SparseVector>& rows, int ncols, int pivot_limit = -1);

int rank(const SparseMatrix& m);
/// Basis of the null space. Vector k has a 1 at its free column and 0 at the
/// other free columns, so coordinates of a kernel element are read off there.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Subspace of Q^n in reduced form: basis[i][pivots[j]] == delta_ij.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient) {}
    static Subspace span(const std::vector<SparseVector>& vectors, int ambient);
    static Subspace from_kernel(const SparseMatrix& m);
    static Subspace whole(int n);
    /// Adopt an already reduced basis (basis[i][pivots[j]] == delta_ij).
    static Subspace from_reduced(int ambient, std::vector<SparseVector> basis, std::vector<int> pivots);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SparseVector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    /// Coordinates of v, assuming v lies in the subspace.
    std::vector<Scalar> coordinates(const SparseVector& v) const;
    /// v minus its projection along the reduced basis; zero iff v is in the span.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Basis vectors as columns of an ambient x dim matrix.
    SparseMatrix as_matrix() const;

private:
    int n_ = 0;
    std::vector<SparseVector> basis_;
    std::vector<int> pivots_;
};

/// Incrementally grown reduced basis.
class SpanBuilder {
public:
    explicit SpanBuilder(int ambient) : n_(ambient) {}
    /// Adds v; returns false when v was already in the span.
    bool add(const SparseVector& v);
    SparseVector reduce(const SparseVector& v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    Subspace subspace() const;

private:
    int n_;
    std::vector<SparseVector> rows_;
    std::vector<int> pivots_;
    std::map<int, std::size_t> where_;
};

/// Sort by index, merge duplicates, drop zeros.
void normalize(SparseVector& v);

/// Solve A x = b exactly; returns false when inconsistent.
bool solve(const SparseMatrix& a, const SparseVector& b, SparseVector& x);
/// Inverse of a square matrix; throws LinalgError when singular.
SparseMatrix inverse(const SparseMatrix& a);

/// Homogeneous linear map between superspaces.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::shared_ptr<const SuperSpace> domain, std::shared_ptr<const SuperSpace> codomain,
              SparseMatrix matrix, Parity parity = Parity::even);

    const SuperSpace& domain() const { return *dom_; }
    const SuperSpace& codomain() const { return *cod_; }
    std::shared_ptr<const SuperSpace> domain_ptr() const { return dom_; }
    std::shared_ptr<const SuperSpace> codomain_ptr() const { return cod_; }
    const SparseMatrix& matrix() const { return mat_; }
    Parity parity() const { return parity_; }

private:
    std::shared_ptr<const SuperSpace> dom_;
    std::shared_ptr<const SuperSpace> cod_;
    SparseMatrix mat_;
    Parity parity_ = Parity::even;
};

int rank(const LinearMap& m);
std::vector<SparseVector> kernel_basis(const LinearMap& m);

struct ParityDims {
    int even = 0;
    int odd = 0;
    int total() const { return even + odd; }
    bool operator==(const ParityDims&) const = default;
};

/// Chain complex with degree -1 differentials; d_p : term p -> term p-1.
/// Construction certifies d_p o d_{p+1} == 0.
class Complex {
public:
    Complex(int lowest, std::vector<std::shared_ptr<const SuperSpace>> terms,
            std::vector<SparseMatrix> differentials);

    int lowest() const { return lowest_; }
    int highest() const { return lowest_ + static_cast<int>(terms_.size()) - 1; }
    const SuperSpace& term(int p) const;
    /// d_p for lowest < p <= highest.
    const SparseMatrix& differential(int p) const;
    std::shared_ptr<const SuperSpace> term_ptr(int p) const;

private:
    int lowest_;
    std::vector<std::shared_ptr<const SuperSpace>> terms_;
    std::vector<SparseMatrix> diffs_;  // diffs_[k] = d_{lowest+k+1}
};

/// dim ker d_p - rank d_{p+1}, split by parity. Differentials must be even.
std::map<int, ParityDims> homology_dims(const Complex& c);

struct LinalgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace superhom
