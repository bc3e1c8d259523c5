#pragma once

// Classical Lie superalgebras in their matrix realizations.
//
// Every algebra is a list of (m+n)x(m+n) matrices. Structure constants are
// obtained by decomposing supercommutators in that basis and the whole table
// is validated once at construction (antisymmetry, Jacobi, gradings, tau).

#include "superhom/linalg.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superhom {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { gl, sl, psl, q, osp, p, ptilde };

class LieSuperalgebra;
using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

class LieSuperalgebra {
public:
    /// gl(m|n), sl(m|n) (m != n), psl(n|n), q(1), osp(2|2n) [m=2, n=2n], p(n), ptilde(n) [m=n].
    static AlgebraPtr make(Family f, int m, int n);
    /// Parse "gl(2|1)", "q(1)", "osp(2|4)", "p(3)", "ptilde(2)" / "p̃(2)".
    static AlgebraPtr parse(std::string_view text);

    const std::string& name() const { return name_; }
    Family family() const { return family_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int dim() const { return space_.dim(); }
    const SuperSpace& space() const { return space_; }
    Parity parity(int i) const { return space_.parity(i); }
    const std::string& label(int i) const { return space_[i].label; }

    /// Type I: a Z-grading in degrees -1, 0, 1 with g_0 equal to the even part.
    bool type_one() const { return !zgrade_.empty(); }
    int zgrade(int i) const;
    const std::vector<int>& degree_basis(int d) const;  // d in {-1, 0, 1}
    const std::vector<int>& even_basis() const { return even_; }
    const std::vector<int>& odd_basis() const { return odd_; }

    const std::vector<int>& cartan() const { return cartan_; }
    int rank() const { return static_cast<int>(cartan_.size()); }
    bool has_weights() const { return space_.has_weights(); }
    /// Weight of basis element i for the adjoint action of the Cartan basis.
    const Weight& root(int i) const { return space_.weight(i); }
    /// Even basis elements raising the g_0 highest weight (positive even root vectors).
    const std::vector<int>& g0_positive() const { return g0_positive_; }

    const SparseVector& bracket(int i, int j) const {
        return table_[static_cast<std::size_t>(i) * mats_.size() + static_cast<std::size_t>(j)];
    }
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

    bool has_tau() const { return !tau_.empty(); }
    SparseVector tau(const SparseVector& x) const;
    const SparseVector& tau_basis(int i) const;

    /// Weight of the top exterior power of the odd part.
    Weight delta_weight() const;
    Parity delta_parity() const { return parity_of(static_cast<int>(odd_.size())); }

    /// Module machinery (induction, simples, resolutions) is available.
    bool has_modules() const { return family_ == Family::gl || family_ == Family::sl || family_ == Family::q; }

    int matrix_size() const { return msize_; }
    int matrix_even_rows() const { return meven_; }
    const SparseMatrix& realization(int i) const { return mats_[static_cast<std::size_t>(i)]; }
    SparseMatrix matrix_of(const SparseVector& x) const;
    /// Coordinates of a matrix in the basis; nullopt when it is not in the span.
    std::optional<SparseVector> coordinates(const SparseMatrix& mat) const;
    /// psl(n|n): the central identity direction of the underlying sl(n|n).
    const std::optional<SparseVector>& central() const { return central_; }

    /// gl/sl weights are written in gl(m|n) coordinates (lambda_1..lambda_m | mu_1..mu_n);
    /// q(1) weights are the eigenvalue of the identity.
    Weight weight_from_coords(const std::vector<int>& coords) const;
    /// Inverse of weight_from_coords. sl(m|n) coordinates are defined up to the
    /// supertrace direction (1..1|-1..-1); the lift with last coordinate 0 is returned.
    std::optional<std::vector<int>> coords_from_weight(const Weight& w) const;
    bool is_dominant(const std::vector<int>& coords) const;
    std::string format_coords(const std::vector<int>& coords) const;

private:
    LieSuperalgebra() = default;
    void finish(std::vector<std::string> labels, std::vector<int> index_degree);
    void validate() const;

    std::string name_;
    Family family_ = Family::gl;
    int m_ = 0, n_ = 0;
    int msize_ = 0, meven_ = 0;
    SuperSpace space_;
    std::vector<SparseMatrix> mats_;
    std::vector<SparseVector> table_;
    std::vector<int> zgrade_;
    std::vector<int> by_degree_[3];
    std::vector<int> even_, odd_, cartan_, g0_positive_;
    std::vector<SparseVector> tau_;
    std::optional<SparseVector> central_;
    std::vector<int> dec_pivots_;
    SparseMatrix dec_inverse_;
    std::vector<SparseVector> dec_flat_;
};

/// Seeded points x of the odd part with [x,x] = 0. Always contains 0, every
/// odd basis vector that squares to zero, the partial-identity orbit
/// representatives, and (when they exist) points meeting both g_1 and g_-1.
std::vector<SparseVector> square_zero_cone_sample(const LieSuperalgebra& g, int count, std::uint64_t seed);

/// Matrix rank of the odd block of x on the given side (+1: upper-right, -1: lower-left).
int odd_block_rank(const LieSuperalgebra& g, const SparseVector& x, int side);

}  // namespace superhom
