#pragma once

// Finite-dimensional supermodules: one exact action matrix per algebra basis
// element on a weight- and parity-adapted basis.

#include "superhom/algebra.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superhom {

struct ModuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SuperModule {
public:
    SuperModule() = default;
    /// Weights are read off the (necessarily diagonal) Cartan actions.
    /// g0_only marks modules over the even part: odd actions are ignored.
    SuperModule(AlgebraPtr g, std::vector<std::string> labels, std::vector<Parity> parities,
                std::vector<SparseMatrix> action, std::string label, bool g0_only = false);

    const LieSuperalgebra& algebra() const { return *g_; }
    const AlgebraPtr& algebra_ptr() const { return g_; }
    const SuperSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }
    Parity parity(int i) const { return space_.parity(i); }
    const Weight& weight(int i) const { return space_.weight(i); }
    const SparseMatrix& action(int x) const { return action_[static_cast<std::size_t>(x)]; }
    const std::vector<SparseMatrix>& actions() const { return action_; }
    SparseMatrix act(const SparseVector& x) const;
    const std::string& label() const { return label_; }
    bool g0_only() const { return g0_only_; }

private:
    AlgebraPtr g_;
    SuperSpace space_;
    std::vector<SparseMatrix> action_;
    std::string label_;
    bool g0_only_ = false;
};

struct ModuleCertificate {
    bool ok = true;
    int pairs_checked = 0;
    std::string failure;  // first violated relation, naming the basis pair
};

ModuleCertificate verify_module(const SuperModule& m);

using Character = std::map<std::pair<Weight, Parity>, int>;
Character character(const SuperModule& m);
Character character_product(const Character& a, const Character& b);
Character parity_flip(const Character& c);

// ---------------------------------------------------------------- constructions

SuperModule trivial_module(const AlgebraPtr& g);
/// Simple module over the even part with highest weight given in gl(m|n)
/// coordinates (q(1): the eigenvalue of I). Even parity; odd elements act by 0.
SuperModule simple_g0(const AlgebraPtr& g, const std::vector<int>& coords);
/// The one-dimensional even-part module Lambda^top of the odd part.
SuperModule delta_module(const AlgebraPtr& g);

/// U(g) (x)_{U(p)} S where p is spanned by the basis elements outside
/// `complement` (a set of odd basis indices). S must carry the p-action.
SuperModule induce(const SuperModule& s, const std::vector<int>& complement, const std::string& label);
SuperModule induce_from_g0(const SuperModule& s);
/// Hom_{U(p)}(U(g), S), computed as the dual of the induced dual.
SuperModule coinduce(const SuperModule& s, const std::vector<int>& complement, const std::string& label);
SuperModule coinduce_from_g0(const SuperModule& s);
SuperModule induce_kac(const AlgebraPtr& g, const std::vector<int>& coords);
SuperModule coinduce_kac(const AlgebraPtr& g, const std::vector<int>& coords);

SuperModule tensor(const SuperModule& a, const SuperModule& b);
SuperModule dual(const SuperModule& m);
SuperModule parity_shift(const SuperModule& m);
SuperModule transpose_dual(const SuperModule& m);
SuperModule direct_sum(const SuperModule& a, const SuperModule& b);
SuperModule restrict_to_g0(const SuperModule& m);
SuperModule relabel(const SuperModule& m, std::string label);

// ---------------------------------------------------------------- sub and quotient

struct Submodule {
    SuperModule module;
    SparseMatrix inclusion;  // ambient x sub
};

struct QuotientModule {
    SuperModule module;
    SparseMatrix projection;  // quotient x ambient
};

/// Splits vectors into weight/parity components first, so the span must be
/// a graded, weight-stable submodule. Throws if it is not stable.
Submodule submodule(const SuperModule& m, const std::vector<SparseVector>& vectors);
/// Smallest submodule containing the vectors.
Submodule generated_submodule(const SuperModule& m, const std::vector<SparseVector>& vectors);
QuotientModule quotient(const SuperModule& m, const std::vector<SparseVector>& sub_vectors);
/// Splits vectors into their weight/parity components.
std::vector<SparseVector> homogeneous_parts(const SuperModule& m, const std::vector<SparseVector>& vectors);

// ---------------------------------------------------------------- morphisms

/// Basis of Hom(M, N) of the given parity: f rho_M(x) = (-1)^{q|x|} rho_N(x) f.
/// even_only restricts the equations to the even part (Hom over g_0).
std::vector<SparseMatrix> hom_basis(const SuperModule& m, const SuperModule& n, Parity q, bool even_only = false);
int hom_dim(const SuperModule& m, const SuperModule& n, bool even_only = false);

/// Even isomorphism test by seeded random elements of Hom. With
/// allow_parity_shift, an odd isomorphism (M ~ Pi N) also counts.
bool is_isomorphic(const SuperModule& m, const SuperModule& n, bool allow_parity_shift = false,
                   std::uint64_t seed = 0);

}  // namespace superhom
