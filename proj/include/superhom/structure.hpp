#pragma once

// Radical layers, simple modules and direct-sum decompositions.

#include "superhom/supermodule.hpp"

#include <optional>
#include <vector>

namespace superhom {

/// rad(M) = J(A) M with A the image of U(g) in End(M) and J(A) found by the
/// trace-form criterion.
Subspace radical_trace(const SuperModule& m);
/// Layers rad^k M / rad^{k+1} M, top first.
std::vector<SuperModule> radical_filtration(const SuperModule& m);
SuperModule head(const SuperModule& m);
SuperModule socle(const SuperModule& m);

/// Simple module of highest weight coords (gl(m|n) coordinates, or the
/// I-eigenvalue for q(1)). Type I: head of the Kac module. Cached per algebra.
const SuperModule& simple_module(const AlgebraPtr& g, const std::vector<int>& coords);

/// rad(M) as the common kernel of all maps M -> L(mu), over every dominant
/// weight mu of M. Agrees with radical_trace; much cheaper on large modules.
Subspace radical_via_simples(const SuperModule& m);

/// Dominant weights of M in gl(m|n) coordinates (gl and q(1) only).
std::vector<std::vector<int>> dominant_weights(const SuperModule& m);

struct SimpleInfo {
    std::vector<int> weight;
    int kappa = 1;        // dim Hom(S, S), both parities
    int atypicality = 0;  // gl family only
};
SimpleInfo simple_info(const AlgebraPtr& g, const std::vector<int>& coords);

/// Number of odd positive roots e_i - d_j with (lambda + rho, e_i - d_j) = 0,
/// for the supertrace form and rho = rho_0 - rho_1.
int atypicality(const LieSuperalgebra& g, const std::vector<int>& coords);

struct Summand {
    SuperModule module;
    SparseMatrix inclusion;   // ambient x summand
    SparseMatrix projection;  // summand x ambient, projection . inclusion = 1
};

/// Splits M along idempotents of the even endomorphism algebra. Throws
/// ModuleError("split blocked over Q") if a split needs irrational eigenvalues.
std::vector<Summand> decompose_into_indecomposables(const SuperModule& m, std::uint64_t seed = 0);

/// dim End(M)/rad End(M) over the even endomorphisms; 1 means indecomposable.
int endomorphism_top_dim(const SuperModule& m);

}  // namespace superhom
