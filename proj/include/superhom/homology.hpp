#pragma once

// Koszul and relative resolutions, relative Ext, minimal projective
// resolutions and complexity.

#include "superhom/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superhom {

struct HomologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- Koszul

/// Terms S^{s-p}_sup(V) (x) Lambda^p_sup(V) for p = 0..s, with
/// S_sup(V) = S(V_0) (x) Lambda(V_1) and Lambda_sup(V) = Lambda(V_0) (x) S(V_1).
Complex super_koszul(const SuperSpace& v, int s);
int super_symmetric_dim(int even, int odd, int k);
int super_exterior_dim(int even, int odd, int k);

struct ExactnessCertificate {
    std::map<int, ParityDims> homology;
    bool exact = true;  // every listed degree has zero homology
};
/// Homology in degrees [from, to]; the complex's other degrees are ignored.
ExactnessCertificate check_exactness(const Complex& c, int from, int to);

// ---------------------------------------------------------------- relative resolution

/// S^p(g_1bar) as a module over the even part (odd elements act by zero).
SuperModule odd_symmetric_power(const AlgebraPtr& g, int p);

struct RelativeResolution {
    Complex complex;           // D(M)_p in degrees 0..n_max
    SparseMatrix augmentation;  // D(M)_0 -> M
    std::vector<int> term_dims;
};

/// D(M)_p = (U(g) (x)_{U(g_0)} S^p(g_1bar)) (x) M on Lambda(g_1bar) (x) S^p (x) M.
RelativeResolution relative_resolution(const SuperModule& m, int n_max);
/// The g-module D_p = Ind(S^p(g_1bar)) and the map D_p -> D_{p-1}.
SuperModule koszul_induced_term(const AlgebraPtr& g, int p);
SparseMatrix koszul_induced_differential(const AlgebraPtr& g, int p);

struct ResolutionExactness {
    std::map<int, ParityDims> homology;  // degrees 1..n_max-1
    int cokernel_dim = 0;                // dim H_0 = dim coker(d_1)
    bool augmentation_ok = false;        // surjective and kills im d_1
    bool exact = false;
};
ResolutionExactness check_exactness(const RelativeResolution& r, int module_dim);

// ---------------------------------------------------------------- relative Ext

struct ExtTable {
    std::vector<ParityDims> degrees;  // index d = Ext^d
    int total(int d) const { return degrees[static_cast<std::size_t>(d)].total(); }
};

/// Cohomology of C^p = Hom_{g_0}(S^p(g_1bar) (x) M, N).
ExtTable relative_ext(const SuperModule& m, const SuperModule& n, int d_max);

// ---------------------------------------------------------------- projective covers

/// Indecomposable projective cover of L(coords): the summand of Ind(L_0)
/// mapping onto L. Cached per algebra.
const SuperModule& projective_indecomposable(const AlgebraPtr& g, const std::vector<int>& coords);

struct ProjectiveCover {
    SuperModule cover;
    SparseMatrix surjection;            // M x cover
    std::vector<std::string> summands;  // "P(1|-1)", "PiP(0|0)", ...
};
ProjectiveCover projective_cover(const SuperModule& m);
SuperModule syzygy(const SuperModule& m);

// ---------------------------------------------------------------- complexity

struct ComplexityEstimate {
    int c = 0;
    Scalar constant = 0;  // max of dims_t / t^(c-1) over the sequence
    int window_begin = 0, window_end = 0;  // last-quarter window, t = index + 1
    bool low_confidence = false;
    std::string evidence;
};

/// Smallest c whose ratios dims_t / t^(c-1) (t = 1, 2, ...) stay within a
/// factor 2 over the last quarter and grow at most like t^(1/2) over the second
/// half. An eventually zero sequence has c = 0.
ComplexityEstimate complexity_estimate(const std::vector<int>& dims);

struct ResolutionStep {
    std::vector<std::string> summands;
    int dim = 0;
    ParityDims parity_dims;
};

struct ResolutionReport {
    std::string algebra, module;
    std::vector<ResolutionStep> steps;  // P_0 .. P_{n_max}, zero-padded after a projective syzygy
    int n_max = 0;
    ComplexityEstimate complexity;
    bool minimal = true;
    std::vector<int> dims() const;
};

/// Minimal projective resolution through P_{n_max}. Syzygies Omega^0..Omega^{n+1}
/// are returned through `syzygies` when given.
ResolutionReport minimal_resolution(const SuperModule& m, int n_max, std::vector<SuperModule>* syzygies = nullptr);

bool is_projective(const SuperModule& m);
/// Indices i < j <= n_max with Omega^i M isomorphic to Omega^j M or to its
/// parity shift; empty if none or if M is projective.
std::optional<std::pair<int, int>> find_period(const SuperModule& m, int n_max);
bool is_periodic(const SuperModule& m, int n_max);

/// dim Lambda(g_1bar) * binom(N + p - 1, p) * dim M with N = dim g_1bar.
long relative_term_dim(const LieSuperalgebra& g, int p, int module_dim);

// ---------------------------------------------------------------- Cartan window

struct CartanWindow {
    std::vector<std::vector<int>> weights;
    std::vector<std::vector<int>> matrix;  // [P(weights[i]) : L(weights[j])]
    std::vector<bool> complete;            // every factor of P(weights[i]) lies in the window
    std::vector<int> interior;             // indices with complete rows
    std::vector<int> block;                // Ext^1-linkage class per weight
    bool symmetric = false;                // on the interior
};

/// Composition multiplicities are counted up to parity shift, as
/// dim Hom(layer, L) / kappa_L over the radical layers.
CartanWindow cartan_window(const AlgebraPtr& g, const std::vector<std::vector<int>>& weights);
/// [M : L(mu)] up to parity for each mu, via radical layers.
std::vector<int> composition_multiplicities(const SuperModule& m, const std::vector<std::vector<int>>& weights);

}  // namespace superhom
