#pragma once

// Rank and support varieties over g_{+-1}, orbit catalogs and the associated
// variety X_M.

#include "superhom/homology.hpp"

#include <string>
#include <vector>

namespace superhom {

struct VarietyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrbitStratum {
    int side = 1;  // +1, -1
    int rank = 0;  // matrix rank of the odd block
    SparseVector representative;
    int closure_order = 0;  // position in the Hasse chain, 0 = {0}
};

struct OrbitCatalog {
    std::string algebra;
    int side = 1;
    std::vector<OrbitStratum> strata;
    bool chain = true;  // closure order is total
    std::string note;
};

/// Minimal orbit representatives on g_side: partial identities for gl/sl/psl,
/// symmetric partial identities (+1) and standard alternating forms (-1) for
/// p(n) and ptilde(n), and {0} plus one nonzero orbit for osp(2|2n).
OrbitCatalog orbit_representatives(const LieSuperalgebra& g, int side);

/// M restricted to U(<x>) is free, i.e. rank(x on M) = dim M / 2. Requires [x,x] = 0.
bool is_projective_over_point(const SuperModule& m, const SparseVector& x);

struct SupportResult {
    int side = 1;
    int stratum_rank = 0;
    std::vector<std::pair<int, bool>> verdicts;  // (rank r, projective at the rank-r representative)
    std::string certificate;
};

/// V_{g_side}(M) as the closure of the largest rank stratum on which M is not free.
SupportResult support_rank(const SuperModule& m, int side);

bool has_kac_filtration(const SuperModule& m);
bool has_dual_kac_filtration(const SuperModule& m);
bool is_tilting(const SuperModule& m);

struct ProjectivityVerdict {
    bool projective = false;
    bool one_sided = false;  // M^tau = M, so only the +1 side was consulted
    std::string certificate;
};
ProjectivityVerdict is_projective_via_varieties(const SuperModule& m);

struct PointVerdict {
    SparseVector x;
    bool in_xm = false;  // Ker(x)/Im(x) != 0
};

struct AssociatedVarietyCheck {
    std::vector<PointVerdict> verdicts;  // nonzero samples only; 0 lies in X_M by definition
    bool matches_supports = true;        // X_M meets g_{+-1} exactly in the support strata
    bool empty = true;                   // no nonzero sample lies in X_M
};

AssociatedVarietyCheck associated_variety_verdicts(const SuperModule& m, const std::vector<SparseVector>& samples);

struct DualityCertificate {
    int plus = 0, minus = 0;          // stratum ranks of M
    int tau_plus = 0, tau_minus = 0;  // stratum ranks of M^tau
    bool ok = false;
};
/// V_{g_{+-1}}(M^tau) = tau(V_{g_{-+1}}(M)) at the level of stratum ranks.
DualityCertificate support_duality_check(const SuperModule& m);

}  // namespace superhom
