#include "superhom/varieties.hpp"

#include <algorithm>

namespace superhom {

namespace {

bool square_zero(const LieSuperalgebra& g, const SparseVector& x) { return g.bracket(x, x).empty(); }

SparseVector from_matrix(const LieSuperalgebra& g, const SparseMatrix& mat) {
    auto c = g.coordinates(mat);
    if (!c) throw VarietyError("representative is not in " + g.name());
    return *c;
}

void add_stratum(OrbitCatalog& cat, const LieSuperalgebra& g, SparseVector rep) {
    if (!square_zero(g, rep)) throw VarietyError("orbit representative with [x,x] != 0");
    OrbitStratum s;
    s.side = cat.side;
    s.rank = odd_block_rank(g, rep, cat.side);
    s.representative = std::move(rep);
    s.closure_order = static_cast<int>(cat.strata.size());
    cat.strata.push_back(std::move(s));
}

bool on_side(const LieSuperalgebra& g, const SparseVector& x, int side) {
    if (x.empty() || !g.type_one()) return false;
    return std::all_of(x.begin(), x.end(), [&](const auto& e) { return g.zgrade(e.first) == side; });
}

}  // namespace

OrbitCatalog orbit_representatives(const LieSuperalgebra& g, int side) {
    if (side != 1 && side != -1) throw VarietyError("side must be +1 or -1");
    if (!g.type_one()) throw VarietyError(g.name() + " has no Z-grading; no orbit catalog");
    OrbitCatalog cat;
    cat.algebra = g.name();
    cat.side = side;
    const int d = g.matrix_size(), m = g.matrix_even_rows();
    switch (g.family()) {
        case Family::gl:
        case Family::sl:
        case Family::psl: {
            int top = std::min(g.m(), g.n());
            if (g.family() == Family::psl) {
                top -= 1;
                cat.note = "full-rank orbits form a one-parameter family whose closures contain the rank-1 stratum; "
                           "a full-rank element acts freely exactly when a rank-1 element does";
            }
            for (int r = 0; r <= top; ++r) {
                SparseMatrix x(d, d);
                for (int k = 0; k < r; ++k) side > 0 ? x.set(k, m + k, 1) : x.set(m + k, k, 1);
                add_stratum(cat, g, from_matrix(g, x));
            }
            break;
        }
        case Family::p:
        case Family::ptilde: {
            const int n = g.m();
            if (side > 0) {
                // g_1 = S^2(V): symmetric partial identities
                for (int r = 0; r <= n; ++r) {
                    SparseMatrix x(d, d);
                    for (int k = 0; k < r; ++k) x.set(k, n + k, 1);
                    add_stratum(cat, g, from_matrix(g, x));
                }
            } else {
                // g_-1 = Lambda^2(V*): standard alternating forms of rank 2k
                for (int k = 0; 2 * k <= n; ++k) {
                    SparseMatrix x(d, d);
                    for (int b = 0; b < k; ++b) {
                        x.set(n + 2 * b, 2 * b + 1, 1);
                        x.set(n + 2 * b + 1, 2 * b, -1);
                    }
                    add_stratum(cat, g, from_matrix(g, x));
                }
            }
            if (g.family() == Family::p)
                cat.note = "g_0 = sl(n): full-rank forms come in a determinant family; one determinant-1 representative stands for it";
            break;
        }
        case Family::osp: {
            add_stratum(cat, g, {});
            add_stratum(cat, g, {{g.degree_basis(side).front(), 1}});
            cat.note = "G_0 has two orbits on g_{+-1}: zero and the nonzero vectors";
            break;
        }
        default:
            throw VarietyError("no orbit catalog for " + g.name());
    }
    return cat;
}

bool is_projective_over_point(const SuperModule& m, const SparseVector& x) {
    const auto& g = m.algebra();
    if (!square_zero(g, x)) throw VarietyError("point with [x,x] != 0");
    if (m.dim() % 2) return false;
    return 2 * rank(m.act(x)) == m.dim();
}

SupportResult support_rank(const SuperModule& m, int side) {
    const auto& g = m.algebra();
    if (!g.type_one()) throw VarietyError(g.name() + " is not of type I");
    SupportResult res;
    res.side = side;
    auto cat = orbit_representatives(g, side);
    std::string cert = "partial-identity representatives on g_" + std::string(side > 0 ? "1" : "-1") + ":";
    for (const auto& s : cat.strata) {
        if (s.rank == 0) continue;
        bool proj = is_projective_over_point(m, s.representative);
        res.verdicts.emplace_back(s.rank, proj);
        if (!proj) res.stratum_rank = std::max(res.stratum_rank, s.rank);
        cert += " r=" + std::to_string(s.rank) + (proj ? " free" : " not free");
    }
    res.certificate = cert;
    return res;
}

bool has_kac_filtration(const SuperModule& m) { return support_rank(m, -1).stratum_rank == 0; }
bool has_dual_kac_filtration(const SuperModule& m) { return support_rank(m, 1).stratum_rank == 0; }
bool is_tilting(const SuperModule& m) { return has_kac_filtration(m) && has_dual_kac_filtration(m); }

ProjectivityVerdict is_projective_via_varieties(const SuperModule& m) {
    ProjectivityVerdict v;
    const auto& g = m.algebra();
    if (g.has_tau() && is_isomorphic(m, transpose_dual(m))) {
        v.one_sided = true;
        auto plus = support_rank(m, 1);
        v.projective = plus.stratum_rank == 0;
        v.certificate = "M^tau = M; one-sided test on g_1: " + plus.certificate;
        return v;
    }
    auto plus = support_rank(m, 1), minus = support_rank(m, -1);
    v.projective = plus.stratum_rank == 0 && minus.stratum_rank == 0;
    v.certificate = plus.certificate + "; " + minus.certificate;
    return v;
}

AssociatedVarietyCheck associated_variety_verdicts(const SuperModule& m, const std::vector<SparseVector>& samples) {
    const auto& g = m.algebra();
    AssociatedVarietyCheck out;
    int plus = -1, minus = -1;
    if (g.type_one()) {
        plus = support_rank(m, 1).stratum_rank;
        minus = support_rank(m, -1).stratum_rank;
    }
    for (const auto& x : samples) {
        if (!square_zero(g, x)) throw VarietyError("sample with [x,x] != 0");
        if (x.empty()) continue;
        PointVerdict pv{x, !is_projective_over_point(m, x)};
        if (pv.in_xm) out.empty = false;
        for (int side : {1, -1}) {
            if (!on_side(g, x, side)) continue;
            bool in_support = odd_block_rank(g, x, side) <= (side > 0 ? plus : minus);
            if (in_support != pv.in_xm) out.matches_supports = false;
        }
        out.verdicts.push_back(std::move(pv));
    }
    return out;
}

DualityCertificate support_duality_check(const SuperModule& m) {
    if (!m.algebra().has_tau()) throw VarietyError(m.algebra().name() + " has no strong duality");
    DualityCertificate c;
    SuperModule t = transpose_dual(m);
    c.plus = support_rank(m, 1).stratum_rank;
    c.minus = support_rank(m, -1).stratum_rank;
    c.tau_plus = support_rank(t, 1).stratum_rank;
    c.tau_minus = support_rank(t, -1).stratum_rank;
    c.ok = c.tau_plus == c.minus && c.tau_minus == c.plus;
    return c;
}

}  // namespace superhom
