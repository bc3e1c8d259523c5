#include "superhom/supermodule.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <random>
#include <set>

namespace superhom {

namespace {

bool is_cartan(const LieSuperalgebra& g, int x) {
    return std::find(g.cartan().begin(), g.cartan().end(), x) != g.cartan().end();
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> r;
    for (int i = 0; i < n; ++i) r.push_back(prefix + std::to_string(i));
    return r;
}

std::vector<Parity> parities_of(const SuperModule& m) {
    std::vector<Parity> p;
    for (int i = 0; i < m.dim(); ++i) p.push_back(m.parity(i));
    return p;
}

std::vector<std::string> labels_of(const SuperModule& m) {
    std::vector<std::string> l;
    for (int i = 0; i < m.dim(); ++i) l.push_back(m.space()[i].label);
    return l;
}

void require_same_algebra(const SuperModule& a, const SuperModule& b) {
    if (a.algebra_ptr() != b.algebra_ptr() && a.algebra().name() != b.algebra().name())
        throw ModuleError("modules over different algebras");
}

// Outer tensor of two gl(k) representations, the even part of gl(m|n).
struct GlRep {
    int dim = 0;
    int k = 0;
    std::vector<SparseMatrix> e;  // e[a*k+b] = action of E_ab
    const SparseMatrix& at(int a, int b) const { return e[static_cast<std::size_t>(a * k + b)]; }
};

// Gelfand-Tsetlin realization of the simple gl(k)-module, k <= 3.
GlRep gl_simple(const std::vector<int>& lambda) {
    const int k = static_cast<int>(lambda.size());
    if (k > 3) throw ModuleError("simple_g0 supports gl(k) blocks with k <= 3");
    GlRep rep;
    rep.k = k;
    using Pattern = std::vector<std::vector<int>>;  // rows[r] has r+1 entries, rows[k-1] = lambda
    std::vector<Pattern> pats;
    Pattern cur(static_cast<std::size_t>(k));
    if (k == 0) {
        rep.dim = 1;
        return rep;
    }
    cur[static_cast<std::size_t>(k - 1)] = lambda;
    std::function<void(int)> fill = [&](int r) {
        if (r < 0) {
            pats.push_back(cur);
            return;
        }
        const auto& up = cur[static_cast<std::size_t>(r + 1)];
        std::vector<int> row(static_cast<std::size_t>(r + 1));
        std::function<void(int)> entry_at = [&](int i) {
            if (i > r) {
                cur[static_cast<std::size_t>(r)] = row;
                fill(r - 1);
                return;
            }
            for (int v = up[static_cast<std::size_t>(i + 1)]; v <= up[static_cast<std::size_t>(i)]; ++v) {
                row[static_cast<std::size_t>(i)] = v;
                entry_at(i + 1);
            }
        };
        entry_at(0);
    };
    fill(k - 2);
    std::sort(pats.begin(), pats.end(), std::greater<>());
    std::map<Pattern, int> index;
    for (std::size_t i = 0; i < pats.size(); ++i) index[pats[i]] = static_cast<int>(i);
    rep.dim = static_cast<int>(pats.size());
    rep.e.assign(static_cast<std::size_t>(k * k), SparseMatrix(rep.dim, rep.dim));

    auto l = [](const Pattern& p, int row1, int i1) {  // 1-based row and entry
        return Scalar(p[static_cast<std::size_t>(row1 - 1)][static_cast<std::size_t>(i1 - 1)] - i1 + 1);
    };
    auto sum_row = [](const Pattern& p, int row1) {
        int s = 0;
        if (row1 >= 1)
            for (int v : p[static_cast<std::size_t>(row1 - 1)]) s += v;
        return s;
    };
    for (const auto& p : pats) {
        int col = index[p];
        for (int r = 1; r <= k; ++r) rep.e[static_cast<std::size_t>((r - 1) * k + (r - 1))].set(col, col, sum_row(p, r) - sum_row(p, r - 1));
        for (int r = 1; r < k; ++r) {
            for (int i = 1; i <= r; ++i) {
                Scalar den = 1;
                for (int j = 1; j <= r; ++j)
                    if (j != i) den *= l(p, r, i) - l(p, r, j);
                // raising E_{r,r+1}
                Pattern q = p;
                q[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - 1)] += 1;
                if (index.count(q)) {
                    Scalar num = 1;
                    for (int j = 1; j <= r + 1; ++j) num *= l(p, r, i) - l(p, r + 1, j);
                    rep.e[static_cast<std::size_t>((r - 1) * k + r)].add(index[q], col, -num / den);
                }
                // lowering E_{r+1,r}
                q = p;
                q[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - 1)] -= 1;
                if (index.count(q)) {
                    Scalar num = 1;
                    for (int j = 1; j <= r - 1; ++j) num *= l(p, r, i) - l(p, r - 1, j);
                    rep.e[static_cast<std::size_t>(r * k + (r - 1))].add(index[q], col, num / den);
                }
            }
        }
    }
    if (k == 3) {
        auto comm = [](const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; };
        rep.e[2] = comm(rep.at(0, 1), rep.at(1, 2));
        rep.e[6] = comm(rep.at(2, 1), rep.at(1, 0));
    }
    return rep;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ja = 0; ja < a.cols(); ++ja)
        for (int jb = 0; jb < b.cols(); ++jb) {
            auto& out = r.col(ja * b.cols() + jb);
            for (const auto& [ia, x] : a.col(ja))
                for (const auto& [ib, y] : b.col(jb)) out.emplace_back(ia * b.rows() + ib, x * y);
        }
    return r;
}

}  // namespace

// ---------------------------------------------------------------- SuperModule

SuperModule::SuperModule(AlgebraPtr g, std::vector<std::string> labels, std::vector<Parity> parities,
                         std::vector<SparseMatrix> action, std::string label, bool g0_only)
    : g_(std::move(g)), action_(std::move(action)), label_(std::move(label)), g0_only_(g0_only) {
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(parities.size()) != n) throw ModuleError("labels and parities differ in length");
    if (static_cast<int>(action_.size()) != g_->dim()) throw ModuleError("one action matrix per basis element required");
    for (const auto& a : action_)
        if (a.rows() != n || a.cols() != n) throw ModuleError("action matrix has the wrong shape");
    std::vector<BasisVector> basis;
    for (int i = 0; i < n; ++i) {
        std::vector<int> w;
        for (int h : g_->cartan()) {
            const auto& col = action_[static_cast<std::size_t>(h)].col(i);
            if (col.size() > 1 || (col.size() == 1 && col[0].first != i))
                throw ModuleError("Cartan element " + g_->label(h) + " does not act diagonally");
            Scalar v = col.empty() ? Scalar(0) : col[0].second;
            if (v.get_den() != 1) throw ModuleError("non-integral weight");
            w.push_back(static_cast<int>(v.get_num().get_si()));
        }
        basis.push_back({labels[static_cast<std::size_t>(i)], parities[static_cast<std::size_t>(i)], Weight(w)});
    }
    space_ = SuperSpace(std::move(basis));
}

SparseMatrix SuperModule::act(const SparseVector& x) const {
    SparseMatrix r(dim(), dim());
    for (const auto& [i, c] : x) r = r + action(i).scaled(c);
    return r;
}

ModuleCertificate verify_module(const SuperModule& m) {
    ModuleCertificate cert;
    const auto& g = m.algebra();
    auto relevant = [&](int x) { return !m.g0_only() || g.parity(x) == Parity::even; };
    for (int x = 0; x < g.dim(); ++x) {
        if (!relevant(x)) continue;
        const auto& a = m.action(x);
        for (int j = 0; j < a.cols(); ++j)
            for (const auto& [i, v] : a.col(j))
                if (m.parity(i) != m.parity(j) + g.parity(x)) {
                    cert.ok = false;
                    cert.failure = "parity: " + g.label(x) + " maps " + m.space()[j].label + " to " + m.space()[i].label;
                    return cert;
                }
    }
    for (int x = 0; x < g.dim(); ++x) {
        if (!relevant(x)) continue;
        for (int y = 0; y < g.dim(); ++y) {
            if (!relevant(y)) continue;
            SparseMatrix lhs = m.act(g.bracket(x, y));
            SparseMatrix rhs = m.action(x) * m.action(y) - (m.action(y) * m.action(x)).scaled(koszul_sign(g.parity(x), g.parity(y)));
            ++cert.pairs_checked;
            if (!(lhs == rhs)) {
                cert.ok = false;
                cert.failure = "bracket: [" + g.label(x) + ", " + g.label(y) + "]";
                return cert;
            }
        }
    }
    return cert;
}

Character character(const SuperModule& m) {
    Character c;
    for (int i = 0; i < m.dim(); ++i) ++c[{m.weight(i), m.parity(i)}];
    return c;
}

Character character_product(const Character& a, const Character& b) {
    Character c;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) c[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    return c;
}

Character parity_flip(const Character& c) {
    Character r;
    for (const auto& [k, v] : c) r[{k.first, k.second + Parity::odd}] += v;
    return r;
}

// ---------------------------------------------------------------- constructions

SuperModule trivial_module(const AlgebraPtr& g) {
    return SuperModule(g, {"1"}, {Parity::even}, std::vector<SparseMatrix>(static_cast<std::size_t>(g->dim()), SparseMatrix(1, 1)),
                       "trivial");
}

SuperModule simple_g0(const AlgebraPtr& g, const std::vector<int>& coords) {
    if (!g->has_modules()) throw ModuleError(g->name() + " has no module machinery");
    if (!g->is_dominant(coords)) throw ModuleError("weight " + g->format_coords(coords) + " is not dominant for the even part");
    std::vector<SparseMatrix> act(static_cast<std::size_t>(g->dim()));
    std::string label = "L0" + g->format_coords(coords);
    if (g->family() == Family::q) {
        for (int x = 0; x < g->dim(); ++x) act[static_cast<std::size_t>(x)] = SparseMatrix(1, 1);
        act[0].set(0, 0, coords[0]);
        return SuperModule(g, {"v0"}, {Parity::even}, act, label, true);
    }
    const int m = g->matrix_even_rows(), d = g->matrix_size();
    GlRep r1 = gl_simple(std::vector<int>(coords.begin(), coords.begin() + m));
    GlRep r2 = gl_simple(std::vector<int>(coords.begin() + m, coords.end()));
    const int dim = r1.dim * r2.dim;
    SparseMatrix i1 = SparseMatrix::identity(r1.dim), i2 = SparseMatrix::identity(r2.dim);
    for (int x = 0; x < g->dim(); ++x) {
        SparseMatrix a(dim, dim);
        if (g->parity(x) == Parity::even) {
            const auto& mat = g->realization(x);
            for (int b = 0; b < d; ++b)
                for (const auto& [row, c] : mat.col(b)) {
                    if (row < m)
                        a = a + kron(r1.at(row, b), i2).scaled(c);
                    else
                        a = a + kron(i1, r2.at(row - m, b - m)).scaled(c);
                }
        }
        act[static_cast<std::size_t>(x)] = std::move(a);
    }
    return SuperModule(g, numbered("v", dim), std::vector<Parity>(static_cast<std::size_t>(dim), Parity::even), act, label, true);
}

SuperModule delta_module(const AlgebraPtr& g) {
    std::vector<SparseMatrix> act(static_cast<std::size_t>(g->dim()), SparseMatrix(1, 1));
    for (int x : g->even_basis()) {
        Scalar tr = 0;
        for (int y : g->odd_basis()) tr += entry(g->bracket(x, y), y);
        act[static_cast<std::size_t>(x)].set(0, 0, tr);
    }
    return SuperModule(g, {"top"}, {g->delta_parity()}, act, "delta", true);
}

SuperModule induce(const SuperModule& s, const std::vector<int>& complement, const std::string& label) {
    const auto& g = s.algebra();
    const int nc = static_cast<int>(complement.size());
    if (nc > 20) throw ModuleError("induction complement too large");
    std::vector<int> pos(static_cast<std::size_t>(g.dim()), -1);
    for (int k = 0; k < nc; ++k) {
        int z = complement[static_cast<std::size_t>(k)];
        if (g.parity(z) != Parity::odd) throw ModuleError("induction complement must be odd");
        pos[static_cast<std::size_t>(z)] = k;
    }
    const int ds = s.dim();
    const long total = (1L << nc) * ds;
    std::vector<std::optional<SparseVector>> memo(static_cast<std::size_t>(g.dim() * total));

    std::vector<SparseVector> half_square(static_cast<std::size_t>(g.dim()));
    for (int z : complement) half_square[static_cast<std::size_t>(z)] = scaled(g.bracket(z, z), Scalar(1, 2));

    std::function<SparseVector(int, int)> act_basis;
    auto act_vec = [&](const SparseVector& x, const SparseVector& v) {
        SparseVector r;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : v) add_scaled(r, act_basis(i, j), a * b);
        return r;
    };
    auto act_by = [&](int z, const SparseVector& v) {
        SparseVector r;
        for (const auto& [j, b] : v) add_scaled(r, act_basis(z, j), b);
        return r;
    };
    act_basis = [&](int z, int idx) -> SparseVector {
        auto& slot = memo[static_cast<std::size_t>(z * total + idx)];
        if (slot) return *slot;
        const int mask = idx / ds, t = idx % ds;
        const int pz = pos[static_cast<std::size_t>(z)];
        SparseVector r;
        if (mask == 0) {
            if (pz >= 0) {
                r = {{(1 << pz) * ds + t, 1}};
            } else {
                for (const auto& [row, v] : s.action(z).col(t)) r.emplace_back(row, v);
            }
        } else {
            const int k1 = std::countr_zero(static_cast<unsigned>(mask));
            const int y = complement[static_cast<std::size_t>(k1)];
            SparseVector rest{{(mask & ~(1 << k1)) * ds + t, 1}};
            if (pz >= 0 && pz < k1) {
                r = {{(mask | (1 << pz)) * ds + t, 1}};
            } else if (pz == k1) {
                r = act_vec(half_square[static_cast<std::size_t>(z)], rest);
            } else {
                // z y = [z,y] + (-1)^{|z|} y z for odd y
                r = act_vec(g.bracket(z, y), rest);
                Scalar sign = g.parity(z) == Parity::odd ? -1 : 1;
                add_scaled(r, act_by(y, act_basis(z, rest[0].first)), sign);
            }
        }
        slot = r;
        return r;
    };

    std::vector<SparseMatrix> act(static_cast<std::size_t>(g.dim()), SparseMatrix(static_cast<int>(total), static_cast<int>(total)));
    for (int z = 0; z < g.dim(); ++z)
        for (int idx = 0; idx < total; ++idx) act[static_cast<std::size_t>(z)].col(idx) = act_basis(z, idx);

    std::vector<std::string> labels;
    std::vector<Parity> par;
    for (int mask = 0; mask < (1 << nc); ++mask) {
        std::string mono;
        for (int k = 0; k < nc; ++k)
            if (mask >> k & 1) mono += (mono.empty() ? "" : "^") + g.label(complement[static_cast<std::size_t>(k)]);
        if (mono.empty()) mono = "1";
        for (int t = 0; t < ds; ++t) {
            labels.push_back(mono + "|" + s.space()[t].label);
            par.push_back(parity_of(std::popcount(static_cast<unsigned>(mask))) + s.parity(t));
        }
    }
    return SuperModule(s.algebra_ptr(), labels, par, act, label);
}

SuperModule induce_from_g0(const SuperModule& s) {
    return induce(restrict_to_g0(s), s.algebra().odd_basis(), "Ind(" + s.label() + ")");
}

SuperModule coinduce(const SuperModule& s, const std::vector<int>& complement, const std::string& label) {
    return relabel(dual(induce(dual(s), complement, "")), label);
}

SuperModule coinduce_from_g0(const SuperModule& s) {
    return coinduce(restrict_to_g0(s), s.algebra().odd_basis(), "Coind(" + s.label() + ")");
}

namespace {

SuperModule inflate(const SuperModule& s) {
    // Same matrices, now read as a module over g_0 + g_{+-1} with g_{+-1} acting by zero.
    return SuperModule(s.algebra_ptr(), labels_of(s), parities_of(s), s.actions(), s.label(), false);
}

void require_type_one(const AlgebraPtr& g) {
    if (!g->type_one()) throw ModuleError(g->name() + " is not of type I");
    if (!g->has_modules()) throw ModuleError(g->name() + " has no module machinery");
}

}  // namespace

SuperModule induce_kac(const AlgebraPtr& g, const std::vector<int>& coords) {
    require_type_one(g);
    return induce(inflate(simple_g0(g, coords)), g->degree_basis(-1), "K" + g->format_coords(coords));
}

SuperModule coinduce_kac(const AlgebraPtr& g, const std::vector<int>& coords) {
    require_type_one(g);
    return coinduce(inflate(simple_g0(g, coords)), g->degree_basis(1), "K-" + g->format_coords(coords));
}

// ---------------------------------------------------------------- functors

SuperModule tensor(const SuperModule& a, const SuperModule& b) {
    require_same_algebra(a, b);
    const auto& g = a.algebra();
    const int da = a.dim(), db = b.dim();
    std::vector<std::string> labels;
    std::vector<Parity> par;
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            labels.push_back(a.space()[i].label + "(x)" + b.space()[j].label);
            par.push_back(a.parity(i) + b.parity(j));
        }
    std::vector<SparseMatrix> act;
    for (int x = 0; x < g.dim(); ++x) {
        SparseMatrix r(da * db, da * db);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) {
                auto& out = r.col(i * db + j);
                for (const auto& [k, v] : a.action(x).col(i)) out.emplace_back(k * db + j, v);
                int s = koszul_sign(g.parity(x), a.parity(i));
                for (const auto& [k, v] : b.action(x).col(j)) out.emplace_back(i * db + k, v * s);
                normalize(out);
            }
        act.push_back(std::move(r));
    }
    return SuperModule(a.algebra_ptr(), labels, par, act, "(" + a.label() + ")(x)(" + b.label() + ")", a.g0_only() || b.g0_only());
}

SuperModule dual(const SuperModule& m) {
    const auto& g = m.algebra();
    std::vector<std::string> labels;
    for (int i = 0; i < m.dim(); ++i) labels.push_back(m.space()[i].label + "*");
    std::vector<SparseMatrix> act;
    for (int x = 0; x < g.dim(); ++x) {
        // coefficient of f_a in x.f_b is -(-1)^{|x||b|} rho(x)_{b,a}
        SparseMatrix t = m.action(x).transpose();
        for (int b = 0; b < t.cols(); ++b) {
            Scalar s = -koszul_sign(g.parity(x), m.parity(b));
            for (auto& [a, v] : t.col(b)) v *= s;
        }
        act.push_back(std::move(t));
    }
    return SuperModule(m.algebra_ptr(), labels, parities_of(m), act, "dual(" + m.label() + ")", m.g0_only());
}

SuperModule parity_shift(const SuperModule& m) {
    const auto& g = m.algebra();
    std::vector<Parity> par;
    std::vector<std::string> labels;
    for (int i = 0; i < m.dim(); ++i) {
        par.push_back(m.parity(i) + Parity::odd);
        labels.push_back(m.space()[i].label);
    }
    std::vector<SparseMatrix> act;
    for (int x = 0; x < g.dim(); ++x) act.push_back(g.parity(x) == Parity::odd ? m.action(x).scaled(-1) : m.action(x));
    return SuperModule(m.algebra_ptr(), labels, par, act, "pi(" + m.label() + ")", m.g0_only());
}

SuperModule transpose_dual(const SuperModule& m) {
    const auto& g = m.algebra();
    if (!g.has_tau()) throw ModuleError(g.name() + " has no strong duality");
    std::vector<std::string> labels;
    for (int i = 0; i < m.dim(); ++i) labels.push_back(m.space()[i].label + "^t");
    std::vector<SparseMatrix> act;
    for (int x = 0; x < g.dim(); ++x) {
        // coefficient of f_a in x.f_b is (-1)^{|x||b|} rho(tau x)_{b,a}
        SparseMatrix t = m.act(g.tau_basis(x)).transpose();
        for (int b = 0; b < t.cols(); ++b) {
            Scalar s = koszul_sign(g.parity(x), m.parity(b));
            for (auto& [a, v] : t.col(b)) v *= s;
        }
        act.push_back(std::move(t));
    }
    return SuperModule(m.algebra_ptr(), labels, parities_of(m), act, "tau(" + m.label() + ")", m.g0_only());
}

SuperModule direct_sum(const SuperModule& a, const SuperModule& b) {
    require_same_algebra(a, b);
    const int da = a.dim(), db = b.dim();
    std::vector<std::string> labels;
    std::vector<Parity> par;
    for (int i = 0; i < da; ++i) {
        labels.push_back("1:" + a.space()[i].label);
        par.push_back(a.parity(i));
    }
    for (int j = 0; j < db; ++j) {
        labels.push_back("2:" + b.space()[j].label);
        par.push_back(b.parity(j));
    }
    std::vector<SparseMatrix> act;
    for (int x = 0; x < a.algebra().dim(); ++x) {
        SparseMatrix r(da + db, da + db);
        for (int i = 0; i < da; ++i) r.col(i) = a.action(x).col(i);
        for (int j = 0; j < db; ++j)
            for (const auto& [k, v] : b.action(x).col(j)) r.col(da + j).emplace_back(da + k, v);
        act.push_back(std::move(r));
    }
    return SuperModule(a.algebra_ptr(), labels, par, act, a.label() + "+" + b.label(), a.g0_only() || b.g0_only());
}

SuperModule restrict_to_g0(const SuperModule& m) {
    const auto& g = m.algebra();
    std::vector<SparseMatrix> act;
    for (int x = 0; x < g.dim(); ++x) act.push_back(g.parity(x) == Parity::even ? m.action(x) : SparseMatrix(m.dim(), m.dim()));
    return SuperModule(m.algebra_ptr(), labels_of(m), parities_of(m), act, m.label(), true);
}

SuperModule relabel(const SuperModule& m, std::string label) {
    return SuperModule(m.algebra_ptr(), labels_of(m), parities_of(m), m.actions(), std::move(label), m.g0_only());
}

// ---------------------------------------------------------------- sub and quotient

std::vector<SparseVector> homogeneous_parts(const SuperModule& m, const std::vector<SparseVector>& vectors) {
    std::vector<SparseVector> out;
    for (const auto& v : vectors) {
        std::map<std::pair<Weight, Parity>, SparseVector> parts;
        for (const auto& [i, x] : v) parts[{m.weight(i), m.parity(i)}].emplace_back(i, x);
        for (auto& [k, p] : parts) out.push_back(std::move(p));
    }
    return out;
}

namespace {

Submodule build_submodule(const SuperModule& m, const Subspace& s) {
    const auto& g = m.algebra();
    std::vector<SparseMatrix> act;
    for (int x = 0; x < g.dim(); ++x) {
        SparseMatrix a(s.dim(), s.dim());
        if (!(m.g0_only() && g.parity(x) == Parity::odd)) {
            for (int k = 0; k < s.dim(); ++k) {
                SparseVector img = m.action(x).apply(s.basis()[static_cast<std::size_t>(k)]);
                if (!s.reduce(img).empty()) throw ModuleError("subspace is not stable under " + g.label(x));
                a.col(k) = from_dense(s.coordinates(img));
            }
        }
        act.push_back(std::move(a));
    }
    std::vector<Parity> par;
    for (const auto& b : s.basis()) par.push_back(m.parity(b.front().first));
    return {SuperModule(m.algebra_ptr(), numbered("w", s.dim()), par, act, "sub(" + m.label() + ")", m.g0_only()), s.as_matrix()};
}

}  // namespace

Submodule submodule(const SuperModule& m, const std::vector<SparseVector>& vectors) {
    return build_submodule(m, Subspace::span(homogeneous_parts(m, vectors), m.dim()));
}

Submodule generated_submodule(const SuperModule& m, const std::vector<SparseVector>& vectors) {
    const auto& g = m.algebra();
    SpanBuilder span(m.dim());
    std::vector<SparseVector> queue;
    for (auto& v : homogeneous_parts(m, vectors))
        if (span.add(v)) queue.push_back(std::move(v));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int x = 0; x < g.dim(); ++x) {
            if (m.g0_only() && g.parity(x) == Parity::odd) continue;
            SparseVector img = m.action(x).apply(queue[head]);
            if (img.empty()) continue;
            for (auto& p : homogeneous_parts(m, {img}))
                if (span.add(p)) queue.push_back(std::move(p));
        }
    }
    return build_submodule(m, span.subspace());
}

QuotientModule quotient(const SuperModule& m, const std::vector<SparseVector>& sub_vectors) {
    const auto& g = m.algebra();
    Subspace s = Subspace::span(homogeneous_parts(m, sub_vectors), m.dim());
    std::vector<int> keep(static_cast<std::size_t>(m.dim()), -1);
    std::vector<char> is_pivot(static_cast<std::size_t>(m.dim()), 0);
    for (int p : s.pivots()) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<int> rest;
    for (int i = 0; i < m.dim(); ++i)
        if (!is_pivot[static_cast<std::size_t>(i)]) {
            keep[static_cast<std::size_t>(i)] = static_cast<int>(rest.size());
            rest.push_back(i);
        }
    const int dq = static_cast<int>(rest.size());
    auto project = [&](const SparseVector& v) {
        SparseVector r;
        for (const auto& [i, x] : s.reduce(v)) r.emplace_back(keep[static_cast<std::size_t>(i)], x);
        return r;
    };
    SparseMatrix proj(dq, m.dim());
    for (int j = 0; j < m.dim(); ++j) proj.col(j) = project({{j, 1}});
    std::vector<SparseMatrix> act;
    for (int x = 0; x < g.dim(); ++x) {
        SparseMatrix a(dq, dq);
        if (!(m.g0_only() && g.parity(x) == Parity::odd)) {
            for (int k = 0; k < dq; ++k) {
                SparseVector img = m.action(x).col(rest[static_cast<std::size_t>(k)]);
                a.col(k) = project(img);
            }
        }
        act.push_back(std::move(a));
    }
    std::vector<std::string> labels;
    std::vector<Parity> par;
    for (int i : rest) {
        labels.push_back(m.space()[i].label);
        par.push_back(m.parity(i));
    }
    return {SuperModule(m.algebra_ptr(), labels, par, act, "quot(" + m.label() + ")", m.g0_only()), proj};
}

// ---------------------------------------------------------------- morphisms

std::vector<SparseMatrix> hom_basis(const SuperModule& m, const SuperModule& n, Parity q, bool even_only) {
    require_same_algebra(m, n);
    const auto& g = m.algebra();
    const int dm = m.dim(), dn = n.dim();
    std::map<std::pair<Weight, Parity>, std::vector<int>> targets;
    for (int i = 0; i < dn; ++i) targets[{n.weight(i), n.parity(i)}].push_back(i);
    std::vector<std::pair<int, int>> unknowns;  // (row in N, column in M)
    for (int j = 0; j < dm; ++j) {
        auto it = targets.find({m.weight(j), m.parity(j) + q});
        if (it == targets.end()) continue;
        for (int i : it->second) unknowns.emplace_back(i, j);
    }
    if (unknowns.empty()) return {};

    std::vector<int> eqs;
    for (int x = 0; x < g.dim(); ++x) {
        if (is_cartan(g, x)) continue;
        if ((even_only || m.g0_only() || n.g0_only()) && g.parity(x) == Parity::odd) continue;
        eqs.push_back(x);
    }
    std::vector<SparseMatrix> rows_m;
    for (int x : eqs) rows_m.push_back(m.action(x).transpose());
    const long block = static_cast<long>(dn) * dm;
    std::vector<SparseVector> cols;
    cols.reserve(unknowns.size());
    for (const auto& [i, j] : unknowns) {
        SparseVector c;
        for (std::size_t e = 0; e < eqs.size(); ++e) {
            const int x = eqs[e];
            const long base = static_cast<long>(e) * block;
            // (f rho_M(x))_{i,j'} picks up rho_M(x)_{j,j'}
            for (const auto& [jp, v] : rows_m[e].col(j)) c.emplace_back(static_cast<int>(base + static_cast<long>(i) * dm + jp), v);
            // -(-1)^{q|x|} (rho_N(x) f)_{i',j} picks up rho_N(x)_{i',i}
            int s = koszul_sign(q, g.parity(x));
            for (const auto& [ip, v] : n.action(x).col(i)) c.emplace_back(static_cast<int>(base + static_cast<long>(ip) * dm + j), -s * v);
        }
        normalize(c);
        cols.push_back(std::move(c));
    }
    const long nrows = static_cast<long>(eqs.size()) * block;
    if (nrows > 2000000000L) throw ModuleError("Hom system too large");
    SparseMatrix sys = SparseMatrix::from_columns(static_cast<int>(std::max(nrows, 1L)), std::move(cols));
    std::vector<SparseMatrix> out;
    for (const auto& k : kernel_basis(sys)) {
        SparseMatrix f(dn, dm);
        for (const auto& [u, v] : k) f.col(unknowns[static_cast<std::size_t>(u)].second).emplace_back(unknowns[static_cast<std::size_t>(u)].first, v);
        for (int j = 0; j < dm; ++j) normalize(f.col(j));
        out.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const SuperModule& m, const SuperModule& n, bool even_only) {
    return static_cast<int>(hom_basis(m, n, Parity::even, even_only).size() + hom_basis(m, n, Parity::odd, even_only).size());
}

bool is_isomorphic(const SuperModule& m, const SuperModule& n, bool allow_parity_shift, std::uint64_t seed) {
    if (m.dim() != n.dim()) return false;
    Character cm = character(m), cn = character(n);
    std::vector<Parity> shifts;
    if (cm == cn) shifts.push_back(Parity::even);
    if (allow_parity_shift && cm == parity_flip(cn)) shifts.push_back(Parity::odd);
    if (m.dim() == 0) return !shifts.empty();
    std::mt19937_64 rng(seed);
    for (Parity q : shifts) {
        auto basis = hom_basis(m, n, q);
        if (basis.empty()) continue;
        for (int trial = 0; trial < 6; ++trial) {
            SparseMatrix f(n.dim(), m.dim());
            for (const auto& b : basis) {
                long c = static_cast<long>(rng() % 61) - 30;
                if (trial == 0) c = 1;
                f = f + b.scaled(c);
            }
            if (rank(f) == m.dim()) return true;
        }
    }
    return false;
}

}  // namespace superhom
