#include "superhom/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>

namespace superhom {

namespace {

SparseVector flatten(const SparseMatrix& a) {
    SparseVector v;
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [i, x] : a.col(j)) v.emplace_back(i * a.cols() + j, x);
    normalize(v);
    return v;
}

// tr(AB) = sum_ij A_ij B_ji
Scalar trace_product(const SparseMatrix& a, const SparseMatrix& b) {
    Scalar s = 0;
    for (int j = 0; j < b.cols(); ++j)
        for (const auto& [i, x] : b.col(j)) {
            Scalar y = a.at(j, i);
            if (sgn(y) != 0) s += x * y;
        }
    return s;
}

// Kernel of the trace form on a list of matrices spanning an algebra.
std::vector<SparseVector> trace_form_kernel(const std::vector<SparseMatrix>& basis) {
    const int n = static_cast<int>(basis.size());
    SparseMatrix gram(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            Scalar t = trace_product(basis[static_cast<std::size_t>(k)], basis[static_cast<std::size_t>(l)]);
            if (sgn(t) == 0) continue;
            gram.col(l).emplace_back(k, t);
            if (k != l) gram.col(k).emplace_back(l, t);
        }
    for (int j = 0; j < n; ++j) normalize(gram.col(j));
    return kernel_basis(gram);
}

SparseMatrix combine(const std::vector<SparseMatrix>& basis, const SparseVector& coeffs, int rows, int cols) {
    SparseMatrix r(rows, cols);
    for (const auto& [k, c] : coeffs) r = r + basis[static_cast<std::size_t>(k)].scaled(c);
    return r;
}

}  // namespace

Subspace radical_trace(const SuperModule& m) {
    const auto& g = m.algebra();
    const int d = m.dim();
    if (d == 0) return Subspace(0);
    std::vector<const SparseMatrix*> gens;
    for (int x = 0; x < g.dim(); ++x) {
        if (m.g0_only() && g.parity(x) == Parity::odd) continue;
        if (!m.action(x).is_zero()) gens.push_back(&m.action(x));
    }
    SpanBuilder span(d * d);
    std::vector<SparseMatrix> elems;
    SparseMatrix one = SparseMatrix::identity(d);
    span.add(flatten(one));
    elems.push_back(one);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const SparseMatrix* x : gens) {
            SparseMatrix p = *x * elems[head];
            if (p.is_zero()) continue;
            if (span.add(flatten(p))) elems.push_back(std::move(p));
        }
    }
    std::vector<SparseVector> vecs;
    for (const auto& k : trace_form_kernel(elems)) {
        SparseMatrix r = combine(elems, k, d, d);
        for (int j = 0; j < d; ++j)
            if (!r.col(j).empty()) vecs.push_back(r.col(j));
    }
    return Subspace::span(homogeneous_parts(m, vecs), d);
}

std::vector<SuperModule> radical_filtration(const SuperModule& m) {
    std::vector<SuperModule> layers;
    SuperModule cur = m;
    while (cur.dim() > 0) {
        Subspace r = radical_trace(cur);
        layers.push_back(quotient(cur, r.basis()).module);
        if (r.dim() == cur.dim()) throw ModuleError("radical equals the module");
        cur = submodule(cur, r.basis()).module;
    }
    return layers;
}

SuperModule head(const SuperModule& m) {
    return relabel(quotient(m, radical_trace(m).basis()).module, "head(" + m.label() + ")");
}

SuperModule socle(const SuperModule& m) { return relabel(dual(head(dual(m))), "soc(" + m.label() + ")"); }

// ---------------------------------------------------------------- simples

namespace {

SuperModule build_simple(const AlgebraPtr& g, const std::vector<int>& coords) {
    const std::string label = "L" + g->format_coords(coords);
    if (g->family() == Family::q) {
        SuperModule ind = induce_from_g0(simple_g0(g, coords));
        return relabel(quotient(ind, radical_trace(ind).basis()).module, label);
    }
    SuperModule k = induce_kac(g, coords);
    const Weight top = g->weight_from_coords(coords);
    // Largest submodule inside the span of the other weight spaces.
    std::vector<SparseVector> w;
    for (int i = 0; i < k.dim(); ++i)
        if (k.weight(i) != top) w.push_back({{i, 1}});
    Subspace cur = Subspace::span(w, k.dim());
    while (true) {
        std::vector<SparseVector> cols(static_cast<std::size_t>(cur.dim()));
        int offset = 0;
        for (int x = 0; x < g->dim(); ++x) {
            for (int c = 0; c < cur.dim(); ++c) {
                SparseVector img = cur.reduce(k.action(x).apply(cur.basis()[static_cast<std::size_t>(c)]));
                for (const auto& [i, v] : img) cols[static_cast<std::size_t>(c)].emplace_back(offset + i, v);
            }
            offset += k.dim();
        }
        auto ker = kernel_basis(SparseMatrix::from_columns(std::max(offset, 1), cols));
        if (static_cast<int>(ker.size()) == cur.dim()) break;
        std::vector<SparseVector> next;
        for (const auto& c : ker) {
            SparseVector v;
            for (const auto& [idx, a] : c) add_scaled(v, cur.basis()[static_cast<std::size_t>(idx)], a);
            next.push_back(std::move(v));
        }
        cur = Subspace::span(homogeneous_parts(k, next), k.dim());
    }
    return relabel(quotient(k, cur.basis()).module, label);
}

}  // namespace

const SuperModule& simple_module(const AlgebraPtr& g, const std::vector<int>& coords) {
    static std::mutex mu;
    static std::map<std::pair<std::string, std::vector<int>>, SuperModule> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({g->name(), coords});
        if (it != cache.end()) return it->second;
    }
    SuperModule s = build_simple(g, coords);
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace({g->name(), coords}, std::move(s)).first->second;
}

std::vector<std::vector<int>> dominant_weights(const SuperModule& m) {
    const auto& g = m.algebra();
    if (!g.has_modules()) throw ModuleError("dominant weight enumeration needs gl(m|n), sl(m|n) or q(1)");
    std::vector<std::vector<int>> out;
    for (int i = 0; i < m.dim(); ++i) {
        auto w = g.coords_from_weight(m.weight(i));
        if (!w) throw ModuleError("weight of " + m.space()[i].label + " has no integral coordinates");
        if (g.is_dominant(*w) && std::find(out.begin(), out.end(), *w) == out.end()) out.push_back(*w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subspace radical_via_simples(const SuperModule& m) {
    const int d = m.dim();
    std::vector<SparseVector> cols(static_cast<std::size_t>(d));
    int offset = 0;
    for (const auto& mu : dominant_weights(m)) {
        const SuperModule& l = simple_module(m.algebra_ptr(), mu);
        for (Parity q : {Parity::even, Parity::odd})
            for (const auto& f : hom_basis(m, l, q)) {
                for (int j = 0; j < d; ++j)
                    for (const auto& [i, v] : f.col(j)) cols[static_cast<std::size_t>(j)].emplace_back(offset + i, v);
                offset += l.dim();
            }
    }
    auto ker = kernel_basis(SparseMatrix::from_columns(std::max(offset, 1), cols));
    return Subspace::span(homogeneous_parts(m, ker), d);
}

int atypicality(const LieSuperalgebra& g, const std::vector<int>& coords) {
    if (g.family() != Family::gl && g.family() != Family::sl)
        throw ModuleError("atypicality is defined here for the gl(m|n) family only");
    const int m = g.matrix_even_rows(), n = g.matrix_size() - m;
    if (static_cast<int>(coords.size()) != m + n) throw ModuleError("weight has the wrong length");
    int count = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            if (coords[static_cast<std::size_t>(i - 1)] + coords[static_cast<std::size_t>(m + j - 1)] + m + 1 - i - j == 0) ++count;
    return count;
}

SimpleInfo simple_info(const AlgebraPtr& g, const std::vector<int>& coords) {
    SimpleInfo info;
    info.weight = coords;
    const SuperModule& l = simple_module(g, coords);
    info.kappa = hom_dim(l, l);
    if (g->family() == Family::gl || g->family() == Family::sl) info.atypicality = atypicality(*g, coords);
    return info;
}

// ---------------------------------------------------------------- decomposition

namespace {

SparseMatrix power(SparseMatrix a, int e) {
    SparseMatrix r = SparseMatrix::identity(a.rows());
    while (e > 0) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

bool is_nilpotent(const SparseMatrix& a) { return power(a, a.rows()).is_zero(); }

// Characteristic polynomial coefficients c_0..c_n (monic) by Faddeev-LeVerrier.
std::vector<Scalar> char_poly(const std::vector<std::vector<Scalar>>& a) {
    const std::size_t n = a.size();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<Scalar>> mk(n, std::vector<Scalar>(n)), amk(n, std::vector<Scalar>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        std::vector<std::vector<Scalar>> next(n, std::vector<Scalar>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) next[i][j] = amk[i][j];
            next[i][i] += c[n - k + 1];
        }
        mk = next;
        Scalar tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Scalar s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    if (sgn(a[i][l]) != 0 && sgn(mk[l][j]) != 0) s += a[i][l] * mk[l][j];
                amk[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) tr += amk[i][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> ds;
    if (v == 0 || v > mpz_class("1000000000000")) return ds;
    for (mpz_class p = 1; p * p <= v; ++p)
        if (v % p == 0) {
            ds.push_back(p);
            if (p * p != v) ds.push_back(v / p);
        }
    return ds;
}

std::vector<Scalar> rational_roots(std::vector<Scalar> c) {
    std::vector<Scalar> roots;
    while (c.size() > 1 && sgn(c.front()) == 0) {
        if (std::find(roots.begin(), roots.end(), Scalar(0)) == roots.end()) roots.push_back(0);
        c.erase(c.begin());
    }
    if (c.size() <= 1) return roots;
    mpz_class l = 1;
    for (const auto& x : c) l = lcm(l, mpz_class(x.get_den()));
    std::vector<mpz_class> z;
    for (const auto& x : c) z.push_back(mpz_class(x * l));
    for (const auto& p : divisors(z.front()))
        for (const auto& q : divisors(z.back()))
            for (int s : {1, -1}) {
                Scalar r(s * p, q);
                r.canonicalize();
                Scalar acc = 0;
                for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + c[k];
                if (sgn(acc) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
    return roots;
}

// Rational eigenvalues of an even endomorphism, block by weight and parity.
std::vector<Scalar> eigenvalues(const SuperModule& m, const SparseMatrix& a) {
    std::map<std::pair<Weight, Parity>, std::vector<int>> blocks;
    for (int i = 0; i < m.dim(); ++i) blocks[{m.weight(i), m.parity(i)}].push_back(i);
    std::vector<std::vector<int>> order;
    for (auto& [k, v] : blocks) order.push_back(v);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<Scalar> out;
    for (const auto& idx : order) {
        if (idx.size() > 40) continue;
        auto sub = a.restrict_to(idx, idx).dense();
        for (const auto& r : rational_roots(char_poly(sub)))
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

struct Piece {
    SuperModule module;
    SparseMatrix inclusion;
    SparseMatrix projection;
};

void split(const Piece& piece, std::mt19937_64& rng, std::vector<Summand>& out) {
    const SuperModule& n = piece.module;
    if (n.dim() == 0) return;
    auto ends = hom_basis(n, n, Parity::even);
    const int top = static_cast<int>(ends.size()) - static_cast<int>(trace_form_kernel(ends).size());
    if (top <= 1) {
        out.push_back({n, piece.inclusion, piece.projection});
        return;
    }
    const int d = n.dim();
    std::vector<SparseMatrix> candidates = ends;
    for (int t = 0; t < 12; ++t) {
        SparseMatrix r(d, d);
        for (const auto& e : ends) r = r + e.scaled(static_cast<long>(rng() % 11) - 5);
        candidates.push_back(std::move(r));
    }
    for (const auto& a : candidates) {
        if (is_nilpotent(a)) continue;
        std::vector<SparseMatrix> shifts;
        if (rank(a) < d) shifts.push_back(a);
        for (const auto& c : eigenvalues(n, a)) shifts.push_back(a - SparseMatrix::identity(d).scaled(c));
        for (const auto& w : shifts) {
            SparseMatrix wn = power(w, d);
            if (wn.is_zero() || rank(wn) == d) continue;
            // Fitting decomposition: N = ker w^d (+) im w^d.
            std::vector<SparseVector> im;
            for (int j = 0; j < d; ++j)
                if (!wn.col(j).empty()) im.push_back(wn.col(j));
            Submodule u = submodule(n, kernel_basis(wn));
            Submodule v = submodule(n, im);
            std::vector<SparseVector> both;
            for (int j = 0; j < u.inclusion.cols(); ++j) both.push_back(u.inclusion.col(j));
            for (int j = 0; j < v.inclusion.cols(); ++j) both.push_back(v.inclusion.col(j));
            SparseMatrix inv = inverse(SparseMatrix::from_columns(d, both));
            std::vector<int> ui, vi, all;
            for (int k = 0; k < u.module.dim(); ++k) ui.push_back(k);
            for (int k = 0; k < v.module.dim(); ++k) vi.push_back(u.module.dim() + k);
            for (int k = 0; k < d; ++k) all.push_back(k);
            SparseMatrix pu = inv.restrict_to(ui, all), pv = inv.restrict_to(vi, all);
            split({u.module, piece.inclusion * u.inclusion, pu * piece.projection}, rng, out);
            split({v.module, piece.inclusion * v.inclusion, pv * piece.projection}, rng, out);
            return;
        }
    }
    throw ModuleError("split blocked over Q");
}

}  // namespace

int endomorphism_top_dim(const SuperModule& m) {
    auto ends = hom_basis(m, m, Parity::even);
    return static_cast<int>(ends.size()) - static_cast<int>(trace_form_kernel(ends).size());
}

std::vector<Summand> decompose_into_indecomposables(const SuperModule& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Summand> out;
    split({m, SparseMatrix::identity(m.dim()), SparseMatrix::identity(m.dim())}, rng, out);
    return out;
}

}  // namespace superhom
