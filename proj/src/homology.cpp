#include "superhom/homology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>

namespace superhom {

namespace {

using Mono = std::vector<int>;  // sorted basis indices, repeats allowed where the rules permit

std::string mono_label(const std::string& head, const Mono& m) {
    std::string s = head + "[";
    for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + std::to_string(m[k]);
    return s + "]";
}

// All sorted multisets of size k over [0, n).
void multisets(int n, int k, int start, Mono& cur, std::vector<Mono>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        multisets(n, k, i, cur, out);
        cur.pop_back();
    }
}

std::vector<Mono> multisets(int n, int k) {
    std::vector<Mono> out;
    Mono cur;
    multisets(n, k, 0, cur, out);
    return out;
}

bool has_repeat_of(const Mono& m, const SuperSpace& v, Parity p) {
    for (std::size_t k = 1; k < m.size(); ++k)
        if (m[k] == m[k - 1] && v.parity(m[k]) == p) return true;
    return false;
}

Parity mono_parity(const Mono& m, const SuperSpace& v) {
    Parity p = Parity::even;
    for (int i : m) p = p + v.parity(i);
    return p;
}

long binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SparseMatrix kron_identity(const SparseMatrix& a, int n) {
    SparseMatrix r(a.rows() * n, a.cols() * n);
    for (int j = 0; j < a.cols(); ++j)
        for (int t = 0; t < n; ++t)
            for (const auto& [i, x] : a.col(j)) r.col(j * n + t).emplace_back(i * n + t, x);
    return r;
}

std::vector<int> indices_of(const SuperSpace& s, Parity q) {
    std::vector<int> out;
    for (int i = 0; i < s.dim(); ++i)
        if (s.parity(i) == q) out.push_back(i);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Koszul

int super_symmetric_dim(int even, int odd, int k) {
    // multisets of size r from the even part times subsets of the odd part
    auto multichoose = [](long e, long r) { return r == 0 ? 1L : binom(e + r - 1, r); };
    long d = 0;
    for (int j = 0; j <= std::min(k, odd); ++j) d += multichoose(even, k - j) * binom(odd, j);
    return static_cast<int>(d);
}

int super_exterior_dim(int even, int odd, int k) { return super_symmetric_dim(odd, even, k); }

Complex super_koszul(const SuperSpace& v, int s) {
    if (s <= 0) throw HomologyError("super Koszul complex needs s > 0");
    const int n = v.dim();
    std::vector<std::vector<std::pair<Mono, Mono>>> bases(static_cast<std::size_t>(s + 1));
    std::vector<std::shared_ptr<const SuperSpace>> terms;
    std::vector<std::map<std::pair<Mono, Mono>, int>> index(static_cast<std::size_t>(s + 1));
    for (int p = 0; p <= s; ++p) {
        std::vector<BasisVector> basis;
        for (const auto& a : multisets(n, s - p)) {
            if (has_repeat_of(a, v, Parity::odd)) continue;
            for (const auto& x : multisets(n, p)) {
                if (has_repeat_of(x, v, Parity::even)) continue;
                index[static_cast<std::size_t>(p)][{a, x}] = static_cast<int>(basis.size());
                bases[static_cast<std::size_t>(p)].push_back({a, x});
                basis.push_back({mono_label("S", a) + "(x)" + mono_label("L", x), mono_parity(a, v) + mono_parity(x, v), Weight()});
            }
        }
        terms.push_back(std::make_shared<const SuperSpace>(std::move(basis)));
    }
    std::vector<SparseMatrix> diffs;
    for (int p = 1; p <= s; ++p) {
        const auto& src = bases[static_cast<std::size_t>(p)];
        SparseMatrix d(terms[static_cast<std::size_t>(p - 1)]->dim(), static_cast<int>(src.size()));
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& [a, x] = src[col];
            int before = 0;  // parities of x_1..x_{i-1}
            for (std::size_t i = 0; i < x.size(); ++i) {
                const int xi = x[i];
                const int pi = bit(v.parity(xi));
                const int gamma = pi * before;
                before += pi;
                // a * x_i, moving x_i left past larger indices
                if (pi && std::find(a.begin(), a.end(), xi) != a.end()) continue;
                int sign = ((static_cast<int>(i) + 2 + gamma) % 2) ? -1 : 1;  // (-1)^{i+1+gamma}, i 1-based
                for (int y : a)
                    if (y > xi && pi && bit(v.parity(y))) sign = -sign;
                Mono na = a;
                na.insert(std::upper_bound(na.begin(), na.end(), xi), xi);
                Mono nx = x;
                nx.erase(nx.begin() + static_cast<long>(i));
                d.col(static_cast<int>(col)).emplace_back(index[static_cast<std::size_t>(p - 1)].at({na, nx}), sign);
            }
            normalize(d.col(static_cast<int>(col)));
        }
        diffs.push_back(std::move(d));
    }
    return Complex(0, std::move(terms), std::move(diffs));
}

ExactnessCertificate check_exactness(const Complex& c, int from, int to) {
    ExactnessCertificate cert;
    std::map<std::pair<int, Parity>, int> ranks;  // rank of d_p on parity q
    auto rank_of = [&](int p, Parity q) {
        if (p <= c.lowest() || p > c.highest()) return 0;
        auto key = std::make_pair(p, q);
        auto it = ranks.find(key);
        if (it != ranks.end()) return it->second;
        int r = rank(c.differential(p).restrict_to(indices_of(c.term(p - 1), q), indices_of(c.term(p), q)));
        return ranks[key] = r;
    };
    for (int p = from; p <= to; ++p) {
        ParityDims h;
        for (Parity q : {Parity::even, Parity::odd}) {
            int v = static_cast<int>(indices_of(c.term(p), q).size()) - rank_of(p, q) - rank_of(p + 1, q);
            (q == Parity::even ? h.even : h.odd) = v;
        }
        cert.homology[p] = h;
        if (h.total() != 0) cert.exact = false;
    }
    return cert;
}

// ---------------------------------------------------------------- relative resolution

SuperModule odd_symmetric_power(const AlgebraPtr& g, int p) {
    const auto odd = g->odd_basis();
    const int n = static_cast<int>(odd.size());
    std::vector<int> pos(static_cast<std::size_t>(g->dim()), -1);
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(odd[static_cast<std::size_t>(k)])] = k;
    auto monos = multisets(n, p);
    std::map<Mono, int> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
    const int d = static_cast<int>(monos.size());
    std::vector<SparseMatrix> act(static_cast<std::size_t>(g->dim()), SparseMatrix(d, d));
    for (int z = 0; z < g->dim(); ++z) {
        if (g->parity(z) == Parity::odd) continue;
        for (int col = 0; col < d; ++col) {
            const Mono& m = monos[static_cast<std::size_t>(col)];
            auto& out = act[static_cast<std::size_t>(z)].col(col);
            for (std::size_t i = 0; i < m.size(); ++i) {
                for (const auto& [w, c] : g->bracket(z, odd[static_cast<std::size_t>(m[i])])) {
                    Mono r = m;
                    r.erase(r.begin() + static_cast<long>(i));
                    const int k = pos[static_cast<std::size_t>(w)];
                    r.insert(std::upper_bound(r.begin(), r.end(), k), k);
                    out.emplace_back(index.at(r), c);
                }
            }
            normalize(out);
        }
    }
    std::vector<std::string> labels;
    for (const auto& m : monos) {
        std::string s;
        for (int k : m) s += (s.empty() ? "" : ".") + g->label(odd[static_cast<std::size_t>(k)]);
        labels.push_back(s.empty() ? "1" : s);
    }
    return SuperModule(g, labels, std::vector<Parity>(static_cast<std::size_t>(d), parity_of(p)), act,
                       "S^" + std::to_string(p), true);
}

SuperModule koszul_induced_term(const AlgebraPtr& g, int p) { return induce_from_g0(odd_symmetric_power(g, p)); }

SparseMatrix koszul_induced_differential(const AlgebraPtr& g, int p) {
    if (p <= 0) throw HomologyError("differential needs p > 0");
    const auto odd = g->odd_basis();
    const int n = static_cast<int>(odd.size());
    SuperModule lower = koszul_induced_term(g, p - 1);
    auto top = multisets(n, p), low = multisets(n, p - 1);
    std::map<Mono, int> low_index;
    for (std::size_t i = 0; i < low.size(); ++i) low_index[low[i]] = static_cast<int>(i);
    const int dt = static_cast<int>(top.size());
    // Induced basis index = mask * dim S + t, with mask the PBW monomial in odd order.
    std::vector<SparseVector> cols(static_cast<std::size_t>((1 << n) * dt));
    for (int t = 0; t < dt; ++t) {
        const Mono& m = top[static_cast<std::size_t>(t)];
        SparseVector v;
        for (std::size_t i = 0; i < m.size(); ++i) {
            Mono r = m;
            r.erase(r.begin() + static_cast<long>(i));
            SparseVector base{{low_index.at(r), 1}};
            add_scaled(v, lower.action(odd[static_cast<std::size_t>(m[i])]).apply(base), 1);
        }
        cols[static_cast<std::size_t>(t)] = v;
    }
    for (int mask = 1; mask < (1 << n); ++mask) {
        const int k1 = std::countr_zero(static_cast<unsigned>(mask));
        const auto& y = lower.action(odd[static_cast<std::size_t>(k1)]);
        for (int t = 0; t < dt; ++t)
            cols[static_cast<std::size_t>(mask * dt + t)] = y.apply(cols[static_cast<std::size_t>((mask & ~(1 << k1)) * dt + t)]);
    }
    return SparseMatrix::from_columns(lower.dim(), std::move(cols));
}

long relative_term_dim(const LieSuperalgebra& g, int p, int module_dim) {
    const long n = static_cast<long>(g.odd_basis().size());
    return (1L << n) * binom(n + p - 1, p) * module_dim;
}

RelativeResolution relative_resolution(const SuperModule& m, int n_max) {
    if (n_max < 1) throw HomologyError("relative resolution needs n_max >= 1");
    if (!verify_module(m).ok) throw HomologyError("module " + m.label() + " fails verification");
    const auto& gp = m.algebra_ptr();
    const int dm = m.dim();
    std::vector<int> term_dims;
    std::vector<std::shared_ptr<const SuperSpace>> terms;
    std::vector<SparseMatrix> diffs;
    SuperModule d0;
    for (int p = 0; p <= n_max; ++p) {
        SuperModule dp = koszul_induced_term(gp, p);
        if (p == 0) d0 = dp;
        std::vector<BasisVector> basis;
        for (int i = 0; i < dp.dim(); ++i)
            for (int j = 0; j < dm; ++j)
                basis.push_back({dp.space()[i].label + "(x)" + m.space()[j].label, dp.parity(i) + m.parity(j),
                                 dp.weight(i) + m.weight(j)});
        terms.push_back(std::make_shared<const SuperSpace>(std::move(basis)));
        term_dims.push_back(dp.dim() * dm);
        if (p > 0) diffs.push_back(kron_identity(koszul_induced_differential(gp, p), dm));
    }
    // epsilon (x) 1: only the PBW monomial 1 survives.
    SparseMatrix aug(dm, d0.dim() * dm);
    for (int j = 0; j < dm; ++j) aug.col(j).emplace_back(j, 1);
    return {Complex(0, std::move(terms), std::move(diffs)), std::move(aug), std::move(term_dims)};
}

ResolutionExactness check_exactness(const RelativeResolution& r, int module_dim) {
    ResolutionExactness out;
    const Complex& c = r.complex;
    auto cert = check_exactness(c, 0, c.highest() - 1);
    out.cokernel_dim = cert.homology[0].total();
    for (const auto& [p, h] : cert.homology)
        if (p > 0) out.homology[p] = h;
    bool zero_above = std::all_of(out.homology.begin(), out.homology.end(), [](const auto& kv) { return kv.second.total() == 0; });
    out.augmentation_ok = rank(r.augmentation) == module_dim && (r.augmentation * c.differential(1)).is_zero();
    out.exact = zero_above && out.augmentation_ok && out.cokernel_dim == module_dim;
    return out;
}

// ---------------------------------------------------------------- relative Ext

namespace {

SparseVector flatten(const SparseMatrix& a) {
    SparseVector v;
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [i, x] : a.col(j)) v.emplace_back(j * a.rows() + i, x);
    std::sort(v.begin(), v.end(), [](const auto& u, const auto& w) { return u.first < w.first; });
    return v;
}

}  // namespace

ExtTable relative_ext(const SuperModule& m, const SuperModule& n, int d_max) {
    if (m.algebra().name() != n.algebra().name()) throw HomologyError("modules over different algebras");
    const auto& gp = m.algebra_ptr();
    const auto odd = gp->odd_basis();
    const int nodd = static_cast<int>(odd.size());
    const SuperModule m0 = restrict_to_g0(m), n0 = restrict_to_g0(n);
    const int dm = m.dim(), dn = n.dim();

    ExtTable table;
    table.degrees.resize(static_cast<std::size_t>(d_max + 1));
    for (Parity q : {Parity::even, Parity::odd}) {
        std::vector<std::vector<SparseMatrix>> cochains;
        std::vector<Subspace> spans;
        std::vector<std::vector<Mono>> monos;
        for (int p = 0; p <= d_max + 1; ++p) {
            SuperModule x = tensor(odd_symmetric_power(gp, p), m0);
            cochains.push_back(hom_basis(x, n0, q, true));
            std::vector<SparseVector> flat;
            for (const auto& f : cochains.back()) flat.push_back(flatten(f));
            spans.push_back(Subspace::span(flat, dn * x.dim()));
            monos.push_back(multisets(nodd, p));
        }
        // d phi (x_1..x_{p+1} (x) w) = sum_i (-1)^{q} x_i phi(rest (x) w) - (-1)^p phi(rest (x) x_i w)
        std::vector<int> ranks(static_cast<std::size_t>(d_max + 2), 0);
        for (int p = 0; p <= d_max; ++p) {
            const auto& low = monos[static_cast<std::size_t>(p)];
            const auto& high = monos[static_cast<std::size_t>(p + 1)];
            std::map<Mono, int> low_index;
            for (std::size_t i = 0; i < low.size(); ++i) low_index[low[i]] = static_cast<int>(i);
            const int sign_q = q == Parity::odd ? -1 : 1;
            const int sign_p = p % 2 ? -1 : 1;
            std::vector<SparseVector> images;
            for (const auto& phi : cochains[static_cast<std::size_t>(p)]) {
                SparseMatrix dphi(dn, static_cast<int>(high.size()) * dm);
                for (std::size_t h = 0; h < high.size(); ++h) {
                    const Mono& s = high[h];
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        Mono rest = s;
                        rest.erase(rest.begin() + static_cast<long>(i));
                        const int r = low_index.at(rest);
                        const int xi = odd[static_cast<std::size_t>(s[i])];
                        const auto& rn = n.action(xi);
                        const auto& rm = m.action(xi);
                        for (int w = 0; w < dm; ++w) {
                            auto& out = dphi.col(static_cast<int>(h) * dm + w);
                            for (const auto& [k, v] : rn.apply(phi.col(r * dm + w))) out.emplace_back(k, sign_q * v);
                            for (const auto& [w2, a] : rm.col(w))
                                for (const auto& [k, v] : phi.col(r * dm + w2)) out.emplace_back(k, -sign_p * a * v);
                        }
                    }
                }
                for (int j = 0; j < dphi.cols(); ++j) normalize(dphi.col(j));
                SparseVector f = flatten(dphi);
                const auto& target = spans[static_cast<std::size_t>(p + 1)];
                if (!target.contains(f)) throw HomologyError("relative Ext differential leaves the cochain space");
                auto coords = target.coordinates(f);
                SparseVector cv;
                for (std::size_t k = 0; k < coords.size(); ++k)
                    if (sgn(coords[k]) != 0) cv.emplace_back(static_cast<int>(k), coords[k]);
                images.push_back(std::move(cv));
            }
            const int target_dim = spans[static_cast<std::size_t>(p + 1)].dim();
            ranks[static_cast<std::size_t>(p)] = images.empty() ? 0 : rank(SparseMatrix::from_columns(std::max(target_dim, 1), images));
        }
        for (int p = 0; p <= d_max; ++p) {
            int v = spans[static_cast<std::size_t>(p)].dim() - ranks[static_cast<std::size_t>(p)] -
                    (p > 0 ? ranks[static_cast<std::size_t>(p - 1)] : 0);
            auto& slot = table.degrees[static_cast<std::size_t>(p)];
            (q == Parity::even ? slot.even : slot.odd) = v;
        }
    }
    return table;
}

// ---------------------------------------------------------------- projective covers

namespace {

std::string weight_tag(const LieSuperalgebra& g, const std::vector<int>& coords) { return g.format_coords(coords); }

}  // namespace

const SuperModule& projective_indecomposable(const AlgebraPtr& g, const std::vector<int>& coords) {
    static std::mutex mu;
    static std::map<std::pair<std::string, std::vector<int>>, SuperModule> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({g->name(), coords});
        if (it != cache.end()) return it->second;
    }
    const SuperModule& l = simple_module(g, coords);
    SuperModule ind = induce_from_g0(simple_g0(g, coords));
    std::optional<SuperModule> found;
    for (auto& s : decompose_into_indecomposables(ind)) {
        if (!hom_basis(s.module, l, Parity::even).empty()) {
            found = relabel(s.module, "P" + weight_tag(*g, coords));
            break;
        }
    }
    if (!found) throw HomologyError("no summand of Ind maps onto L" + weight_tag(*g, coords));
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace({g->name(), coords}, std::move(*found)).first->second;
}

ProjectiveCover projective_cover(const SuperModule& m) {
    const auto& gp = m.algebra_ptr();
    if (!gp->has_modules()) throw HomologyError("projective covers need gl(m|n), sl(m|n) or q(1)");
    ProjectiveCover pc;
    const int d = m.dim();
    if (d == 0) {
        pc.cover = SuperModule(gp, {}, {}, std::vector<SparseMatrix>(static_cast<std::size_t>(gp->dim()), SparseMatrix(0, 0)), "0");
        pc.surjection = SparseMatrix(0, 0);
        return pc;
    }
    SpanBuilder covered(d);
    const Subspace rad = radical_via_simples(m);
    for (const auto& v : rad.basis()) covered.add(v);
    std::vector<SparseVector> surj_cols;
    std::optional<SuperModule> cover;
    for (const auto& mu : dominant_weights(m)) {
        if (covered.dim() == d) break;
        const SuperModule& l = simple_module(gp, mu);
        const int kappa_odd = hom_basis(l, l, Parity::odd).empty() ? 0 : 1;
        for (Parity q : {Parity::even, Parity::odd}) {
            if (q == Parity::odd && kappa_odd) continue;  // L = Pi L: the even copies already cover
            if (hom_basis(m, l, q).empty()) continue;
            const SuperModule& p = projective_indecomposable(gp, mu);
            for (const auto& f : hom_basis(p, m, q)) {
                bool grows = false;
                for (int j = 0; j < f.cols() && !grows; ++j)
                    if (!covered.reduce(f.col(j)).empty()) grows = true;
                if (!grows) continue;
                for (int j = 0; j < f.cols(); ++j) covered.add(f.col(j));
                SuperModule piece = q == Parity::odd ? relabel(parity_shift(p), "Pi" + p.label()) : p;
                pc.summands.push_back(piece.label());
                cover = cover ? direct_sum(*cover, piece) : piece;
                for (int j = 0; j < f.cols(); ++j) surj_cols.push_back(f.col(j));
                if (covered.dim() == d) break;
            }
            if (covered.dim() == d) break;
        }
    }
    if (covered.dim() != d) throw HomologyError("projective cover search left part of the head uncovered");
    pc.cover = relabel(*cover, "cover(" + m.label() + ")");
    pc.surjection = SparseMatrix::from_columns(d, std::move(surj_cols));
    return pc;
}

SuperModule syzygy(const SuperModule& m) {
    if (m.dim() == 0) return m;
    auto pc = projective_cover(m);
    return relabel(submodule(pc.cover, kernel_basis(pc.surjection)).module, "Omega(" + m.label() + ")");
}

// ---------------------------------------------------------------- complexity

ComplexityEstimate complexity_estimate(const std::vector<int>& dims) {
    if (dims.empty()) throw HomologyError("complexity of an empty sequence");
    ComplexityEstimate e;
    const int n = static_cast<int>(dims.size());
    const int nonzero = static_cast<int>(std::count_if(dims.begin(), dims.end(), [](int v) { return v != 0; }));
    e.low_confidence = nonzero < 4;
    const int q = std::max(2, (n + 3) / 4);
    e.window_begin = std::max(1, n - q + 1);
    e.window_end = n;
    if (dims.back() == 0) {
        e.c = 0;
        e.evidence = "sequence ends in zero";
        return e;
    }
    for (int c = 1; c <= 64; ++c) {
        auto ratio = [&](int t) {
            Scalar r(dims[static_cast<std::size_t>(t - 1)]);
            for (int k = 1; k < c; ++k) r /= t;
            return r;
        };
        Scalar lo = ratio(e.window_begin), hi = lo;
        for (int t = e.window_begin; t <= n; ++t) {
            lo = std::min(lo, ratio(t));
            hi = std::max(hi, ratio(t));
        }
        bool flat = sgn(lo) > 0 && hi <= 2 * lo;
        const int mid = (n + 1) / 2;
        bool slow = true;
        double exponent = 0;
        if (mid < n && sgn(ratio(mid)) > 0) {
            exponent = std::log(ratio(n).get_d() / ratio(mid).get_d()) / std::log(static_cast<double>(n) / mid);
            slow = exponent <= 0.5;
        }
        if (flat && slow) {
            e.c = c;
            e.constant = 0;
            for (int t = 1; t <= n; ++t) e.constant = std::max(e.constant, ratio(t));
            e.evidence = "dims_t / t^" + std::to_string(c - 1) + " in [" + lo.get_str() + ", " + hi.get_str() +
                         "] for t in [" + std::to_string(e.window_begin) + ", " + std::to_string(n) + "]";
            return e;
        }
    }
    throw HomologyError("no polynomial bound of degree <= 63 fits the window");
}

std::vector<int> ResolutionReport::dims() const {
    std::vector<int> d;
    for (const auto& s : steps) d.push_back(s.dim);
    return d;
}

ResolutionReport minimal_resolution(const SuperModule& m, int n_max, std::vector<SuperModule>* syzygies) {
    if (n_max < 0) throw HomologyError("n_max must be nonnegative");
    ResolutionReport rep;
    rep.algebra = m.algebra().name();
    rep.module = m.label();
    rep.n_max = n_max;
    SuperModule omega = m;
    if (syzygies) syzygies->push_back(omega);
    for (int k = 0; k <= n_max; ++k) {
        ResolutionStep step;
        if (omega.dim() > 0) {
            auto pc = projective_cover(omega);
            step.summands = pc.summands;
            step.dim = pc.cover.dim();
            step.parity_dims = {pc.cover.space().even_dim(), pc.cover.space().odd_dim()};
            omega = relabel(submodule(pc.cover, kernel_basis(pc.surjection)).module,
                            "Omega^" + std::to_string(k + 1) + "(" + m.label() + ")");
            if (syzygies) syzygies->push_back(omega);
        }
        rep.steps.push_back(std::move(step));
    }
    rep.complexity = complexity_estimate(rep.dims());
    return rep;
}

bool is_projective(const SuperModule& m) { return m.dim() == 0 || syzygy(m).dim() == 0; }

std::optional<std::pair<int, int>> find_period(const SuperModule& m, int n_max) {
    std::vector<SuperModule> om;
    minimal_resolution(m, n_max, &om);
    if (om.size() < 2 || om[1].dim() == 0) return std::nullopt;
    for (int j = 1; j < static_cast<int>(om.size()) && j <= n_max; ++j)
        for (int i = 0; i < j; ++i)
            if (om[static_cast<std::size_t>(i)].dim() == om[static_cast<std::size_t>(j)].dim() &&
                is_isomorphic(om[static_cast<std::size_t>(i)], om[static_cast<std::size_t>(j)], true))
                return std::make_pair(i, j);
    return std::nullopt;
}

bool is_periodic(const SuperModule& m, int n_max) { return find_period(m, n_max).has_value(); }

// ---------------------------------------------------------------- Cartan window

std::vector<int> composition_multiplicities(const SuperModule& m, const std::vector<std::vector<int>>& weights) {
    std::vector<int> mult(weights.size(), 0);
    const auto& gp = m.algebra_ptr();
    for (const auto& layer : radical_filtration(m)) {
        for (std::size_t j = 0; j < weights.size(); ++j) {
            const SuperModule& l = simple_module(gp, weights[j]);
            const int kappa = hom_dim(l, l);
            mult[j] += hom_dim(layer, l) / kappa;
        }
    }
    return mult;
}

CartanWindow cartan_window(const AlgebraPtr& g, const std::vector<std::vector<int>>& weights) {
    CartanWindow w;
    w.weights = weights;
    const std::size_t n = weights.size();
    for (std::size_t i = 0; i < n; ++i) {
        const SuperModule& p = projective_indecomposable(g, weights[i]);
        auto row = composition_multiplicities(p, weights);
        int covered = 0;
        for (std::size_t j = 0; j < n; ++j) covered += row[j] * simple_module(g, weights[j]).dim();
        w.complete.push_back(covered == p.dim());
        if (covered == p.dim()) w.interior.push_back(static_cast<int>(i));
        w.matrix.push_back(std::move(row));
    }
    if (w.interior.empty()) throw HomologyError("window contains no complete column");
    w.symmetric = true;
    for (int a : w.interior)
        for (int b : w.interior)
            if (w.matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != w.matrix[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                w.symmetric = false;
    // Ext^1 linkage classes
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
            auto e = relative_ext(simple_module(g, weights[i]), simple_module(g, weights[j]), 1);
            if (e.total(1) != 0) parent[static_cast<std::size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
        }
    for (std::size_t i = 0; i < n; ++i) w.block.push_back(find(static_cast<int>(i)));
    return w;
}

}  // namespace superhom
