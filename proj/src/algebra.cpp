#include "superhom/algebra.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <sstream>

namespace superhom {

namespace {

SparseMatrix unit(int d, int a, int b, const Scalar& s = 1) {
    SparseMatrix e(d, d);
    e.set(a, b, s);
    return e;
}

Parity entry_parity(int meven, int a, int b) { return parity_of((a >= meven) + (b >= meven)); }

Parity matrix_parity(const SparseMatrix& x, int meven) {
    std::optional<Parity> p;
    for (int j = 0; j < x.cols(); ++j)
        for (const auto& [i, v] : x.col(j)) {
            Parity q = entry_parity(meven, i, j);
            if (p && *p != q) throw AlgebraError("realization matrix is not parity-homogeneous");
            p = q;
        }
    return p.value_or(Parity::even);
}

SparseVector flatten(const SparseMatrix& x) {
    SparseVector v;
    const int d = x.rows();
    for (int j = 0; j < x.cols(); ++j)
        for (const auto& [i, s] : x.col(j)) v.emplace_back(i * d + j, s);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

SparseMatrix supercommutator(const SparseMatrix& x, Parity px, const SparseMatrix& y, Parity py) {
    return x * y - (y * x).scaled(koszul_sign(px, py));
}

std::string pair_label(int a, int b) { return "E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")"; }

const char* family_name(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::sl: return "sl";
        case Family::psl: return "psl";
        case Family::q: return "q";
        case Family::osp: return "osp";
        case Family::p: return "p";
        case Family::ptilde: return "ptilde";
    }
    return "?";
}

bool is_square_zero(const LieSuperalgebra& g, const SparseVector& x) { return g.bracket(x, x).empty(); }

}  // namespace

// ---------------------------------------------------------------- construction

AlgebraPtr LieSuperalgebra::make(Family f, int m, int n) {
    if (m <= 0 || n <= 0) throw AlgebraError("algebra parameters must be positive");
    auto g = std::shared_ptr<LieSuperalgebra>(new LieSuperalgebra());
    g->family_ = f;
    g->m_ = m;
    g->n_ = n;
    std::vector<std::string> labels;
    std::vector<int> deg;
    auto& mats = g->mats_;

    switch (f) {
        case Family::gl:
        case Family::sl:
        case Family::psl: {
            if (f == Family::sl && m == n) throw AlgebraError("sl(n|n) is not simple; use psl(n|n) or gl(n|n)");
            if (f == Family::psl && m != n) throw AlgebraError("psl(m|n) requires m = n");
            const int d = m + n;
            g->msize_ = d;
            g->meven_ = m;
            g->name_ = std::string(family_name(f)) + "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
            for (int a = 0; a < d; ++a) deg.push_back(a < m ? 1 : 0);
            auto same_block = [m](int a, int b) { return (a < m) == (b < m); };
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    if (!same_block(a, b)) continue;
                    if (f != Family::gl && a == b) continue;
                    mats.push_back(unit(d, a, b));
                    labels.push_back(pair_label(a, b));
                }
            if (f == Family::gl) {
                for (int k = 0; k < d; ++k) {
                    auto it = std::find(labels.begin(), labels.end(), pair_label(k, k));
                    g->cartan_.push_back(static_cast<int>(it - labels.begin()));
                }
            } else {
                for (int k = 0; k + 1 < d; ++k) {
                    SparseMatrix h = unit(d, k, k);
                    h.set(k + 1, k + 1, k + 1 == m ? 1 : -1);
                    g->cartan_.push_back(static_cast<int>(mats.size()));
                    mats.push_back(h);
                    labels.push_back("H" + std::to_string(k + 1));
                }
            }
            for (int side : {1, -1})
                for (int i = 0; i < m; ++i)
                    for (int j = m; j < d; ++j) {
                        int a = side == 1 ? i : j, b = side == 1 ? j : i;
                        mats.push_back(unit(d, a, b));
                        labels.push_back(pair_label(a, b));
                    }
            for (int a = 0; a < d; ++a)
                for (int b = a + 1; b < d; ++b)
                    if (same_block(a, b)) {
                        auto it = std::find(labels.begin(), labels.end(), pair_label(a, b));
                        g->g0_positive_.push_back(static_cast<int>(it - labels.begin()));
                    }
            break;
        }
        case Family::q: {
            if (m != 1) throw AlgebraError("only q(1) is in scope");
            g->name_ = "q(1)";
            g->msize_ = 2;
            g->meven_ = 1;
            mats.push_back(SparseMatrix::identity(2));
            labels.push_back("I");
            SparseMatrix j(2, 2);
            j.set(0, 1, 1);
            j.set(1, 0, 1);
            mats.push_back(j);
            labels.push_back("J");
            g->cartan_ = {0};
            break;
        }
        case Family::osp: {
            if (m != 2) throw AlgebraError("only osp(2|2n) is in scope");
            if (n % 2 != 0) throw AlgebraError("osp(2|2n) needs an even second parameter");
            const int half = n / 2, d = 2 + n;
            g->name_ = "osp(2|" + std::to_string(n) + ")";
            g->msize_ = d;
            g->meven_ = 2;
            deg = std::vector<int>(static_cast<std::size_t>(d), 0);
            deg[0] = 1;
            deg[1] = -1;
            SparseMatrix form(d, d);
            form.set(0, 1, 1);
            form.set(1, 0, 1);
            for (int k = 0; k < half; ++k) {
                form.set(2 + k, 2 + half + k, 1);
                form.set(2 + half + k, 2 + k, -1);
            }
            // Unknown entries of one parity and Z-degree; equations say the form is invariant.
            for (Parity px : {Parity::even, Parity::odd})
                for (int zd : {0, 1, -1}) {
                    std::vector<std::pair<int, int>> cells;
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b)
                            if (entry_parity(2, a, b) == px && deg[static_cast<std::size_t>(a)] - deg[static_cast<std::size_t>(b)] == zd)
                                cells.push_back({a, b});
                    if (cells.empty()) continue;
                    SparseMatrix eqs(d * d, static_cast<int>(cells.size()));
                    for (std::size_t u = 0; u < cells.size(); ++u) {
                        auto [r, c] = cells[u];  // X_{rc} = 1
                        for (int b = 0; b < d; ++b) {
                            Scalar v = form.at(r, b);  // sum_c X_ca B_cb with a = c
                            if (sgn(v) != 0) eqs.add(c * d + b, static_cast<int>(u), v);
                        }
                        for (int a = 0; a < d; ++a) {
                            Scalar v = form.at(a, r) * koszul_sign(px, parity_of(a >= 2));
                            if (sgn(v) != 0) eqs.add(a * d + c, static_cast<int>(u), v);
                        }
                    }
                    for (const auto& k : kernel_basis(eqs)) {
                        SparseMatrix x(d, d);
                        for (const auto& [u, v] : k) x.set(cells[static_cast<std::size_t>(u)].first, cells[static_cast<std::size_t>(u)].second, v);
                        labels.push_back((px == Parity::even ? "X" : "Y") + std::to_string(mats.size() + 1));
                        mats.push_back(x);
                    }
                }
            break;
        }
        case Family::p:
        case Family::ptilde: {
            if (m != n) throw AlgebraError("periplectic algebras take one parameter");
            const int d = 2 * n;
            g->name_ = std::string(family_name(f)) + "(" + std::to_string(n) + ")";
            g->msize_ = d;
            g->meven_ = n;
            for (int a = 0; a < d; ++a) deg.push_back(a < n ? 1 : 0);
            auto a_elem = [&](int i, int j) {
                SparseMatrix x = unit(d, i, j);
                x.add(n + j, n + i, -1);
                return x;
            };
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    mats.push_back(a_elem(i, j));
                    labels.push_back("A(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
            if (f == Family::ptilde) {
                for (int i = 0; i < n; ++i) {
                    g->cartan_.push_back(static_cast<int>(mats.size()));
                    mats.push_back(a_elem(i, i));
                    labels.push_back("H" + std::to_string(i + 1));
                }
            } else {
                for (int i = 0; i + 1 < n; ++i) {
                    g->cartan_.push_back(static_cast<int>(mats.size()));
                    mats.push_back(a_elem(i, i) - a_elem(i + 1, i + 1));
                    labels.push_back("H" + std::to_string(i + 1));
                }
            }
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    SparseMatrix x = unit(d, i, n + j);
                    if (i != j) x.add(j, n + i, 1);
                    mats.push_back(x);
                    labels.push_back("B(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    SparseMatrix x = unit(d, n + i, j);
                    x.add(n + j, i, -1);
                    mats.push_back(x);
                    labels.push_back("C(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    auto it = std::find(labels.begin(), labels.end(), "A(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                    g->g0_positive_.push_back(static_cast<int>(it - labels.begin()));
                }
            break;
        }
    }
    g->finish(std::move(labels), std::move(deg));
    if (f == Family::psl) g->central_ = g->coordinates(SparseMatrix::identity(g->msize_));
    return g;
}

void LieSuperalgebra::finish(std::vector<std::string> labels, std::vector<int> index_degree) {
    const int dimension = static_cast<int>(mats_.size());
    const int d = msize_;
    std::vector<Parity> par;
    for (const auto& x : mats_) par.push_back(matrix_parity(x, meven_));

    // Coordinate extraction: rows P of the flattened basis matrix on which it is
    // invertible, and that inverse.
    std::vector<SparseVector> flat;
    for (const auto& x : mats_) flat.push_back(flatten(x));
    Echelon e = rref_rows(flat, d * d);
    if (e.rank() != dimension) throw AlgebraError(name_ + ": realization matrices are linearly dependent");
    dec_pivots_ = e.pivots;
    SparseMatrix square(dimension, dimension);
    for (int k = 0; k < dimension; ++k)
        for (int r = 0; r < dimension; ++r) square.set(r, k, entry(flat[static_cast<std::size_t>(k)], dec_pivots_[static_cast<std::size_t>(r)]));
    std::vector<SparseVector> inv_cols;
    for (int r = 0; r < dimension; ++r) {
        SparseVector x;
        if (!solve(square, {{r, 1}}, x)) throw AlgebraError(name_ + ": singular coordinate block");
        inv_cols.push_back(std::move(x));
    }
    dec_inverse_ = SparseMatrix::from_columns(dimension, std::move(inv_cols));
    dec_flat_ = std::move(flat);

    table_.assign(static_cast<std::size_t>(dimension) * static_cast<std::size_t>(dimension), {});
    for (int i = 0; i < dimension; ++i)
        for (int j = 0; j < dimension; ++j) {
            auto c = coordinates(supercommutator(mats_[static_cast<std::size_t>(i)], par[static_cast<std::size_t>(i)],
                                                 mats_[static_cast<std::size_t>(j)], par[static_cast<std::size_t>(j)]));
            if (!c) throw AlgebraError(name_ + ": bracket leaves the span of the basis");
            table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dimension) + static_cast<std::size_t>(j)] = std::move(*c);
        }

    if (!index_degree.empty()) {
        for (const auto& x : mats_) {
            std::optional<int> z;
            for (int j = 0; j < d; ++j)
                for (const auto& [i, v] : x.col(j)) {
                    int t = index_degree[static_cast<std::size_t>(i)] - index_degree[static_cast<std::size_t>(j)];
                    if (z && *z != t) throw AlgebraError(name_ + ": basis element is not Z-homogeneous");
                    z = t;
                }
            int t = z.value_or(0);
            if (t < -1 || t > 1) throw AlgebraError(name_ + ": Z-grading outside -1..1");
            zgrade_.push_back(t);
        }
    }

    // Roots: eigenvalues of ad(h) for the Cartan basis, when every basis element is a weight vector.
    std::vector<Weight> roots(static_cast<std::size_t>(dimension));
    bool weighted = !cartan_.empty();
    for (int i = 0; i < dimension && weighted; ++i) {
        std::vector<int> w;
        for (int h : cartan_) {
            const auto& b = bracket(h, i);
            if (b.empty()) {
                w.push_back(0);
            } else if (b.size() == 1 && b[0].first == i && b[0].second.get_den() == 1) {
                w.push_back(static_cast<int>(b[0].second.get_num().get_si()));
            } else {
                weighted = false;
                break;
            }
        }
        roots[static_cast<std::size_t>(i)] = Weight(w);
    }
    std::vector<BasisVector> basis;
    for (int i = 0; i < dimension; ++i)
        basis.push_back({labels[static_cast<std::size_t>(i)], par[static_cast<std::size_t>(i)],
                         weighted ? roots[static_cast<std::size_t>(i)] : Weight()});
    space_ = SuperSpace(std::move(basis));

    for (int i = 0; i < dimension; ++i) {
        (par[static_cast<std::size_t>(i)] == Parity::even ? even_ : odd_).push_back(i);
        if (type_one()) by_degree_[zgrade(i) + 1].push_back(i);
    }

    if (family_ == Family::gl || family_ == Family::sl || family_ == Family::psl) {
        // Supertranspose: (A B; C D) -> (A^t C^t; -B^t D^t).
        for (const auto& x : mats_) {
            SparseMatrix t(d, d);
            for (int j = 0; j < d; ++j)
                for (const auto& [i, v] : x.col(j)) {
                    bool upper_right = i < meven_ && j >= meven_;
                    t.set(j, i, upper_right ? Scalar(-v) : v);
                }
            auto c = coordinates(t);
            if (!c) throw AlgebraError(name_ + ": supertranspose leaves the algebra");
            tau_.push_back(std::move(*c));
        }
    }
    validate();
}

void LieSuperalgebra::validate() const {
    const int dimension = dim();
    auto fail = [&](const std::string& what, int i, int j) {
        throw AlgebraError(name_ + ": " + what + " fails on (" + label(i) + ", " + label(j) + ")");
    };
    for (int i = 0; i < dimension; ++i)
        for (int j = 0; j < dimension; ++j) {
            const auto& b = bracket(i, j);
            if (b != scaled(bracket(j, i), -koszul_sign(parity(i), parity(j)))) fail("super antisymmetry", i, j);
            for (const auto& [k, v] : b) {
                if (parity(k) != parity(i) + parity(j)) fail("parity additivity", i, j);
                if (type_one() && zgrade(k) != zgrade(i) + zgrade(j)) fail("Z-grade additivity", i, j);
            }
            if (type_one() && zgrade(i) == zgrade(j) && zgrade(i) != 0 && !b.empty()) fail("abelian g_{+-1}", i, j);
        }
    for (int i = 0; i < dimension; ++i)
        for (int j = 0; j < dimension; ++j)
            for (int k = 0; k < dimension; ++k) {
                SparseVector x{{i, 1}};
                SparseVector lhs = bracket(x, bracket(j, k));
                SparseVector rhs = bracket(bracket(i, j), SparseVector{{k, 1}});
                add_scaled(rhs, bracket(SparseVector{{j, 1}}, bracket(i, k)), koszul_sign(parity(i), parity(j)));
                if (lhs != rhs) fail("super Jacobi with " + label(k), i, j);
            }
    if (has_tau()) {
        for (int i = 0; i < dimension; ++i) {
            for (const auto& [k, v] : tau_basis(i))
                if (type_one() && zgrade(k) != -zgrade(i)) fail("tau reverses the grading", i, i);
            for (int j = 0; j < dimension; ++j) {
                SparseVector lhs = tau(bracket(i, j));
                SparseVector rhs = scaled(bracket(tau_basis(j), tau_basis(i)), koszul_sign(parity(i), parity(j)));
                if (lhs != rhs) fail("tau antiautomorphism", i, j);
            }
        }
    }
}

AlgebraPtr LieSuperalgebra::parse(std::string_view text) {
    static const std::regex two(R"(^\s*(gl|sl|psl|osp)\((\d+)\|(\d+)\)\s*$)");
    static const std::regex one(R"(^\s*(q|p|ptilde|p\xCC\x83)\((\d+)\)\s*$)");
    std::string s(text);
    std::smatch mt;
    auto bad = [&]() { return AlgebraError("cannot parse algebra name '" + s + "'"); };
    try {
        if (std::regex_match(s, mt, two)) {
            int a = std::stoi(mt[2]), b = std::stoi(mt[3]);
            const std::string f = mt[1];
            if (f == "gl") return make(Family::gl, a, b);
            if (f == "sl") return make(Family::sl, a, b);
            if (f == "psl") return make(Family::psl, a, b);
            return make(Family::osp, a, b);
        }
        if (std::regex_match(s, mt, one)) {
            int a = std::stoi(mt[2]);
            const std::string f = mt[1];
            if (f == "q") return make(Family::q, a, a);
            if (f == "p") return make(Family::p, a, a);
            return make(Family::ptilde, a, a);
        }
    } catch (const std::out_of_range&) {
        throw bad();
    }
    throw bad();
}

// ---------------------------------------------------------------- queries

int LieSuperalgebra::zgrade(int i) const {
    if (!type_one()) throw AlgebraError(name_ + " has no Z-grading");
    return zgrade_[static_cast<std::size_t>(i)];
}

const std::vector<int>& LieSuperalgebra::degree_basis(int d) const {
    if (!type_one()) throw AlgebraError(name_ + " has no Z-grading");
    if (d < -1 || d > 1) throw AlgebraError("Z-degree out of range");
    return by_degree_[d + 1];
}

SparseVector LieSuperalgebra::bracket(const SparseVector& x, const SparseVector& y) const {
    SparseVector r;
    for (const auto& [i, a] : x) {
        if (i < 0 || i >= dim()) throw AlgebraError("vector does not match algebra dimension");
        for (const auto& [j, b] : y) {
            if (j < 0 || j >= dim()) throw AlgebraError("vector does not match algebra dimension");
            add_scaled(r, bracket(i, j), a * b);
        }
    }
    return r;
}

const SparseVector& LieSuperalgebra::tau_basis(int i) const {
    if (!has_tau()) throw AlgebraError(name_ + " has no strong duality");
    return tau_[static_cast<std::size_t>(i)];
}

SparseVector LieSuperalgebra::tau(const SparseVector& x) const {
    SparseVector r;
    for (const auto& [i, a] : x) add_scaled(r, tau_basis(i), a);
    return r;
}

Weight LieSuperalgebra::delta_weight() const {
    if (!has_weights()) throw AlgebraError(name_ + " has no weight data");
    Weight w = Weight::zero(cartan_.size());
    for (int i : odd_) w = w + root(i);
    return w;
}

SparseMatrix LieSuperalgebra::matrix_of(const SparseVector& x) const {
    SparseMatrix r(msize_, msize_);
    for (const auto& [i, a] : x) r = r + mats_[static_cast<std::size_t>(i)].scaled(a);
    return r;
}

std::optional<SparseVector> LieSuperalgebra::coordinates(const SparseMatrix& mat) const {
    SparseVector t = flatten(mat);
    SparseVector picked;
    for (std::size_t r = 0; r < dec_pivots_.size(); ++r) {
        Scalar v = entry(t, dec_pivots_[r]);
        if (sgn(v) != 0) picked.emplace_back(static_cast<int>(r), v);
    }
    SparseVector coords = dec_inverse_.apply(picked);
    SparseVector back;
    for (const auto& [k, c] : coords) add_scaled(back, dec_flat_[static_cast<std::size_t>(k)], c);
    if (back != t) return std::nullopt;
    return coords;
}

Weight LieSuperalgebra::weight_from_coords(const std::vector<int>& coords) const {
    if (family_ == Family::q) {
        if (coords.size() != 1) throw AlgebraError("q(1) weights have one coordinate");
        return Weight(coords);
    }
    if (static_cast<int>(coords.size()) != msize_)
        throw AlgebraError(name_ + " weights need " + std::to_string(msize_) + " coordinates");
    std::vector<int> w;
    for (int h : cartan_) {
        Scalar s = 0;
        const auto& mh = mats_[static_cast<std::size_t>(h)];
        for (int a = 0; a < msize_; ++a) s += mh.at(a, a) * coords[static_cast<std::size_t>(a)];
        w.push_back(static_cast<int>(s.get_num().get_si()));
    }
    return Weight(w);
}

std::optional<std::vector<int>> LieSuperalgebra::coords_from_weight(const Weight& w) const {
    if (family_ != Family::sl) {
        if (family_ == Family::gl || family_ == Family::q) return w.c;
        return std::nullopt;
    }
    if (w.size() != cartan_.size()) return std::nullopt;
    const int free = msize_ - 1;
    SparseMatrix a(static_cast<int>(cartan_.size()), free);
    for (std::size_t k = 0; k < cartan_.size(); ++k)
        for (int j = 0; j < free; ++j) a.set(static_cast<int>(k), j, mats_[static_cast<std::size_t>(cartan_[k])].at(j, j));
    SparseVector rhs;
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k]) rhs.emplace_back(static_cast<int>(k), w[k]);
    SparseVector x;
    if (!solve(a, rhs, x)) return std::nullopt;
    std::vector<int> coords(static_cast<std::size_t>(msize_), 0);
    for (const auto& [j, v] : x) {
        if (v.get_den() != 1) return std::nullopt;
        coords[static_cast<std::size_t>(j)] = static_cast<int>(v.get_num().get_si());
    }
    return coords;
}

bool LieSuperalgebra::is_dominant(const std::vector<int>& coords) const {
    if (family_ == Family::q) return coords.size() == 1;
    if (static_cast<int>(coords.size()) != msize_) return false;
    for (int a = 0; a + 1 < msize_; ++a)
        if (a + 1 != meven_ && coords[static_cast<std::size_t>(a)] < coords[static_cast<std::size_t>(a + 1)]) return false;
    return true;
}

std::string LieSuperalgebra::format_coords(const std::vector<int>& coords) const {
    std::ostringstream os;
    os << '(';
    for (std::size_t a = 0; a < coords.size(); ++a) {
        if (a) os << (static_cast<int>(a) == meven_ && family_ != Family::q ? "|" : ",");
        os << coords[a];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------- odd cone

int odd_block_rank(const LieSuperalgebra& g, const SparseVector& x, int side) {
    SparseMatrix mx = g.matrix_of(x);
    std::vector<int> top, bottom;
    for (int a = 0; a < g.matrix_size(); ++a) (a < g.matrix_even_rows() ? top : bottom).push_back(a);
    return rank(side > 0 ? mx.restrict_to(top, bottom) : mx.restrict_to(bottom, top));
}

std::vector<SparseVector> square_zero_cone_sample(const LieSuperalgebra& g, int count, std::uint64_t seed) {
    std::vector<SparseVector> out;
    auto push = [&](SparseVector v) {
        if (!is_square_zero(g, v)) throw AlgebraError("cone sampler produced a point with [x,x] != 0");
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    };
    push({});
    for (int i : g.odd_basis())
        if (is_square_zero(g, {{i, 1}})) push({{i, 1}});
    if (!g.type_one()) return out;

    if (g.family() == Family::gl || g.family() == Family::sl || g.family() == Family::psl) {
        const int m = g.m(), d = g.matrix_size();
        for (int side : {1, -1})
            for (int r = 1; r <= std::min(g.m(), g.n()); ++r) {
                SparseMatrix x(d, d);
                for (int k = 0; k < r; ++k) side > 0 ? x.set(k, m + k, 1) : x.set(m + k, k, 1);
                push(*g.coordinates(x));
            }
    }

    std::mt19937_64 rng(seed);
    auto small = [&]() {
        int num = static_cast<int>(rng() % 5) - 2;
        if (num == 0) num = 1;
        return Scalar(num, static_cast<int>(rng() % 3) + 1);
    };
    const auto& up = g.degree_basis(1);
    const auto& down = g.degree_basis(-1);
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts++ < 40 * std::max(count, 1)) {
        SparseVector b;
        for (int i : up)
            if (rng() % 2) add_scaled(b, {{i, 1}}, small());
        // Linear conditions [b, c] = 0 on c in g_-1.
        std::vector<SparseVector> cols;
        for (int j : down) cols.push_back(g.bracket(b, {{j, 1}}));
        auto ker = kernel_basis(SparseMatrix::from_columns(g.dim(), cols));
        SparseVector c;
        for (const auto& k : ker) {
            SparseVector kv;
            for (const auto& [t, v] : k) kv.emplace_back(down[static_cast<std::size_t>(t)], v);
            std::sort(kv.begin(), kv.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
            if (rng() % 3) add_scaled(c, kv, small());
        }
        SparseVector x = b;
        add_scaled(x, c, 1);
        if (!x.empty()) push(std::move(x));
    }
    return out;
}

}  // namespace superhom
