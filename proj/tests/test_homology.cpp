#include "doctest.h"
#include "superhom/homology.hpp"

using namespace superhom;

namespace {

// Term dimensions counted by brute force over all index words.
int brute_term_dim(int even, int odd, int sym, int ext) {
    const int n = even + odd;
    int count = 0;
    auto ok = [&](const std::vector<int>& w, bool symmetric) {
        for (std::size_t k = 1; k < w.size(); ++k) {
            if (w[k] < w[k - 1]) return false;
            bool is_odd = w[k] >= even;
            if (w[k] == w[k - 1] && (symmetric ? is_odd : !is_odd)) return false;
        }
        return true;
    };
    std::function<int(int, std::vector<int>&, bool)> words = [&](int k, std::vector<int>& cur, bool symmetric) {
        if (static_cast<int>(cur.size()) == k) return ok(cur, symmetric) ? 1 : 0;
        int c = 0;
        for (int i = 0; i < n; ++i) {
            cur.push_back(i);
            c += words(k, cur, symmetric);
            cur.pop_back();
        }
        return c;
    };
    std::vector<int> a, b;
    count = words(sym, a, true) * words(ext, b, false);
    return count;
}

}  // namespace

TEST_CASE("super Koszul complexes are exact") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            if (a + b == 0) continue;
            for (int s = 1; s <= 4; ++s) {
                auto c = super_koszul(SuperSpace::of_dims(a, b), s);
                for (int p = 0; p <= s; ++p) {
                    CHECK(c.term(p).dim() == super_symmetric_dim(a, b, s - p) * super_exterior_dim(a, b, p));
                    CHECK(c.term(p).dim() == brute_term_dim(a, b, s - p, p));
                }
                auto cert = check_exactness(c, 0, s);
                CHECK_MESSAGE(cert.exact, "(" << a << "|" << b << ") s=" << s);
                auto h = homology_dims(c);
                for (const auto& [p, d] : h) CHECK(d.total() == 0);
            }
        }
    auto small = super_koszul(SuperSpace::of_dims(0, 1), 2);
    CHECK(small.term(0).dim() == 0);
    CHECK(small.term(1).dim() == 1);
    CHECK(small.term(2).dim() == 1);
    CHECK(small.differential(2).at(0, 0) == 2);
    CHECK_THROWS_AS(super_koszul(SuperSpace::of_dims(1, 1), 0), HomologyError);
}

TEST_CASE("relative resolution") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    for (int p = 1; p <= 3; ++p) {
        auto d = koszul_induced_differential(g, p);
        auto top = koszul_induced_term(g, p), low = koszul_induced_term(g, p - 1);
        for (int x = 0; x < g->dim(); ++x) CHECK(d * top.action(x) == low.action(x) * d);
    }
    auto r = relative_resolution(trivial_module(g), 5);
    for (int p = 0; p <= 5; ++p) {
        CHECK(r.term_dims[static_cast<std::size_t>(p)] == 4 * (p + 1));
        CHECK(r.term_dims[static_cast<std::size_t>(p)] == relative_term_dim(*g, p, 1));
    }
    auto ex = check_exactness(r, 1);
    CHECK(ex.exact);
    CHECK(ex.cokernel_dim == 1);

    for (const auto& [name, mod] : std::vector<std::pair<std::string, std::string>>{
             {"gl(1|1)", "kac"}, {"gl(2|1)", "trivial"}, {"gl(2|1)", "kac"}, {"q(1)", "trivial"}}) {
        auto h = LieSuperalgebra::parse(name);
        SuperModule m = mod == "kac" ? induce_kac(h, std::vector<int>(static_cast<std::size_t>(h->rank()), 0)) : trivial_module(h);
        auto rr = relative_resolution(m, 3);
        auto e = check_exactness(rr, m.dim());
        CHECK_MESSAGE(e.exact, name << " " << mod);
        CHECK(e.cokernel_dim == m.dim());
        for (int p = 0; p <= 3; ++p) {
            CHECK(rr.term_dims[static_cast<std::size_t>(p)] == relative_term_dim(*h, p, m.dim()));
            auto ind = induce_from_g0(tensor(odd_symmetric_power(h, p), restrict_to_g0(m)));
            CHECK(character(ind) == character(tensor(koszul_induced_term(h, p), m)));
        }
    }
}

TEST_CASE("relative Ext") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto c = trivial_module(g);
    auto e = relative_ext(c, c, 4);
    CHECK(e.total(0) == 1);
    CHECK(e.total(1) == 0);
    CHECK(e.total(2) == 1);
    CHECK(e.total(3) == 0);
    CHECK(e.total(4) == 1);

    auto q = LieSuperalgebra::parse("q(1)");
    auto eq = relative_ext(trivial_module(q), trivial_module(q), 2);
    CHECK(eq.total(1) != 0);

    for (int a = -2; a <= 2; ++a) {
        const auto& l = simple_module(g, {a, -a});
        CHECK(relative_ext(l, l, 0).total(0) == simple_info(g, {a, -a}).kappa);
    }
    CHECK(relative_ext(simple_module(q, {2}), simple_module(q, {2}), 0).total(0) == 2);

    // Degree 0 is Hom.
    auto k = induce_kac(g, {0, 0});
    CHECK(relative_ext(k, c, 0).total(0) == hom_dim(k, c));
    CHECK(relative_ext(c, coinduce_kac(g, {0, 0}), 0).total(0) == hom_dim(c, coinduce_kac(g, {0, 0})));
    // Projectives have no higher Ext.
    auto p = projective_indecomposable(g, {0, 0});
    auto ep = relative_ext(p, c, 3);
    CHECK(ep.total(1) == 0);
    CHECK(ep.total(2) == 0);
}

TEST_CASE("projective covers") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto pc = projective_cover(trivial_module(g));
    CHECK(pc.cover.dim() == 4);
    CHECK(pc.summands == std::vector<std::string>{"P(0|0)"});
    CHECK(rank(pc.surjection) == 1);
    auto pk = projective_cover(induce_kac(g, {0, 0}));
    CHECK(pk.summands == std::vector<std::string>{"P(0|0)"});
    auto q = LieSuperalgebra::parse("q(1)");
    CHECK(projective_cover(trivial_module(q)).cover.dim() == 2);
    CHECK(is_projective(projective_indecomposable(g, {0, 0})));
    CHECK(is_projective(induce_kac(g, {1, 1})));
    CHECK_FALSE(is_projective(trivial_module(g)));
    CHECK_FALSE(is_projective(induce_kac(g, {0, 0})));

    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    for (const auto& w : std::vector<std::vector<int>>{{0, 0, 0}, {1, 0, 0}, {1, 0, 5}}) {
        const auto& p = projective_indecomposable(g21, w);
        CHECK(verify_module(p).ok);
        CHECK(endomorphism_top_dim(p) == 1);
        CHECK(is_projective(p));
    }
}

TEST_CASE("minimal resolutions and complexity") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto rep = minimal_resolution(trivial_module(g), 8);
    std::vector<int> expect;
    for (int n = 0; n <= 8; ++n) expect.push_back(4 * (n + 1));
    CHECK(rep.dims() == expect);
    CHECK(rep.complexity.c == 2);
    for (int n = 0; n <= 8; ++n) CHECK(rep.steps[static_cast<std::size_t>(n)].dim <= relative_term_dim(*g, n, 1));

    std::vector<SuperModule> om;
    auto rk = minimal_resolution(induce_kac(g, {0, 0}), 6, &om);
    CHECK(rk.dims() == std::vector<int>(7, 4));
    CHECK(rk.complexity.c == 1);
    for (int n = 0; n <= 6; ++n) {
        REQUIRE(rk.steps[static_cast<std::size_t>(n)].summands.size() == 1);
        const auto& s = rk.steps[static_cast<std::size_t>(n)].summands[0];
        std::string want = "P(" + std::to_string(n) + "|" + std::to_string(-n) + ")";
        CHECK((s == want || s == "Pi" + want));
    }
    CHECK_FALSE(is_periodic(induce_kac(g, {0, 0}), 6));

    auto q = LieSuperalgebra::parse("q(1)");
    auto rq = minimal_resolution(trivial_module(q), 8);
    CHECK(rq.dims() == std::vector<int>(9, 2));
    CHECK(rq.complexity.c == 1);
    CHECK(is_periodic(trivial_module(q), 4));

    auto rp = minimal_resolution(projective_indecomposable(g, {0, 0}), 3);
    CHECK(rp.dims() == std::vector<int>{4, 0, 0, 0});
    CHECK(rp.complexity.c == 0);
}

TEST_CASE("complexity estimates") {
    CHECK(complexity_estimate({4, 8, 12, 16, 20, 24}).c == 2);
    CHECK(complexity_estimate({4, 4, 4, 4, 4}).c == 1);
    CHECK(complexity_estimate({4, 0, 0, 0}).c == 0);
    CHECK(complexity_estimate({1, 4, 9, 16, 25, 36, 49, 64}).c == 3);
    CHECK(complexity_estimate({2, 2}).low_confidence);
    CHECK_FALSE(complexity_estimate({4, 8, 12, 16, 20, 24}).low_confidence);
    CHECK(complexity_estimate({4, 8, 12, 16, 20, 24}).constant == 4);
    CHECK_THROWS_AS(complexity_estimate({}), HomologyError);
}

TEST_CASE("Ext recovers resolution multiplicities") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto rep = minimal_resolution(trivial_module(g), 4);
    auto c = trivial_module(g);
    for (int n = 0; n <= 4; ++n) {
        int total = 0;
        for (int a = -5; a <= 5; ++a) {
            auto e = relative_ext(c, simple_module(g, {a, -a}), n);
            total += e.total(n) * projective_indecomposable(g, {a, -a}).dim();
        }
        CHECK(total == rep.steps[static_cast<std::size_t>(n)].dim);
    }

    // q(1): dim Ext^n(M, S) = kappa_S [P_n : P(S)], with kappa = 2 off the trivial weight
    auto q = LieSuperalgebra::parse("q(1)");
    for (const auto& m : {trivial_module(q), simple_module(q, {1}), simple_module(q, {2})}) {
        auto rq = minimal_resolution(m, 4);
        for (int n = 0; n <= 4; ++n)
            for (int a = 0; a <= 3; ++a) {
                int kappa = simple_info(q, {a}).kappa;
                CHECK(kappa == (a == 0 ? 1 : 2));
                std::string label = "P(" + std::to_string(a) + ")";
                int mult = 0;
                for (const auto& s : rq.steps[static_cast<std::size_t>(n)].summands) mult += s == label || s == "Pi" + label;
                CHECK(relative_ext(m, simple_module(q, {a}), n).total(n) == kappa * mult);
            }
    }
}

TEST_CASE("Cartan window") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    std::vector<std::vector<int>> ws;
    for (int a = -3; a <= 3; ++a) ws.push_back({a, -a});
    auto w = cartan_window(g, ws);
    CHECK(w.interior == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(w.symmetric);
    for (int i : w.interior)
        for (int j = 0; j < 7; ++j) {
            int want = i == j ? 2 : (std::abs(i - j) == 1 ? 1 : 0);
            CHECK(w.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == want);
        }
    for (int i = 1; i < 7; ++i) CHECK(w.block[static_cast<std::size_t>(i)] == w.block[0]);

    auto t = cartan_window(g, {{1, 1}});
    CHECK(t.matrix == std::vector<std::vector<int>>{{1}});
    CHECK(t.symmetric);
}

TEST_CASE("gl(2|1) resolution is minimal by the Ext count") {
    auto g = LieSuperalgebra::parse("gl(2|1)");
    auto c = trivial_module(g);
    auto rep = minimal_resolution(c, 3);
    CHECK(rep.dims() == std::vector<int>{8, 24, 48, 80});
    const std::vector<std::vector<int>> window = {{0, 0, 0},  {0, -1, 1}, {1, 1, -2}, {0, -2, 2},  {2, 1, -3},
                                                  {0, -3, 3}, {3, 1, -4}, {1, 0, 0},  {-1, -1, 2}, {1, 0, -1}};
    for (int n = 0; n <= 3; ++n) {
        int total = 0;
        for (const auto& w : window)
            total += relative_ext(c, simple_module(g, w), n).total(n) * projective_indecomposable(g, w).dim();
        CHECK(total == rep.steps[static_cast<std::size_t>(n)].dim);
        CHECK(rep.steps[static_cast<std::size_t>(n)].dim <= relative_term_dim(*g, n, 1));
    }
}

TEST_CASE("sl(m|n) resolutions agree with gl(m|n) on restriction") {
    for (const auto& [gl, sl] : std::vector<std::pair<std::string, std::string>>{{"gl(2|1)", "sl(2|1)"}, {"gl(1|2)", "sl(1|2)"}}) {
        auto g = LieSuperalgebra::parse(gl), s = LieSuperalgebra::parse(sl);
        for (int w = -2; w <= 2; ++w) {
            auto lift = s->coords_from_weight(s->weight_from_coords({w, 0, -w}));
            REQUIRE(lift.has_value());
            CHECK(s->weight_from_coords(*lift) == s->weight_from_coords({w, 0, -w}));
            CHECK(lift->back() == 0);
        }
        CHECK(minimal_resolution(trivial_module(s), 3).dims() == minimal_resolution(trivial_module(g), 3).dims());
        std::vector<int> zero(3, 0);
        auto rk = minimal_resolution(induce_kac(s, zero), 3);
        CHECK(rk.dims() == minimal_resolution(induce_kac(g, zero), 3).dims());
        for (int n = 0; n <= 3; ++n) CHECK(rk.steps[static_cast<std::size_t>(n)].dim <= relative_term_dim(*s, n, 4));
        CHECK(relative_ext(trivial_module(s), trivial_module(s), 2).total(2) == 1);
    }
}
