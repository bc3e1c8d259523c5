#include "doctest.h"
#include "superhom/structure.hpp"

using namespace superhom;

namespace {

int index_of(const LieSuperalgebra& g, const std::string& label) {
    for (int i = 0; i < g.dim(); ++i)
        if (g.label(i) == label) return i;
    FAIL("missing label " << label);
    return -1;
}

std::vector<int> layer_dims(const SuperModule& m) {
    std::vector<int> out;
    for (const auto& l : radical_filtration(m)) out.push_back(l.dim());
    return out;
}

// Brute-force character of Lambda(g_1bar) (x) S: sum over subsets of odd basis elements.
Character pbw_character(const LieSuperalgebra& g, const SuperModule& s) {
    Character c;
    const auto odd = g.odd_basis();
    const int n = static_cast<int>(odd.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        Weight w = Weight::zero(g.rank());
        int k = 0;
        for (int b = 0; b < n; ++b)
            if (mask >> b & 1) {
                w = w + g.root(odd[static_cast<std::size_t>(b)]);
                ++k;
            }
        for (int i = 0; i < s.dim(); ++i) c[{w + s.weight(i), s.parity(i) + parity_of(k)}] += 1;
    }
    return c;
}

}  // namespace

TEST_CASE("verify_module accepts genuine modules and names a broken pair") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    CHECK(verify_module(trivial_module(g)).ok);
    SuperModule k = induce_kac(g, {0, 0});
    auto cert = verify_module(k);
    CHECK(cert.ok);
    CHECK(cert.pairs_checked == g->dim() * g->dim());

    // E11 + E22 acts by 1 on K(1|0), so negating one odd action breaks [x, y].
    SuperModule p = induce_kac(g, {1, 0});
    std::vector<SparseMatrix> acts = p.actions();
    const int y = index_of(*g, "E(2,1)");
    acts[static_cast<std::size_t>(y)] = acts[static_cast<std::size_t>(y)].scaled(-1);
    std::vector<std::string> labels;
    std::vector<Parity> parities;
    for (int i = 0; i < p.dim(); ++i) {
        labels.push_back(p.space().basis()[static_cast<std::size_t>(i)].label);
        parities.push_back(p.parity(i));
    }
    SuperModule broken(g, labels, parities, acts, "broken");
    auto bad = verify_module(broken);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure.find("E(") != std::string::npos);
}

TEST_CASE("simple even-part modules") {
    auto g11 = LieSuperalgebra::parse("gl(1|1)");
    auto s = simple_g0(g11, {3, -3});
    CHECK(s.dim() == 1);
    CHECK(s.weight(0).c == std::vector<int>{3, -3});
    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    CHECK(simple_g0(g21, {1, 0, 0}).dim() == 2);
    CHECK(simple_g0(g21, {2, 0, 0}).dim() == 3);
    CHECK(simple_g0(LieSuperalgebra::parse("gl(1|2)"), {0, 2, -1}).dim() == 4);
    CHECK(simple_g0(LieSuperalgebra::parse("gl(3|1)"), {1, 1, 0, 0}).dim() == 3);
    CHECK(simple_g0(LieSuperalgebra::parse("gl(3|1)"), {2, 1, 0, 0}).dim() == 8);
    CHECK(verify_module(simple_g0(LieSuperalgebra::parse("gl(3|1)"), {2, 1, 0, 0})).ok);
    CHECK_THROWS_AS(simple_g0(g21, {0, 1, 0}), ModuleError);
}

TEST_CASE("Kac modules and induced modules") {
    auto g11 = LieSuperalgebra::parse("gl(1|1)");
    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    auto k = induce_kac(g11, {0, 0});
    CHECK(k.dim() == 2);
    CHECK(induce_kac(g21, {0, 0, 0}).dim() == 4);
    CHECK(induce_kac(g21, {2, 0, 0}).dim() == 4 * 3);
    CHECK(coinduce_kac(g21, {1, 0, 0}).dim() == 4 * 2);
    CHECK(verify_module(coinduce_kac(g21, {1, 0, 0})).ok);

    // The highest weight vector is the one of weight (0|0); g_1 kills it.
    const int x = index_of(*g11, "E(1,2)");
    for (int i = 0; i < k.dim(); ++i)
        if (k.weight(i).c == std::vector<int>{0, 0}) CHECK(k.action(x).apply({{i, 1}}).empty());

    auto p = induce_from_g0(simple_g0(g11, {0, 0}));
    CHECK(p.dim() == 4);
    CHECK(kernel_basis(p.action(index_of(*g11, "E(2,1)"))).size() == 2);
    auto q = LieSuperalgebra::parse("q(1)");
    auto pq = induce_from_g0(simple_g0(q, {0}));
    CHECK(pq.dim() == 2);
    CHECK(verify_module(pq).ok);

    for (const auto& [g, w] : std::vector<std::pair<AlgebraPtr, std::vector<int>>>{
             {g11, {0, 0}}, {g11, {2, -1}}, {g21, {1, 0, 0}}, {g21, {2, 0, -1}}, {q, {0}}, {q, {3}}}) {
        auto s = simple_g0(g, w);
        auto ind = induce_from_g0(s);
        CHECK(ind.dim() == (1 << g->odd_basis().size()) * s.dim());
        CHECK(character(ind) == pbw_character(*g, s));
    }
}

TEST_CASE("tensor, dual and parity shift") {
    auto g = LieSuperalgebra::parse("gl(2|1)");
    auto a = induce_kac(g, {1, 0, 0});
    auto b = coinduce_kac(g, {0, 0, 1});
    auto t = tensor(a, b);
    CHECK(verify_module(t).ok);
    CHECK(character(t) == character_product(character(a), character(b)));

    auto one = simple_g0(LieSuperalgebra::parse("gl(1|1)"), {2, -1});
    auto d = dual(one);
    CHECK(d.weight(0).c == std::vector<int>{-2, 1});

    auto pi = parity_shift(a);
    CHECK(verify_module(pi).ok);
    CHECK(character(pi) == parity_flip(character(a)));
    auto pp = parity_shift(pi);
    CHECK(pp.actions() == a.actions());
    CHECK(verify_module(dual(a)).ok);
    CHECK(is_isomorphic(dual(dual(a)), a));
}

TEST_CASE("transpose dual") {
    auto g11 = LieSuperalgebra::parse("gl(1|1)");
    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    for (const auto& m : {induce_kac(g11, {0, 0}), induce_kac(g21, {1, 0, 0}),
                          induce_from_g0(simple_g0(g21, {0, 0, 0}))}) {
        auto t = transpose_dual(m);
        CHECK(verify_module(t).ok);
        CHECK(character(t) == character(m));
        CHECK(is_isomorphic(transpose_dual(t), m));
    }
    auto k = induce_kac(g11, {0, 0});
    CHECK(is_isomorphic(transpose_dual(k), coinduce_kac(g11, {0, 0})));
    CHECK_FALSE(is_isomorphic(k, coinduce_kac(g11, {0, 0})));
    CHECK_THROWS(transpose_dual(trivial_module(LieSuperalgebra::parse("q(1)"))));
}

TEST_CASE("radical layers, head and socle") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto p = induce_from_g0(simple_g0(g, {0, 0}));
    CHECK(layer_dims(p) == std::vector<int>{1, 2, 1});
    auto layers = radical_filtration(p);
    Character mid = character(layers[1]);
    CHECK(mid.count({Weight{{1, -1}}, Parity::odd}) == 1);
    CHECK(mid.count({Weight{{-1, 1}}, Parity::odd}) == 1);
    CHECK(is_isomorphic(head(p), trivial_module(g)));
    CHECK(is_isomorphic(socle(p), trivial_module(g)));
    auto r1 = radical_trace(p), r2 = radical_via_simples(p);
    CHECK(r1.dim() == r2.dim());
    CHECK(r1.sum(r2).dim() == r1.dim());

    auto k = induce_kac(g, {0, 0});
    CHECK(layer_dims(k) == std::vector<int>{1, 1});
    CHECK(is_isomorphic(head(k), trivial_module(g)));
    CHECK(layer_dims(trivial_module(g)) == std::vector<int>{1});
    CHECK(layer_dims(induce_kac(g, {1, 1})) == std::vector<int>{2});

    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    for (const auto& w : std::vector<std::vector<int>>{{0, 0, 0}, {1, 0, 0}, {1, 0, 5}, {2, 0, -1}}) {
        auto h = head(induce_kac(g21, w));
        CHECK(layer_dims(h).size() == 1);
        CHECK(is_isomorphic(h, simple_module(g21, w)));
        CHECK(dominant_weights(h).back() == w);
    }
    CHECK(simple_module(g21, {0, 0, 0}).dim() == 1);
    CHECK(simple_module(g21, {1, 0, 5}).dim() == 8);
}

TEST_CASE("decomposition into indecomposables") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto p = induce_from_g0(simple_g0(g, {0, 0}));
    CHECK(decompose_into_indecomposables(p).size() == 1);
    CHECK(endomorphism_top_dim(p) == 1);

    auto c = trivial_module(g);
    auto parts = decompose_into_indecomposables(direct_sum(c, parity_shift(c)));
    CHECK(parts.size() == 2);

    // Typical weight: the induced module is the sum of two typical Kac modules.
    auto ind = induce_from_g0(simple_g0(g, {1, 0}));
    auto split = decompose_into_indecomposables(ind, 7);
    REQUIRE(split.size() == 2);
    int hits = 0;
    for (const auto& s : split) {
        CHECK(s.module.dim() == 2);
        if (is_isomorphic(s.module, induce_kac(g, {1, 0}), true)) ++hits;
        if (is_isomorphic(s.module, induce_kac(g, {2, -1}), true)) ++hits;
        auto id = s.projection * s.inclusion;
        CHECK(id == SparseMatrix::identity(s.module.dim()));
    }
    CHECK(hits == 2);

    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    auto ind21 = induce_from_g0(simple_g0(g21, {0, 0, 0}));
    int total = 0;
    for (const auto& s : decompose_into_indecomposables(ind21)) {
        total += s.module.dim();
        CHECK(endomorphism_top_dim(s.module) == 1);
    }
    CHECK(total == ind21.dim());
}

TEST_CASE("Frobenius reciprocity") {
    auto g11 = LieSuperalgebra::parse("gl(1|1)");
    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    auto q = LieSuperalgebra::parse("q(1)");
    std::vector<std::pair<SuperModule, SuperModule>> pairs = {
        {simple_g0(g11, {0, 0}), trivial_module(g11)},
        {simple_g0(g11, {0, 0}), induce_from_g0(simple_g0(g11, {0, 0}))},
        {simple_g0(g11, {1, -1}), induce_kac(g11, {0, 0})},
        {simple_g0(g21, {0, 0, 0}), induce_kac(g21, {0, 0, 0})},
        {simple_g0(g21, {1, 0, 0}), tensor(induce_kac(g21, {0, 0, 0}), coinduce_kac(g21, {1, 0, 0}))},
        {simple_g0(q, {0}), trivial_module(q)},
        {simple_g0(q, {2}), induce_from_g0(simple_g0(q, {2}))},
    };
    for (const auto& [s, t] : pairs)
        CHECK(hom_dim(induce_from_g0(s), t) == hom_dim(s, restrict_to_g0(t), true));
}

TEST_CASE("self-injectivity character identity") {
    for (const auto& [name, w] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"gl(1|1)", {0, 0}}, {"gl(1|1)", {3, -1}}, {"gl(2|1)", {0, 0, 0}},
             {"gl(2|1)", {1, 0, 2}}, {"q(1)", {0}}, {"q(1)", {1}}}) {
        auto g = LieSuperalgebra::parse(name);
        auto s = simple_g0(g, w);
        auto co = coinduce_from_g0(tensor(s, delta_module(g)));
        CHECK(verify_module(co).ok);
        CHECK(character(induce_from_g0(s)) == character(co));
    }
}

TEST_CASE("simple module data") {
    auto g11 = LieSuperalgebra::parse("gl(1|1)");
    for (int a = -2; a <= 2; ++a) {
        auto info = simple_info(g11, {a, -a});
        CHECK(info.kappa == 1);
        CHECK(info.atypicality == 1);
    }
    CHECK(atypicality(*g11, {1, 1}) == 0);
    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    CHECK(atypicality(*g21, {0, 0, 0}) == 1);
    CHECK(atypicality(*g21, {1, 0, 0}) == 1);
    CHECK(atypicality(*g21, {1, 0, 5}) == 0);
    CHECK(simple_info(g21, {1, 0, 5}).kappa == 1);

    auto q = LieSuperalgebra::parse("q(1)");
    CHECK(simple_module(q, {0}).dim() == 1);
    CHECK(simple_info(q, {0}).kappa == 1);
    CHECK(simple_module(q, {2}).dim() == 2);
    CHECK(simple_info(q, {2}).kappa == 2);
    CHECK_THROWS_AS(atypicality(*q, {0}), ModuleError);
}
