#include "doctest.h"
#include "superhom/algebra.hpp"

using namespace superhom;

namespace {

int index_of(const LieSuperalgebra& g, const std::string& label) {
    for (int i = 0; i < g.dim(); ++i)
        if (g.label(i) == label) return i;
    FAIL("missing label " << label);
    return -1;
}

SparseVector e(const LieSuperalgebra& g, const std::string& label) { return {{index_of(g, label), 1}}; }

}  // namespace

TEST_CASE("gl(1|1) basics") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    CHECK(g->dim() == 4);
    CHECK(g->odd_basis().size() == 2);
    CHECK(g->zgrade(index_of(*g, "E(1,2)")) == 1);
    CHECK(g->zgrade(index_of(*g, "E(2,1)")) == -1);

    SparseVector sum = e(*g, "E(1,1)");
    add_scaled(sum, e(*g, "E(2,2)"), 1);
    CHECK(g->bracket(e(*g, "E(1,2)"), e(*g, "E(2,1)")) == sum);
    CHECK(g->bracket(e(*g, "E(1,2)"), e(*g, "E(1,2)")).empty());

    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            SparseVector x = scaled(e(*g, "E(1,2)"), a);
            add_scaled(x, e(*g, "E(2,1)"), b);
            CHECK(g->bracket(x, x) == scaled(sum, 2 * a * b));
        }
}

TEST_CASE("dimensions of the algebras in scope") {
    CHECK(LieSuperalgebra::parse("q(1)")->odd_basis().size() == 1);
    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    CHECK(g21->dim() == 9);
    CHECK(g21->degree_basis(1).size() == 2);
    CHECK(g21->degree_basis(-1).size() == 2);
    CHECK(LieSuperalgebra::parse("sl(2|1)")->dim() == 8);
    CHECK(LieSuperalgebra::parse("psl(2|2)")->dim() == 15);
    CHECK(LieSuperalgebra::parse("gl(3|3)")->dim() == 36);
    // osp(m|2n): m(m-1)/2 + n(2n+1) + 2mn
    CHECK(LieSuperalgebra::parse("osp(2|2)")->dim() == 1 + 3 + 4);
    CHECK(LieSuperalgebra::parse("osp(2|4)")->dim() == 1 + 10 + 8);
    CHECK(LieSuperalgebra::parse("osp(2|4)")->degree_basis(1).size() == 4);
    CHECK(LieSuperalgebra::parse("ptilde(3)")->dim() == 18);
    CHECK(LieSuperalgebra::parse("p(3)")->dim() == 17);
    CHECK(LieSuperalgebra::parse("ptilde(3)")->degree_basis(1).size() == 6);
    CHECK(LieSuperalgebra::parse("ptilde(3)")->degree_basis(-1).size() == 3);
}

TEST_CASE("name parsing errors") {
    CHECK_THROWS_WITH_AS(LieSuperalgebra::parse("gl(1,1)"), doctest::Contains("gl(1,1)"), AlgebraError);
    CHECK_THROWS_AS(LieSuperalgebra::parse("sl(2|2)"), AlgebraError);
    CHECK_THROWS_AS(LieSuperalgebra::parse("gl(0|1)"), AlgebraError);
    CHECK_THROWS_AS(LieSuperalgebra::parse("q(2)"), AlgebraError);
    CHECK_THROWS_AS(LieSuperalgebra::parse("osp(3|2)"), AlgebraError);
    CHECK(LieSuperalgebra::parse("p\xCC\x83(2)")->name() == "ptilde(2)");
}

TEST_CASE("strong duality on the gl family") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto t = g->tau(e(*g, "E(1,2)"));
    REQUIRE(t.size() == 1);
    CHECK(t[0].first == index_of(*g, "E(2,1)"));
    for (int h : g->cartan()) CHECK(g->tau({{h, 1}}) == SparseVector{{h, 1}});

    for (const char* name : {"gl(1|1)", "gl(2|1)", "gl(2|2)", "sl(2|1)"}) {
        auto a = LieSuperalgebra::parse(name);
        std::optional<Scalar> sign;
        for (int i : a->odd_basis()) {
            auto tt = a->tau(a->tau({{i, 1}}));
            REQUIRE(tt.size() == 1);
            CHECK(tt[0].first == i);
            if (sign) CHECK(*sign == tt[0].second);
            sign = tt[0].second;
        }
        CHECK(*sign == -1);
    }
    CHECK_FALSE(LieSuperalgebra::parse("q(1)")->has_tau());
    CHECK_FALSE(LieSuperalgebra::parse("ptilde(2)")->has_tau());
    CHECK_THROWS_AS(LieSuperalgebra::parse("p(2)")->tau({{0, 1}}), AlgebraError);
}

TEST_CASE("delta weights") {
    for (const char* name : {"gl(1|1)", "gl(2|1)", "gl(1|2)", "gl(2|2)", "sl(2|1)", "q(1)"}) {
        auto g = LieSuperalgebra::parse(name);
        auto d = g->delta_weight();
        for (std::size_t k = 0; k < d.size(); ++k) CHECK(d[k] == 0);
    }
    CHECK(LieSuperalgebra::parse("q(1)")->delta_parity() == Parity::odd);
    CHECK_THROWS_AS(LieSuperalgebra::parse("osp(2|2)")->delta_weight(), AlgebraError);
}

TEST_CASE("type I algebras have abelian g_1 and g_-1") {
    for (const char* name : {"gl(2|1)", "gl(2|2)", "osp(2|4)", "ptilde(3)", "p(2)", "psl(2|2)"}) {
        auto g = LieSuperalgebra::parse(name);
        REQUIRE(g->type_one());
        for (int side : {1, -1})
            for (int i : g->degree_basis(side))
                for (int j : g->degree_basis(side)) CHECK(g->bracket(i, j).empty());
    }
}

TEST_CASE("psl records the central direction") {
    auto g = LieSuperalgebra::parse("psl(2|2)");
    REQUIRE(g->central());
    for (int i = 0; i < g->dim(); ++i) CHECK(g->bracket(*g->central(), {{i, 1}}).empty());
}

TEST_CASE("square-zero cone samples") {
    auto g = LieSuperalgebra::parse("gl(1|1)");
    auto pts = square_zero_cone_sample(*g, 12, 1);
    CHECK(pts.front().empty());
    int a = index_of(*g, "E(1,2)"), b = index_of(*g, "E(2,1)");
    for (const auto& x : pts) CHECK(sgn(entry(x, a) * entry(x, b)) == 0);
    CHECK(square_zero_cone_sample(*g, 12, 1) == pts);

    auto g22 = LieSuperalgebra::parse("gl(2|2)");
    auto p22 = square_zero_cone_sample(*g22, 20, 9);
    bool mixed = false;
    for (const auto& x : p22) {
        CHECK(g22->bracket(x, x).empty());
        mixed = mixed || (odd_block_rank(*g22, x, 1) > 0 && odd_block_rank(*g22, x, -1) > 0);
    }
    CHECK(mixed);

    auto q = LieSuperalgebra::parse("q(1)");
    CHECK(square_zero_cone_sample(*q, 5, 0).size() == 1);

    // Any point of g_1 is square-zero.
    auto g21 = LieSuperalgebra::parse("gl(2|1)");
    SparseVector x;
    for (int i : g21->degree_basis(1)) add_scaled(x, {{i, 1}}, Scalar(i + 2, 3));
    CHECK(g21->bracket(x, x).empty());
}
