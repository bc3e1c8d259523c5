#include "doctest.h"
#include "oracles.hpp"
#include "superhom/linalg.hpp"
#include "superhom/linalg_serial.hpp"

#include <random>

using namespace superhom;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, int r, int c, int density_pct = 60) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pct(0, 99);
    SparseMatrix m(r, c);
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < r; ++i)
            if (pct(rng) < density_pct) m.set(i, j, Scalar(num(rng), den(rng)));
    return m;
}

// Product of elementary row operations together with its inverse.
std::pair<SparseMatrix, SparseMatrix> random_gl(std::mt19937& rng, int n) {
    SparseMatrix g = SparseMatrix::identity(n), gi = SparseMatrix::identity(n);
    if (n < 2) return {g, gi};
    std::uniform_int_distribution<int> idx(0, n - 1), t(-3, 3);
    for (int k = 0; k < 3 * n; ++k) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Scalar s(t(rng), 2);
        SparseMatrix e = SparseMatrix::identity(n), ei = SparseMatrix::identity(n);
        e.set(i, j, s);
        ei.set(i, j, -s);
        g = e * g;
        gi = gi * ei;
    }
    return {g, gi};
}

std::shared_ptr<const SuperSpace> space(int even, int odd) {
    return std::make_shared<SuperSpace>(SuperSpace::of_dims(even, odd));
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank(SparseMatrix::from_dense({{1, 0}, {0, 0}})) == 1);
    for (int n = 0; n < 6; ++n) CHECK(rank(SparseMatrix::identity(n)) == n);
}

TEST_CASE("rank agrees with the Bareiss oracle on random rational matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + trial % 7, c = 1 + (trial / 7) % 7;
        auto m = random_matrix(rng, r, c, trial % 2 ? 30 : 70);
        int expected = oracle::bareiss_rank(m.dense());
        CHECK(rank(m) == expected);
        CHECK(serial::rank(m) == expected);
    }
    auto m = random_matrix(rng, 5, 5, 100);
    CHECK(rank(m) == oracle::bareiss_rank(m.dense()));
}

TEST_CASE("kernel basis and rank-nullity") {
    CHECK(kernel_basis(SparseMatrix(3, 3)).size() == 3);
    CHECK(kernel_basis(SparseMatrix::identity(4)).empty());
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_matrix(rng, 1 + trial % 6, 1 + trial % 9, 35);
        auto ker = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(ker.size()) == m.cols());
        for (const auto& v : ker) CHECK(m.apply(v).empty());
        CHECK(serial::kernel_basis(m).size() == ker.size());
        CHECK(Subspace::span(ker, m.cols()).dim() == static_cast<int>(ker.size()));
    }
}

TEST_CASE("block-diagonal matrices split into independent components") {
    std::mt19937 rng(3);
    SparseMatrix big(40, 40);
    for (int b = 0; b < 8; ++b) {
        auto blk = random_matrix(rng, 5, 5, 50);
        for (int j = 0; j < 5; ++j)
            for (const auto& [i, x] : blk.col(j)) big.set(5 * b + i, 5 * b + j, x);
    }
    CHECK(rank(big) == serial::rank(big));
    CHECK(rank(big) == oracle::bareiss_rank(big.dense()));
}

TEST_CASE("subspace operations") {
    Subspace a = Subspace::span({{{0, 1}, {1, 1}}, {{2, 1}}}, 3);
    Subspace b = Subspace::span({{{0, 1}}, {{1, 1}}}, 3);
    CHECK(a.dim() == 2);
    CHECK(a.intersect(b).dim() == 1);
    CHECK(a.sum(b).dim() == 3);
    CHECK(a.contains({{0, 2}, {1, 2}, {2, -1}}));
    CHECK_FALSE(a.contains({{0, 1}}));
    auto coords = a.coordinates({{0, 3}, {1, 3}, {2, 5}});
    SparseVector back;
    for (std::size_t k = 0; k < coords.size(); ++k) add_scaled(back, a.basis()[k], coords[k]);
    CHECK(back == SparseVector{{0, 3}, {1, 3}, {2, 5}});

    SparseVector x;
    CHECK(solve(SparseMatrix::from_dense({{1, 1}, {0, 2}}), {{0, 3}, {1, 4}}, x));
    CHECK(x == SparseVector{{0, 1}, {1, 2}});
    CHECK_FALSE(solve(SparseMatrix::from_dense({{1, 1}, {2, 2}}), {{0, 1}}, x));
}

TEST_CASE("linear maps respect parity") {
    auto v = space(1, 1);
    SparseMatrix odd(2, 2);
    odd.set(1, 0, 1);
    CHECK_NOTHROW(LinearMap(v, v, odd, Parity::odd));
    CHECK_THROWS_AS(LinearMap(v, v, odd, Parity::even), LinalgError);
}

TEST_CASE("homology of basic complexes") {
    auto q = space(1, 0);
    Complex exact(0, {q, q}, {SparseMatrix::identity(1)});
    for (auto& [p, h] : homology_dims(exact)) CHECK(h.total() == 0);

    auto t = space(2, 1);
    Complex zero(0, {t, t, t}, {SparseMatrix(3, 3), SparseMatrix(3, 3)});
    for (auto& [p, h] : homology_dims(zero)) CHECK(h == ParityDims{2, 1});

    SparseMatrix d(1, 1);
    d.set(0, 0, 1);
    CHECK_THROWS_AS(Complex(0, {q, q, q}, {d, d}), LinalgError);
}

TEST_CASE("homology of randomly conjugated complexes matches the planted answer") {
    // Direct sums of 0 -> Q -> Q -> 0 pieces and isolated lines, conjugated
    // by random invertible matrices. Total dimension stays <= 30.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int len = 4;
        std::vector<int> dims(len, 0);
        std::vector<int> planted(len, 0);
        std::vector<std::vector<std::pair<int, int>>> pairs(len);  // pairs[p]: (row in p-1, col in p)
        int total = 0;
        while (total < 24) {
            int p = pick(rng) + 1;
            if (pick(rng) == 0) {
                planted[static_cast<std::size_t>(p)]++;
                dims[static_cast<std::size_t>(p)]++;
                total += 1;
            } else {
                pairs[static_cast<std::size_t>(p)].push_back({dims[static_cast<std::size_t>(p - 1)], dims[static_cast<std::size_t>(p)]});
                dims[static_cast<std::size_t>(p - 1)]++;
                dims[static_cast<std::size_t>(p)]++;
                total += 2;
            }
        }
        std::vector<std::shared_ptr<const SuperSpace>> terms;
        std::vector<std::pair<SparseMatrix, SparseMatrix>> g;
        for (int p = 0; p < len; ++p) {
            terms.push_back(space(dims[static_cast<std::size_t>(p)], 0));
            g.push_back(random_gl(rng, dims[static_cast<std::size_t>(p)]));
        }
        std::vector<SparseMatrix> diffs;
        for (int p = 1; p < len; ++p) {
            SparseMatrix d(dims[static_cast<std::size_t>(p - 1)], dims[static_cast<std::size_t>(p)]);
            for (auto [r, c] : pairs[static_cast<std::size_t>(p)]) d.set(r, c, 1);
            diffs.push_back(g[static_cast<std::size_t>(p - 1)].first * d * g[static_cast<std::size_t>(p)].second);
        }
        Complex c(0, terms, diffs);
        auto h = homology_dims(c);
        for (int p = 0; p < len; ++p) CHECK(h[p].total() == planted[static_cast<std::size_t>(p)]);
    }
}
