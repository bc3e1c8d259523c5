#pragma once

// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <vector>

namespace oracle {

// Fraction-free Bareiss elimination over the integers. Rational input is
// cleared row by row by the lcm of denominators first.
inline int bareiss_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (const auto& x : m[i]) l = lcm(l, mpz_class(x.get_den()));
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mpz_class(m[i][j] * l);
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace oracle
