#pragma once

#include "symtorus/linalg.hpp"
#include "symtorus/torus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using namespace symtorus;

inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && rng() % 2) u(0, 0) = -1;
        return u;
    }
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = idx(rng);
        std::size_t j = idx(rng);
        if (i == j) j = (j + 1) % n;
        const int c = coeff(rng);
        for (std::size_t col = 0; col < n; ++col) u(i, col) += c * u(j, col);
        if (rng() % 5 == 0) u.swap_rows(i, j);
    }
    return u;
}

inline IntMatrix random_int_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int bound = 6) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

inline Rational random_rational(std::mt19937_64& rng, int max_den = 12, int span = 2) {
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-span * q, span * q);
    Rational r(num(rng), q);
    r.canonicalize();
    return r;
}

inline RatVector random_rat_vector(std::size_t n, std::mt19937_64& rng, int max_den = 12) {
    RatVector v(n);
    for (auto& x : v) x = random_rational(rng, max_den);
    return v;
}

/// Determinant by cofactor expansion; slow but independent of the elimination code.
inline Integer cofactor_det(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        const Integer term = a(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

inline Rational cofactor_det(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        const Rational term = a(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// k-th determinantal divisor: gcd of all k x k minors.
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rows);
    subsets(a.cols(), k, 0, cur, cols);
    Integer g = 0;
    for (const auto& r : rows)
        for (const auto& c : cols) {
            IntMatrix m(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(cofactor_det(m)).get_mpz_t());
        }
    return g;
}

/// Rank over Q by plain Gaussian elimination on a copy.
inline std::size_t gauss_rank(std::vector<RatVector> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

inline TorusElement te(const Rational& a, const Rational& b) { return TorusElement(RatVector{a, b}); }

}  // namespace testsupport
