#pragma once

// Test-only reference implementations, kept deliberately naive and
// independent of the library code paths they check.

#include <gmpxx.h>

#include <vector>

#include "stackchow/intmat.hpp"

namespace oracles {

using stackchow::IntMatrix;

// Determinant by cofactor expansion along the first row.
inline mpz_class det_laplace(const IntMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    mpz_class acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        mpz_class term = m.at(0, j) * det_laplace(sub);
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

inline void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

// gcd of all k x k minors; 0 if there are none or all vanish.
inline mpz_class minor_gcd(const IntMatrix& m, int k) {
    if (k == 0) return 1;
    if (k > m.rows() || k > m.cols()) return 0;
    std::vector<std::vector<int>> rsel, csel;
    combinations(m.rows(), k, rsel);
    combinations(m.cols(), k, csel);
    mpz_class g = 0;
    for (const auto& rs : rsel) {
        for (const auto& cs : csel) {
            mpz_class d = det_laplace(m.select_rows(rs).select_cols(cs));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            if (g == 1) return g;
        }
    }
    return g;
}

// Invariant factors d_1 | d_2 | ... via d_1*...*d_k = gcd of k x k minors.
inline std::vector<mpz_class> invariant_factors_by_minors(const IntMatrix& m) {
    std::vector<mpz_class> out;
    mpz_class prev = 1;
    for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        mpz_class g = minor_gcd(m, k);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline int rank_by_minors(const IntMatrix& m) {
    int r = 0;
    for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        if (minor_gcd(m, k) != 0) r = k; else break;
    }
    return r;
}

// Integer span membership with the normal form hoisted out of the loop.
struct SpanTester {
    stackchow::SnfResult s;
    int rows;
    int cols;

    explicit SpanTester(const IntMatrix& m)
        : s(stackchow::smith_normal_form(m)), rows(m.rows()), cols(m.cols()) {}

    bool contains(const std::vector<mpz_class>& x) const {
        std::vector<mpz_class> w(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j) w[i] += s.u.at(i, j) * x[j];
        int n = std::min(rows, cols);
        for (int i = 0; i < rows; ++i) {
            if (i >= n || s.d.at(i, i) == 0) {
                if (w[i] != 0) return false;
            } else if (w[i] % s.d.at(i, i) != 0) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace oracles
