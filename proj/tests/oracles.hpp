#pragma once
// Reference implementations used only by the tests. Each one takes a
// different route from the library code it checks.

#include "bps/exactmat.hpp"
#include "bps/intpoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using bps::Integer;
using bps::IntMatrix;
using bps::IntPoly;

// det(xI - A) by Laplace expansion along the first row, entries in Z[x].
inline IntPoly cofactor_det(const std::vector<std::vector<IntPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    IntPoly total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<IntPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<IntPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        IntPoly term = m[0][c] * cofactor_det(minor);
        if (c % 2) total -= term;
        else total += term;
    }
    return total;
}

inline IntPoly cofactor_charpoly(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = IntPoly::constant(-a(i, j));
            if (i == j) m[i][j] += IntPoly::x();
        }
    return cofactor_det(m);
}

// Leibniz-free integer determinant by cofactor expansion.
inline Integer cofactor_det_int(const IntMatrix& a) {
    return cofactor_charpoly(a).coeff(0) * ((a.dim() % 2) ? -1 : 1);
}

// Roots from the eigenvalues of the companion matrix (floating point).
inline std::vector<std::complex<double>> companion_roots(const IntPoly& p) {
    const long d = p.degree();
    if (d < 1) return {};
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    const double lead = p.leading().get_d();
    for (long i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (long i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> out;
    for (long i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

inline IntPoly from_integer_roots(const std::vector<long>& roots) {
    IntPoly p{1};
    for (long r : roots) p = p * IntPoly{-r, 1};
    return p;
}

// Palindromic quartic x^4 + n x^3 + m x^2 + n x + 1 divided by x^2 is
// t^2 + n t + (m - 2) with t = x + 1/x, and real x corresponds to real
// |t| >= 2. So a real root exists iff D = n^2 - 4m + 8 >= 0 and one of the
// t-roots (-n +- sqrt D)/2 reaches |t| >= 2, i.e. sqrt D >= 4 - |n|.
inline bool quartic_has_real_root(std::int64_t n, std::int64_t m) {
    const std::int64_t disc = n * n - 4 * m + 8;
    if (disc < 0) return false;
    const std::int64_t need = 4 - (n < 0 ? -n : n);
    return need <= 0 || disc >= need * need;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
    return m;
}

inline IntPoly random_poly(std::mt19937_64& rng, long degree, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<Integer> c;
    for (long i = 0; i <= degree; ++i) c.emplace_back(dist(rng));
    while (c.back() == 0) c.back() = dist(rng);
    return IntPoly(std::move(c));
}

// Numeric count of roots with |z| < r, plus the distance of the closest
// root modulus to r (used to skip radii too near a root).
struct NumericDisk {
    std::size_t count = 0;
    double gap = 0;
};

inline NumericDisk numeric_disk_count(const IntPoly& p, double r) {
    NumericDisk out{0, 1e300};
    for (auto z : companion_roots(p)) {
        const double m = std::abs(z);
        if (m < r) ++out.count;
        out.gap = std::min(out.gap, std::abs(m - r));
    }
    return out;
}

} // namespace oracle
