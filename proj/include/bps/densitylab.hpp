#pragma once

#include "bps/core.hpp"
#include "bps/intpoly.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace bps {

/// q_(n,m)(x) = x^4 + n x^3 + m x^2 + n x + 1, the palindromic quartics
/// that occur as characteristic polynomials in Sp(4, Z).
struct QuarticParams {
    std::int64_t n = 0;
    std::int64_t m = 0;

    IntPoly poly() const;
    friend bool operator==(const QuarticParams&, const QuarticParams&) = default;
    friend auto operator<=>(const QuarticParams&, const QuarticParams&) = default;
};

/// True iff q_(n,m) has no real root (Sturm count over the reals is 0).
bool in_Q(const QuarticParams& params);

/// Nested-radical root formulas evaluated in double precision with
/// principal square roots. Diagnostic only; not a certificate.
std::array<std::complex<double>, 4> quartic_roots_closed_form(const QuarticParams& params);

/// Pairs with max(|n|, |m|) <= scan_bound that lie in Q while
/// n^2 - 4m + 8 > 0, sorted. Throws Error("bad-params") for scan_bound < 4.
std::vector<QuarticParams> exceptional_set(std::int64_t scan_bound, unsigned jobs = 1);

struct DensityReport {
    std::int64_t k = 0;
    std::uint64_t count_q = 0;
    std::uint64_t count_total = 0;
    /// count_q / count_total, reduced.
    Rational fraction;
    /// ceil((4K - 4)^(3/2)) / (3 (2K + 1)^2), an upper bound on the
    /// irrational (4K - 4)^(3/2) / (3 (2K + 1)^2).
    Rational bound;
};

/// Exhaustive count over the sup-norm ball of radius K, split across `jobs`
/// threads; the result does not depend on `jobs`.
DensityReport density_scan(std::int64_t k, unsigned jobs = 1);

/// ceil(x^(3/2)) for x >= 0, exactly.
Integer ceil_pow_three_halves(const Integer& x);

} // namespace bps
