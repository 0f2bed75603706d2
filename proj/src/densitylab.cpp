#include "bps/densitylab.hpp"

#include <algorithm>
#include <thread>

namespace bps {

IntPoly QuarticParams::poly() const {
    return IntPoly(std::vector<Integer>{1, Integer(static_cast<long>(n)), Integer(static_cast<long>(m)),
                                        Integer(static_cast<long>(n)), 1});
}

bool in_Q(const QuarticParams& params) {
    const std::array<std::int64_t, 5> c{1, params.n, params.m, params.n, 1};
    if (auto fast = sturm_count_real_small(c)) return *fast == 0;
    return sturm_count_real(params.poly()) == 0;
}

std::array<std::complex<double>, 4> quartic_roots_closed_form(const QuarticParams& params) {
    using C = std::complex<double>;
    const double n = static_cast<double>(params.n);
    const double m = static_cast<double>(params.m);
    const C disc = std::sqrt(C(n * n - 4.0 * m + 8.0));
    const C base = C(n * n - 2.0 * (m + 2.0));
    const C plus = std::sqrt(n * disc + base);
    const C minus = std::sqrt(-n * disc + base);
    const double root2 = std::sqrt(2.0);
    return {(-disc - root2 * plus - n) / 4.0, (-disc + root2 * plus - n) / 4.0,
            (disc - root2 * minus - n) / 4.0, (disc + root2 * minus - n) / 4.0};
}

namespace {

// Runs fn(n) for n in [0, k] across `jobs` threads, strided so that every
// thread gets a similar mix of cheap and expensive rows. Results are indexed
// by n, so the merge order is fixed.
template <typename Row>
auto per_row(std::int64_t k, unsigned jobs, Row fn) {
    using Result = decltype(fn(std::int64_t{0}));
    std::vector<Result> rows(static_cast<std::size_t>(k + 1));
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        for (std::int64_t n = 0; n <= k; ++n) rows[static_cast<std::size_t>(n)] = fn(n);
        return rows;
    }
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            for (std::int64_t n = t; n <= k; n += jobs) rows[static_cast<std::size_t>(n)] = fn(n);
        });
    }
    for (auto& th : pool) th.join();
    return rows;
}

} // namespace

std::vector<QuarticParams> exceptional_set(std::int64_t scan_bound, unsigned jobs) {
    if (scan_bound < 4) throw Error("bad-params", "scan bound must be at least 4");
    // (n, m) in Q iff (-n, m) in Q: scan n >= 0 and mirror.
    auto rows = per_row(scan_bound, jobs, [scan_bound](std::int64_t n) {
        std::vector<QuarticParams> hits;
        for (std::int64_t m = -scan_bound; m <= scan_bound; ++m)
            if (n * n - 4 * m + 8 > 0 && in_Q({n, m})) hits.push_back({n, m});
        return hits;
    });
    std::vector<QuarticParams> out;
    for (const auto& row : rows)
        for (const auto& p : row) {
            out.push_back(p);
            if (p.n != 0) out.push_back({-p.n, p.m});
        }
    std::sort(out.begin(), out.end());
    return out;
}

Integer ceil_pow_three_halves(const Integer& x) {
    if (x < 0) throw Error("bad-params", "negative base");
    const Integer cube = x * x * x;
    Integer root = sqrt(cube);
    if (root * root != cube) root += 1;
    return root;
}

DensityReport density_scan(std::int64_t k, unsigned jobs) {
    if (k < 1) throw Error("bad-params", "K must be at least 1");
    auto rows = per_row(k, jobs, [k](std::int64_t n) {
        std::uint64_t hits = 0;
        for (std::int64_t m = -k; m <= k; ++m)
            if (in_Q({n, m})) ++hits;
        return hits;
    });
    DensityReport report;
    report.k = k;
    for (std::size_t n = 0; n < rows.size(); ++n) report.count_q += (n == 0 ? 1 : 2) * rows[n];
    const std::uint64_t side = static_cast<std::uint64_t>(2 * k + 1);
    report.count_total = side * side;
    report.fraction = make_rational(Integer(std::to_string(report.count_q)), Integer(std::to_string(report.count_total)));
    const Integer side_z(std::to_string(side));
    report.bound = make_rational(ceil_pow_three_halves(Integer(std::to_string(4 * k - 4))), 3 * side_z * side_z);
    return report;
}

} // namespace bps
