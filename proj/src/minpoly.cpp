#include "bps/rootcert.hpp"

#include <algorithm>

namespace bps {

namespace {

constexpr std::size_t kCandidateBudget = 4'000'000;
const Integer kDivisorLimit("1000000000000");

std::optional<std::vector<Integer>> positive_divisors(const Integer& v) {
    Integer n = abs(v);
    if (n == 0 || n > kDivisorLimit) return std::nullopt;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer ceil_rational(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer floor_rational(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

struct Search {
    const IntPoly& s;
    IsolatingInterval iv;
    std::vector<Rational> lo_pow;  // lo^k, k = 0..4
    std::vector<Rational> hi_pow;
    Integer norm;                  // upper bound on ||s||_2
    std::size_t tried = 0;

    bool root_in_bracket(const IntPoly& f) const { return f.sign_at(iv.lo) * f.sign_at(iv.hi) < 0; }

    bool accept(const IntPoly& f) const {
        return f.content() == 1 && root_in_bracket(f) && try_divide(s, f).has_value();
    }

    // Monic-or-not factor of degree d with c_d, c_0 and c_2..c_{d-1} fixed;
    // c_1 is pinned by f(lambda) = 0 to the integers of an exact interval.
    std::optional<IntPoly> solve_linear_coefficient(std::vector<Integer>& c, unsigned d) {
        // c_1 = -c_0 / lambda - sum_{i>=2} c_i lambda^(i-1); every term is
        // monotone in lambda > 0, so endpoint values bound it.
        Rational lo_sum = 0;
        Rational hi_sum = 0;
        auto add_term = [&](const Rational& at_lo, const Rational& at_hi) {
            if (at_lo < at_hi) {
                lo_sum += at_lo;
                hi_sum += at_hi;
            } else {
                lo_sum += at_hi;
                hi_sum += at_lo;
            }
        };
        add_term(Rational(-c[0]) / lo_pow[1], Rational(-c[0]) / hi_pow[1]);
        for (unsigned i = 2; i <= d; ++i) add_term(-c[i] * lo_pow[i - 1], -c[i] * hi_pow[i - 1]);
        const Integer bound = binomial(d, 1) * norm;
        for (Integer c1 = ceil_rational(lo_sum); c1 <= floor_rational(hi_sum); ++c1) {
            ++tried;
            if (abs(c1) > bound) continue;
            c[1] = c1;
            IntPoly f(c);
            if (accept(f)) return f;
        }
        return std::nullopt;
    }
};

} // namespace

FactorSearch minimal_polynomial_factor(const IntPoly& p, const IsolatingInterval& bracket, unsigned max_degree) {
    if (p.is_zero()) throw Error("zero-polynomial", "minimal_polynomial_factor of the zero polynomial");
    if (bracket.lo < 0) throw Error("bracket", "factor search expects a positive root bracket");
    IntPoly s = square_free_part(p);
    while (s.degree() > 0 && s.trailing() == 0) s = divide_exact(s, IntPoly::x());
    if (s.sign_at(bracket.lo) * s.sign_at(bracket.hi) >= 0)
        throw Error("not-isolating", "bracket does not enclose a root of p");

    FactorSearch out;
    auto give_up = [&] {
        out.factor = s;
        out.fallback = true;
        out.irreducible = false;
        return out;
    };
    if (s.degree() == 1) {
        out.factor = s;
        out.irreducible = true;
        return out;
    }

    Integer norm_sq = 0;
    for (const auto& c : s.coeffs()) norm_sq += c * c;
    Integer norm = sqrt(norm_sq) + 1;

    const auto lead_divs = positive_divisors(s.leading());
    const auto tail_divs = positive_divisors(s.trailing());
    if (!lead_divs || !tail_divs) return give_up();

    // Narrow the bracket so each solved c_1 range spans only a few integers.
    IsolatingInterval iv{bracket.lo, bracket.hi, s};
    while (iv.lo <= 0) iv = bisect(iv);
    {
        const Integer h = ceil_rational(iv.hi) + 1;
        const Integer h5 = h * h * h * h * h;
        iv = refine_to_width(iv, Rational(Integer(1), Integer(64) * norm * h5));
    }

    Search search{s, iv, {}, {}, norm};
    search.lo_pow.push_back(1);
    search.hi_pow.push_back(1);
    for (int k = 1; k <= 4; ++k) {
        search.lo_pow.push_back(search.lo_pow.back() * iv.lo);
        search.hi_pow.push_back(search.hi_pow.back() * iv.hi);
    }

    const unsigned top = std::min<unsigned>(max_degree, static_cast<unsigned>(s.degree() - 1));
    for (unsigned d = 1; d <= top; ++d) {
        if (d == 1) {
            for (const auto& a : *lead_divs)
                for (const auto& b : *tail_divs)
                    for (int sgn_b : {1, -1}) {
                        ++search.tried;
                        Rational root = make_rational(-sgn_b * b, a);
                        if (!iv.contains(root)) continue;
                        IntPoly f(std::vector<Integer>{sgn_b * b, a});
                        if (search.accept(f)) {
                            out.factor = f;
                            out.irreducible = true;
                            out.candidates_tried = search.tried;
                            return out;
                        }
                    }
            continue;
        }

        // Free coefficients c_2..c_{d-1} within the Mignotte bounds.
        std::vector<Integer> bounds;
        Integer combos = Integer(lead_divs->size()) * Integer(2 * tail_divs->size());
        for (unsigned i = 2; i < d; ++i) {
            bounds.push_back(binomial(d, i) * norm);
            combos *= 2 * bounds.back() + 1;
        }
        if (combos + search.tried > kCandidateBudget) {
            out.candidates_tried = search.tried;
            return give_up();
        }

        std::vector<Integer> c(d + 1);
        std::vector<Integer> free(bounds.size());
        for (const auto& a : *lead_divs) {
            c[d] = a;
            for (const auto& b : *tail_divs)
                for (int sgn_b : {1, -1}) {
                    c[0] = sgn_b * b;
                    for (std::size_t i = 0; i < free.size(); ++i) free[i] = -bounds[i];
                    for (;;) {
                        for (std::size_t i = 0; i < free.size(); ++i) c[i + 2] = free[i];
                        if (auto f = search.solve_linear_coefficient(c, d)) {
                            out.factor = *f;
                            out.irreducible = true;
                            out.candidates_tried = search.tried;
                            return out;
                        }
                        std::size_t pos = 0;
                        while (pos < free.size() && free[pos] == bounds[pos]) {
                            free[pos] = -bounds[pos];
                            ++pos;
                        }
                        if (pos == free.size()) break;
                        ++free[pos];
                    }
                }
        }
    }
    out.candidates_tried = search.tried;
    // Every proper degree was searched exhaustively, so s itself is minimal.
    if (top + 1 == static_cast<unsigned>(s.degree())) {
        out.factor = s;
        out.irreducible = true;
        return out;
    }
    return give_up();
}

} // namespace bps
