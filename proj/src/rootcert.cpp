#include "bps/rootcert.hpp"

#include <algorithm>
#include <utility>

namespace bps {

namespace {

// A point strictly inside (lo, hi) where p does not vanish, as close to the
// midpoint as the roots of p allow.
Rational split_point(const IntPoly& p, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    if (p.sign_at(mid) != 0) return mid;
    Rational step = (hi - lo) / 4;
    // p has finitely many roots, so one of these distinct points works.
    for (;;) {
        Rational candidate = mid + step;
        if (p.sign_at(candidate) != 0) return candidate;
        step /= 2;
    }
}

} // namespace

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw Error("zero-polynomial", "isolate_real_roots of the zero polynomial");
    const IntPoly s = square_free_part(p);
    std::vector<IsolatingInterval> out;
    if (s.degree() <= 0) return out;

    const auto chain = sturm_chain(s);
    const Integer bound = cauchy_bound(s);
    struct Pending {
        Rational lo, hi;
        std::size_t v_lo, v_hi;
    };
    std::vector<Pending> stack;
    Rational lo0(-bound), hi0(bound);
    stack.push_back({lo0, hi0, sign_variations(chain, lo0), sign_variations(chain, hi0)});
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        const std::size_t count = cur.v_lo - cur.v_hi;
        if (count == 0) continue;
        if (count == 1) {
            out.push_back(refine_to_width({cur.lo, cur.hi, s}, Rational(1)));
            continue;
        }
        Rational m = split_point(s, cur.lo, cur.hi);
        const std::size_t v_m = sign_variations(chain, m);
        stack.push_back({cur.lo, m, cur.v_lo, v_m});
        stack.push_back({m, cur.hi, v_m, cur.v_hi});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

IsolatingInterval bisect(const IsolatingInterval& iv) {
    Rational m = split_point(iv.poly, iv.lo, iv.hi);
    const int s_lo = iv.poly.sign_at(iv.lo);
    const int s_m = iv.poly.sign_at(m);
    if (s_lo != s_m) return {iv.lo, m, iv.poly};
    return {m, iv.hi, iv.poly};
}

IsolatingInterval refine_to_width(IsolatingInterval iv, const Rational& width) {
    while (iv.width() > width) iv = bisect(iv);
    return iv;
}

// ---------------------------------------------------------------------------
// Schur-Cohn disk counting

std::optional<std::size_t> schur_cohn_unit_count(const IntPoly& f) {
    if (f.is_zero()) return std::nullopt;
    // count(f) = count(Tf)      when |a_0| > |a_n|
    //          = n - count(Tf)  when |a_0| < |a_n|
    // with Tf = a_0 f - a_n f* of formal degree n - 1 (f real, f* the
    // reversal at formal degree n). Tracked as count(f) = base + dir*count(cur).
    std::vector<Integer> cur = f.coeffs();
    long base = 0;
    long dir = 1;
    while (cur.size() > 1) {
        const std::size_t n = cur.size() - 1;
        const Integer a0 = cur[0];
        const Integer an = cur[n];
        const Integer delta = a0 * a0 - an * an;
        if (delta == 0) return std::nullopt;
        std::vector<Integer> next(n);
        Integer content = 0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = a0 * cur[i];
            mpz_submul(next[i].get_mpz_t(), an.get_mpz_t(), cur[n - i].get_mpz_t());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), next[i].get_mpz_t());
        }
        if (content > 1)
            for (auto& c : next) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        if (delta < 0) {
            base += dir * static_cast<long>(n);
            dir = -dir;
        }
        cur = std::move(next);
    }
    if (cur.empty() || cur[0] == 0) return std::nullopt;
    return static_cast<std::size_t>(base);
}

namespace {

// For palindromic h of even degree 2k, the T with h(x) = x^k T(x + 1/x).
// A root e^{it} of h on the unit circle corresponds to the real root 2cos t
// of T in [-2, 2].
IntPoly chebyshev_reduce(const IntPoly& h) {
    if (!is_palindromic(h) || h.degree() % 2 != 0)
        throw Error("internal", "gcd with reversal is not palindromic");
    const std::size_t k = static_cast<std::size_t>(h.degree() / 2);
    const auto& c = h.coeffs();
    IntPoly d_prev = IntPoly::constant(2);  // x^0 + x^-0
    IntPoly d_cur = IntPoly::x();           // x + x^-1
    IntPoly t = IntPoly::constant(c[k]);
    const IntPoly tx = IntPoly::x();
    for (std::size_t j = 1; j <= k; ++j) {
        t += d_cur * c[k + j];
        IntPoly d_next = tx * d_cur - d_prev;
        d_prev = std::move(d_cur);
        d_cur = std::move(d_next);
    }
    return t;
}

// Distinct unit-circle roots of a square-free f.
std::size_t distinct_unit_roots(const IntPoly& f) {
    if (f.degree() <= 0) return 0;
    // Unit-circle roots of a real polynomial are shared with its reversal.
    IntPoly h = gcd(f, f.reversed());
    std::size_t found = 0;
    for (long sgn : {1L, -1L}) {
        const IntPoly lin{-sgn, 1};
        if (auto q = try_divide(h, lin)) {
            h = *q;
            ++found;
        }
    }
    if (h.degree() <= 0) return found;
    if (h.leading() < 0) h = -h;
    // Without the roots +-1, each t in (-2, 2) gives a conjugate pair.
    return found + 2 * sturm_count(chebyshev_reduce(h), Rational(-2), Rational(2));
}

} // namespace

bool has_unit_circle_root(const IntPoly& p) {
    if (p.degree() <= 0) return false;
    return distinct_unit_roots(square_free_part(p)) > 0;
}

namespace {

// den^d * p(num/den * x) with integer coefficients.
IntPoly scale_argument(const IntPoly& p, const Rational& r) {
    const auto& c = p.coeffs();
    const std::size_t d = c.size() - 1;
    std::vector<Integer> out(c.size());
    Integer num_pow = 1;
    std::vector<Integer> den_pows(c.size());
    den_pows[0] = 1;
    for (std::size_t i = 1; i < c.size(); ++i) den_pows[i] = den_pows[i - 1] * r.get_den();
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = c[i] * num_pow * den_pows[d - i];
        num_pow *= r.get_num();
    }
    return IntPoly(std::move(out));
}

std::optional<std::size_t> scaled_count(const IntPoly& q, const Rational& r) {
    return schur_cohn_unit_count(scale_argument(q, r));
}

} // namespace

DiskCount count_roots_in_disk(const IntPoly& p, const Rational& r, unsigned max_refinement) {
    if (r <= 0) throw Error("radius", "disk radius must be positive");
    if (p.is_zero()) throw Error("zero-polynomial", "count_roots_in_disk of the zero polynomial");

    // Roots at the origin are inside every disk.
    std::size_t zeros = 0;
    while (p.coeff(zeros) == 0) ++zeros;
    const IntPoly q(std::vector<Integer>(p.coeffs().begin() + static_cast<long>(zeros), p.coeffs().end()));

    DiskCount out;
    if (q.degree() == 0) {
        out.status = DiskCount::Status::Count;
        out.count = zeros;
        return out;
    }
    if (auto c = scaled_count(q, r)) {
        out.status = DiskCount::Status::Count;
        out.count = zeros + *c;
        return out;
    }
    if (has_unit_circle_root(scale_argument(q, r))) {
        out.root_on_circle = true;
        return out;
    }
    Rational eps(1, 2);
    for (unsigned k = 1; k <= max_refinement; ++k, eps /= 2) {
        auto inner = scaled_count(q, r * (1 - eps));
        if (!inner) continue;
        auto outer = scaled_count(q, r * (1 + eps));
        if (!outer) continue;
        if (*inner == *outer) {
            out.status = DiskCount::Status::Count;
            out.count = zeros + *inner;
            return out;
        }
    }
    return out;
}

std::size_t roots_on_circle(const IntPoly& p, const Rational& r) {
    if (r <= 0) throw Error("radius", "circle radius must be positive");
    if (p.is_zero()) throw Error("zero-polynomial", "roots_on_circle of the zero polynomial");
    std::size_t zeros = 0;
    while (p.coeff(zeros) == 0) ++zeros;
    const IntPoly q(std::vector<Integer>(p.coeffs().begin() + static_cast<long>(zeros), p.coeffs().end()));
    if (q.degree() <= 0) return 0;
    std::size_t total = 0;
    for (const auto& part : square_free_decomposition(scale_argument(q, r)).parts)
        total += part.multiplicity * distinct_unit_roots(part.factor);
    return total;
}

// ---------------------------------------------------------------------------
// Leading eigenvalue

namespace {

using LStatus = LeadingEigenvalue::Status;

LeadingEigenvalue give_up(LeadingEigenvalue le, LStatus status, std::string reason) {
    le.status = status;
    le.reason = std::move(reason);
    le.bracket.reset();
    return le;
}

// Multiplicity in p of the unique root of p's square-free part in iv.
unsigned multiplicity_in(const SquareFreeDecomposition& sfd, const IsolatingInterval& iv) {
    for (const auto& part : sfd.parts)
        if (part.factor.sign_at(iv.lo) * part.factor.sign_at(iv.hi) < 0) return part.multiplicity;
    return 0;
}

} // namespace

LeadingEigenvalue leading_eigenvalue_bracket(const IntPoly& p, unsigned max_refinement) {
    LeadingEigenvalue le;
    if (p.is_zero()) throw Error("zero-polynomial", "leading eigenvalue of the zero polynomial");
    if (p.degree() < 1) return give_up(le, LStatus::NoRealRootAboveOne, "constant polynomial");

    auto roots = isolate_real_roots(p);
    if (roots.empty()) return give_up(le, LStatus::NoRealRootAboveOne, "no real root");
    IsolatingInterval iv = roots.back();
    const Rational one(1);
    if (iv.hi <= one) return give_up(le, LStatus::NoRealRootAboveOne, "largest real root is at most 1");
    if (iv.lo < one) {
        if (iv.poly.sign_at(one) == 0) return give_up(le, LStatus::NoRealRootAboveOne, "largest real root is 1");
        if (iv.poly.sign_at(one) == iv.poly.sign_at(iv.hi))
            return give_up(le, LStatus::NoRealRootAboveOne, "largest real root is below 1");
        iv.lo = one;
    }

    const auto sfd = square_free_decomposition(p);
    le.multiplicity = multiplicity_in(sfd, iv);
    // -lambda is a root exactly when s(x) and s(-x) share the root lambda.
    {
        const IntPoly& s = iv.poly;
        IntPoly shared = gcd(s, s.negated_argument());
        if (shared.degree() > 0 && shared.sign_at(iv.lo) * shared.sign_at(iv.hi) < 0) {
            for (const auto& part : sfd.parts) {
                IntPoly mirrored = gcd(part.factor.negated_argument(), s);
                if (mirrored.degree() > 0 && mirrored.sign_at(iv.lo) * mirrored.sign_at(iv.hi) < 0)
                    le.negative_tie = part.multiplicity;
            }
        }
    }

    const std::size_t deg = static_cast<std::size_t>(p.degree());
    // A rational lambda lets a complex modulus tie be settled exactly.
    std::optional<Rational> exact_lambda;
    {
        const FactorSearch linear = minimal_polynomial_factor(iv.poly, iv, 1);
        if (!linear.fallback && linear.factor.degree() == 1)
            exact_lambda = make_rational(-linear.factor.coeff(0), linear.factor.coeff(1));
    }
    std::size_t circle_total = 0;
    if (exact_lambda) {
        circle_total = roots_on_circle(p, *exact_lambda);
        const std::size_t real_pair = le.multiplicity + le.negative_tie;
        if (circle_total > real_pair) le.circle_tie = static_cast<unsigned>(circle_total - real_pair);
    }

    bool outer_ok = false;
    for (unsigned round = 0; round <= max_refinement; ++round) {
        if (!outer_ok) {
            DiskCount c_hi = count_roots_in_disk(p, iv.hi, max_refinement);
            le.disk_counts.push_back({iv.hi, c_hi});
            if (c_hi.ok()) {
                if (c_hi.count < deg) {
                    le.bracket = iv;
                    return give_up(std::move(le), LStatus::NotDominant,
                                   "a root has modulus above the largest real root");
                }
                outer_ok = true;
            }
        }
        if (outer_ok) {
            DiskCount c_lo = count_roots_in_disk(p, iv.lo, max_refinement);
            le.disk_counts.push_back({iv.lo, c_lo});
            if (c_lo.ok() && deg - c_lo.count == le.multiplicity + le.negative_tie + le.circle_tie) {
                le.dominance_certified = true;
                break;
            }
        }
        if (round == max_refinement) break;
        iv = bisect(iv);
        // Shrinking hi toward lambda can expose a larger complex root; recheck.
        outer_ok = false;
    }
    if (!outer_ok)
        return give_up(std::move(le), LStatus::Undecided, "disk counts near lambda stayed degenerate");
    le.status = LStatus::Found;
    le.bracket = iv;
    if (!le.dominance_certified) le.reason = "possible modulus tie with lambda";
    return le;
}

// ---------------------------------------------------------------------------
// Bi-Perron certification

std::string_view to_string(CertMode m) {
    return m == CertMode::FullSpectrum ? "full-spectrum" : "minimal-poly";
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::BiPerron: return "BiPerron";
    case Verdict::NotBiPerron: return "NotBiPerron";
    case Verdict::Undecided: return "Undecided";
    }
    return "Undecided";
}

CertMode parse_cert_mode(std::string_view name) {
    if (name == "full-spectrum") return CertMode::FullSpectrum;
    if (name == "minimal-poly") return CertMode::MinimalPoly;
    throw Error("bad-mode", "unknown certification mode '" + std::string(name) + "'");
}

std::string_view to_string(Simplicity s) { return s == Simplicity::Simple ? "simple" : "multiple"; }

AnnulusCertificate certify_biperron(const IntPoly& p, CertMode mode, unsigned max_refinement) {
    if (p.is_zero()) throw Error("zero-polynomial", "certify_biperron of the zero polynomial");
    AnnulusCertificate cert;
    cert.poly = p;
    cert.certified_poly = p;
    cert.mode = mode;

    LeadingEigenvalue le = leading_eigenvalue_bracket(p, max_refinement);
    cert.disk_counts = le.disk_counts;
    switch (le.status) {
    case LStatus::NoRealRootAboveOne:
        cert.notes.push_back("leading root: none (" + le.reason + ")");
        cert.verdict = Verdict::NotBiPerron;
        return cert;
    case LStatus::NotDominant:
        cert.notes.push_back("leading root: none (" + le.reason + ")");
        // In minimal-poly mode the matrix has no real leading eigenvalue,
        // which is left unclassified.
        cert.verdict = mode == CertMode::FullSpectrum ? Verdict::NotBiPerron : Verdict::Undecided;
        return cert;
    case LStatus::Undecided:
        cert.notes.push_back(le.reason);
        cert.verdict = Verdict::Undecided;
        return cert;
    case LStatus::Found:
        break;
    }

    IsolatingInterval iv = *le.bracket;
    cert.leading_bracket = iv;
    cert.lambda_multiplicity = le.multiplicity;
    if (le.negative_tie > 0) cert.notes.push_back("-lambda is a root: modulus tie on the outer circle");
    if (le.circle_tie > 0)
        cert.notes.push_back("boundary root: " + std::to_string(le.circle_tie) +
                             " complex root(s) of modulus exactly lambda");
    if (!le.dominance_certified) {
        cert.notes.push_back(le.reason);
        cert.verdict = Verdict::Undecided;
        return cert;
    }

    IntPoly target = p;
    if (mode == CertMode::MinimalPoly) {
        FactorSearch fs = minimal_polynomial_factor(p, iv);
        target = fs.factor;
        cert.fallback = fs.fallback;
        if (fs.fallback) cert.notes.push_back("factor search inconclusive: certifying the square-free part");
        if (!fs.fallback) cert.notes.push_back("minimal polynomial of lambda: " + target.to_pretty());
    }
    cert.certified_poly = target;
    // lambda dominates every root of p, hence of target: all moduli <= lambda < hi.
    cert.outer_radius = iv.hi;

    if (target.trailing() == 0) {
        cert.notes.push_back("0 is a root");
        cert.verdict = Verdict::NotBiPerron;
        return cert;
    }
    const bool reciprocal = is_reciprocal(target);
    for (unsigned round = 0; round <= max_refinement; ++round) {
        const Rational inv_lo = 1 / iv.lo;
        const Rational inv_hi = 1 / iv.hi;
        DiskCount strict = count_roots_in_disk(target, inv_lo, max_refinement);
        cert.disk_counts.push_back({inv_lo, strict});
        if (strict.ok() && strict.count == 0) {
            cert.inner_radius = inv_lo;
            cert.inner_closure = "strict";
            break;
        }
        DiskCount loose = count_roots_in_disk(target, inv_hi, max_refinement);
        cert.disk_counts.push_back({inv_hi, loose});
        if (loose.ok() && loose.count > 0) {
            cert.notes.push_back("a root lies inside the disk of radius 1/hi < 1/lambda");
            cert.verdict = Verdict::NotBiPerron;
            cert.leading_bracket = iv;
            return cert;
        }
        if (reciprocal && loose.ok()) {
            // Roots pair up as z, 1/z, and |z| <= lambda for all of them.
            cert.inner_radius = inv_hi;
            cert.inner_closure = "reciprocal";
            break;
        }
        if (round == max_refinement) break;
        iv = bisect(iv);
    }
    cert.leading_bracket = iv;
    cert.outer_radius = iv.hi;
    DiskCount outer = count_roots_in_disk(target, iv.hi, max_refinement);
    cert.disk_counts.push_back({iv.hi, outer});
    if (!outer.ok() || outer.count != static_cast<std::size_t>(target.degree())) {
        cert.notes.push_back("outer disk count does not cover every root");
        cert.verdict = Verdict::Undecided;
        return cert;
    }
    if (!cert.inner_radius) {
        cert.notes.push_back("inner circle not separated within the refinement budget");
        cert.verdict = Verdict::Undecided;
        return cert;
    }
    cert.verdict = Verdict::BiPerron;
    return cert;
}

Simplicity classify_simplicity(const IntPoly& p, const IsolatingInterval& bracket) {
    if (p.is_zero()) throw Error("zero-polynomial", "classify_simplicity of the zero polynomial");
    const IntPoly s = square_free_part(p);
    if (bracket.lo >= bracket.hi || s.sign_at(bracket.lo) == 0 || s.sign_at(bracket.hi) == 0 ||
        sturm_count(s, bracket.lo, bracket.hi) != 1)
        throw Error("not-isolating", "bracket does not isolate a single root of p");
    const IntPoly g = gcd(p, p.derivative());
    if (g.degree() > 0 && sturm_count(g, bracket.lo, bracket.hi) > 0) return Simplicity::Multiple;
    return Simplicity::Simple;
}

} // namespace bps
