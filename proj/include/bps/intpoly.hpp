#pragma once

#include "bps/core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bps {

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order and kept normalized:
/// the zero polynomial has no coefficients, every other polynomial has a
/// nonzero last coefficient.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> ascending);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly constant(const Integer& c);
    static IntPoly x();
    /// x - r
    static IntPoly linear_root(const Integer& r);
    /// den*x - num, the primitive linear factor vanishing at num/den.
    static IntPoly linear_root(const Rational& r);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero past the degree.
    Integer coeff(std::size_t k) const;
    const Integer& leading() const;
    Integer trailing() const { return coeff(0); }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& s);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(IntPoly p, const Integer& s) { return p *= s; }
    friend IntPoly operator*(const Integer& s, IntPoly p) { return p *= s; }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly pow(unsigned e) const;
    IntPoly derivative() const;
    /// x^deg * p(1/x)
    IntPoly reversed() const;
    /// p(-x)
    IntPoly negated_argument() const;
    /// p(x) * x^k
    IntPoly shifted(std::size_t k) const;

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// p / content, normalized to a positive leading coefficient.
    IntPoly primitive_part() const;
    /// Divides every coefficient by s; throws unless exact.
    IntPoly divexact(const Integer& s) const;

    /// Sign of p(r), computed exactly.
    int sign_at(const Rational& r) const;
    Integer eval(const Integer& v) const;
    Rational eval(const Rational& r) const;
    double eval_approx(double v) const;

    /// Ascending coefficients joined by single spaces.
    std::string to_text() const;
    /// Human-readable form such as "x^2 - 3*x + 1".
    std::string to_pretty() const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

struct DivisionResult {
    IntPoly quotient;
    IntPoly remainder;
};

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r.
DivisionResult pseudo_divide(const IntPoly& a, const IntPoly& b);
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Exact division in Z[x]; nullopt when b does not divide a.
std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b);
/// Exact division in Z[x]; throws Error("inexact-division") otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient, via the subresultant
/// remainder sequence. Throws Error("zero-gcd") when both inputs are zero.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

struct SquareFreePart {
    IntPoly factor;
    unsigned multiplicity;
    friend bool operator==(const SquareFreePart&, const SquareFreePart&) = default;
};

/// p = content * prod factor^multiplicity, factors primitive, square-free,
/// pairwise coprime, of positive degree and positive leading coefficient.
/// Parts are listed by increasing multiplicity.
struct SquareFreeDecomposition {
    std::vector<SquareFreePart> parts;
    Integer content;

    IntPoly expand() const;
    /// Product of the multiplicity-one factors (1 when there are none).
    IntPoly simple_part() const;
};

SquareFreeDecomposition square_free_decomposition(const IntPoly& p);

/// Primitive square-free part p / gcd(p, p'), positive leading coefficient.
IntPoly square_free_part(const IntPoly& p);

bool all_roots_nonsimple(const IntPoly& p);
bool is_palindromic(const IntPoly& p);
bool is_reciprocal(const IntPoly& p);

/// 1 + max |a_i / a_n| rounded up: every complex root has modulus strictly
/// below this value.
Integer cauchy_bound(const IntPoly& p);

/// Number of distinct real roots in (lo, hi].
std::size_t sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi);
/// Number of distinct real roots, counted on (-B, B] with B the Cauchy bound.
std::size_t sturm_count_real(const IntPoly& p);

/// Sturm chain p0 = square-free part of p, p1 = p0', then negated
/// pseudo-remainders rescaled by positive factors.
std::vector<IntPoly> sturm_chain(const IntPoly& p);
/// Sign variations of the chain evaluated at r.
std::size_t sign_variations(std::span<const IntPoly> chain, const Rational& r);

/// Distinct-real-root count of a small polynomial with machine-word
/// coefficients, run entirely in checked 128-bit arithmetic. Returns nullopt
/// if any intermediate value would overflow; the caller then falls back to
/// sturm_count_real.
std::optional<std::size_t> sturm_count_real_small(std::span<const std::int64_t> ascending);

/// Clears denominators of x^g * q((x-1)^2 / x): sum_k q_k (x-1)^(2k) x^(g-k).
/// Throws Error("degree") unless deg q == g.
IntPoly compose_identity_rhs(const IntPoly& q, unsigned g);

/// Parses whitespace-separated ascending coefficients.
IntPoly parse_poly_text(const std::string& text);

} // namespace bps
