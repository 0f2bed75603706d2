#pragma once

#include "bps/core.hpp"
#include "bps/intpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bps {

inline constexpr unsigned kDefaultMaxRefinement = 64;

/// Rational interval (lo, hi) holding exactly one real root of a square-free
/// polynomial. Neither endpoint is a root, and the polynomial changes sign
/// across the interval.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    IntPoly poly;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& r) const { return lo < r && r < hi; }
};

/// One sorted interval per distinct real root of p.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p);

/// Halves the interval, keeping the half with the sign change.
IsolatingInterval bisect(const IsolatingInterval& iv);
/// Bisects until the width is at most `width`.
IsolatingInterval refine_to_width(IsolatingInterval iv, const Rational& width);

/// Outcome of an exact disk root count.
struct DiskCount {
    enum class Status { Count, Boundary };
    Status status = Status::Boundary;
    std::size_t count = 0;
    /// For Boundary: true when a root of modulus exactly r was proven.
    bool root_on_circle = false;

    bool ok() const noexcept { return status == Status::Count; }
};

/// Number of complex roots of p, with multiplicity, of modulus < r.
///
/// Runs the Schur-Cohn recursion on p(r x). When the recursion degenerates
/// it either proves a root on |z| = r (Boundary, root_on_circle) or retries
/// at r(1 - 2^-k) and r(1 + 2^-k), accepting only matching counts, which
/// certify an empty annulus around the circle. Throws Error("radius") for
/// r <= 0.
DiskCount count_roots_in_disk(const IntPoly& p, const Rational& r,
                              unsigned max_refinement = kDefaultMaxRefinement);

/// Schur-Cohn count on the unit disk; nullopt on a degenerate recursion.
std::optional<std::size_t> schur_cohn_unit_count(const IntPoly& f);

/// True iff p has a root of modulus exactly 1.
bool has_unit_circle_root(const IntPoly& p);

/// Number of roots of p, with multiplicity, of modulus exactly r.
std::size_t roots_on_circle(const IntPoly& p, const Rational& r);

struct DiskRecord {
    Rational radius;
    DiskCount result;
};

/// Largest real root lambda of p, certified as the root of maximal modulus.
struct LeadingEigenvalue {
    enum class Status {
        Found,
        /// p has no real root greater than 1.
        NoRealRootAboveOne,
        /// Some root has modulus strictly greater than the largest real root.
        NotDominant,
        /// Disk counts stayed degenerate through every refinement round.
        Undecided,
    };

    Status status = Status::Undecided;
    std::optional<IsolatingInterval> bracket;
    std::string reason;
    /// Multiplicity of lambda as a root of p.
    unsigned multiplicity = 0;
    /// Multiplicity of -lambda as a root of p (a proven modulus tie).
    unsigned negative_tie = 0;
    /// Roots of modulus exactly lambda other than +-lambda, with
    /// multiplicity. Only proven when lambda is rational.
    unsigned circle_tie = 0;
    /// Every root other than +-lambda and the circle_tie roots has modulus
    /// below bracket->lo.
    bool dominance_certified = false;
    std::vector<DiskRecord> disk_counts;

    explicit operator bool() const noexcept { return status == Status::Found; }
};

LeadingEigenvalue leading_eigenvalue_bracket(const IntPoly& p,
                                             unsigned max_refinement = kDefaultMaxRefinement);

enum class CertMode { FullSpectrum, MinimalPoly };
enum class Verdict { BiPerron, NotBiPerron, Undecided };

std::string_view to_string(CertMode m);
std::string_view to_string(Verdict v);
/// Accepts "full-spectrum" and "minimal-poly".
CertMode parse_cert_mode(std::string_view name);

/// Irreducible factor of p vanishing at the root isolated by `bracket`,
/// found by trial factors of degree 1 to 4 within Mignotte coefficient
/// bounds. Falls back to the square-free part when the search cannot decide.
struct FactorSearch {
    IntPoly factor;
    bool irreducible = false;
    bool fallback = false;
    std::size_t candidates_tried = 0;
};

FactorSearch minimal_polynomial_factor(const IntPoly& p, const IsolatingInterval& bracket,
                                       unsigned max_degree = 4);

struct AnnulusCertificate {
    IntPoly poly;
    /// The polynomial whose roots were placed in the annulus: p itself in
    /// full-spectrum mode, the factor of lambda in minimal-poly mode.
    IntPoly certified_poly;
    CertMode mode = CertMode::FullSpectrum;
    bool fallback = false;
    std::optional<IsolatingInterval> leading_bracket;
    std::optional<Rational> inner_radius;
    std::optional<Rational> outer_radius;
    unsigned lambda_multiplicity = 0;
    /// How the inner bound closes: "strict" (open disk of radius 1/lo is
    /// empty) or "reciprocal" (roots are closed under z -> 1/z).
    std::string inner_closure;
    std::vector<DiskRecord> disk_counts;
    std::vector<std::string> notes;
    Verdict verdict = Verdict::Undecided;
};

AnnulusCertificate certify_biperron(const IntPoly& p, CertMode mode = CertMode::FullSpectrum,
                                    unsigned max_refinement = kDefaultMaxRefinement);

enum class Simplicity { Simple, Multiple };
std::string_view to_string(Simplicity s);

/// Multiple iff gcd(p, p') has a root inside the bracket. Throws
/// Error("not-isolating") unless the bracket isolates one root of p.
Simplicity classify_simplicity(const IntPoly& p, const IsolatingInterval& bracket);

} // namespace bps
