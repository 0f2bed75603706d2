#pragma once

#include "bps/core.hpp"
#include "bps/exactmat.hpp"
#include "bps/intpoly.hpp"
#include "bps/rootcert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bps {

/// Seed data for Y = [[a, b], [b, -a]] (+) Z, with lambda^2 = a^2 + b^2.
struct YFamilyParams {
    unsigned g = 2;
    Integer a = 0;
    Integer b = 1;
    /// Optional (g-2) x (g-2) symmetric block; every eigenvalue must lie in
    /// [-lambda, lambda].
    std::optional<IntMatrix> z;

    Integer lambda_squared() const { return a * a + b * b; }
};

/// Throws Error("bad-params") naming the violated condition.
void validate(const YFamilyParams& params);

struct BlockDiagonalParams {
    std::vector<IntMatrix> blocks;
};

IntMatrix build_Y(const YFamilyParams& params);

/// [[I + Y^2, Y], [Y, I]]; throws Error("not-symmetric") for non-symmetric Y.
IntMatrix build_A_from_Y(const IntMatrix& y);

/// (x - 1)^(2g - 4) (x^2 - (lambda^2 + 2) x + 1)^2.
/// Throws Error("closed-form-unavailable") when Z is present.
IntPoly expected_charpoly(const YFamilyParams& params);

/// Direct sum of blocks, each symplectic for PairwiseBlocks of its size.
/// Throws Error("bad-block") naming the offending block index.
IntMatrix build_block_diagonal(const BlockDiagonalParams& params);

/// Product of `steps` random elementary generators of Sp(2g, Z) for
/// StandardBlock: [[I, S], [0, I]], [[I, 0], [S, I]] with S symmetric in
/// {-1, 0, 1}, and [[U, 0], [0, U^-t]] with U an elementary transvection.
IntMatrix random_symplectic(unsigned g, unsigned steps, std::uint64_t seed);

/// Stage-by-stage evidence that A has a bi-Perron leading eigenvalue with no
/// simple eigenvalue.
struct NonsurjectivityCertificate {
    IntMatrix y;
    IntMatrix a;
    bool symplectic = false;
    IntPoly charpoly;
    std::optional<IntPoly> expected;
    bool matches_closed_form = false;
    SquareFreeDecomposition decomposition;
    bool all_nonsimple = false;
    AnnulusCertificate annulus;
    Simplicity leading_simplicity = Simplicity::Simple;
};

/// Raised when a certificate stage fails; stage() names it.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& message)
        : Error("stage-failed", stage + ": " + message), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

/// Runs build -> is_symplectic -> charpoly (-> closed form) ->
/// all_roots_nonsimple -> certify_biperron on the family seeded by params.
NonsurjectivityCertificate nonsurjectivity_certificate(const YFamilyParams& params,
                                                       unsigned max_refinement = kDefaultMaxRefinement);

/// Same chain starting from an explicit symmetric Y; `expected` is compared
/// against the characteristic polynomial when given.
NonsurjectivityCertificate certificate_from_Y(const IntMatrix& y, const std::optional<IntPoly>& expected,
                                              unsigned max_refinement = kDefaultMaxRefinement);

} // namespace bps
