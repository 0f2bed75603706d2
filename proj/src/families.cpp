#include "bps/families.hpp"

#include <random>

namespace bps {

void validate(const YFamilyParams& params) {
    if (params.g < 2) throw Error("bad-params", "g must be at least 2");
    if (params.a == 0 && params.b == 0) throw Error("bad-params", "a and b must not both be zero");
    if (!params.z) return;
    const IntMatrix& z = *params.z;
    if (params.g == 2 || z.dim() != params.g - 2)
        throw Error("bad-params", "Z must be (g-2) x (g-2)");
    if (!z.is_symmetric()) throw Error("bad-params", "Z must be symmetric");
    // Z symmetric: its eigenvalues t are real, and |t| <= lambda iff
    // t^2 <= lambda^2. The eigenvalues of Z^2 are exactly the t^2.
    const IntPoly squares = charpoly(z * z);
    const Integer lam2 = params.lambda_squared();
    const Integer bound = cauchy_bound(squares);
    if (bound > lam2 && sturm_count(squares, Rational(lam2), Rational(bound)) != 0)
        throw Error("bad-params", "an eigenvalue of Z lies outside [-lambda, lambda]");
}

IntMatrix build_Y(const YFamilyParams& params) {
    validate(params);
    IntMatrix y(params.g);
    y(0, 0) = params.a;
    y(0, 1) = params.b;
    y(1, 0) = params.b;
    y(1, 1) = -params.a;
    if (params.z) y.set_block(2, 2, *params.z);
    return y;
}

IntMatrix build_A_from_Y(const IntMatrix& y) {
    if (!y.is_symmetric()) throw Error("not-symmetric", "Y must be symmetric");
    const std::size_t g = y.dim();
    const IntMatrix id = IntMatrix::identity(g);
    IntMatrix a(2 * g);
    a.set_block(0, 0, id + y * y);
    a.set_block(0, g, y);
    a.set_block(g, 0, y);
    a.set_block(g, g, id);
    if (!is_symplectic(a, SymplecticForm(FormVariant::StandardBlock, g)))
        throw Error("internal", "block matrix failed the symplectic postcondition");
    return a;
}

IntPoly expected_charpoly(const YFamilyParams& params) {
    if (params.z) throw Error("closed-form-unavailable", "no closed form when Z is present");
    validate(params);
    const IntPoly quadratic(std::vector<Integer>{1, -(params.lambda_squared() + 2), 1});
    return IntPoly{-1, 1}.pow(2 * params.g - 4) * quadratic.pow(2);
}

IntMatrix build_block_diagonal(const BlockDiagonalParams& params) {
    if (params.blocks.empty()) throw Error("bad-block", "no blocks given");
    std::size_t total = 0;
    for (std::size_t i = 0; i < params.blocks.size(); ++i) {
        const IntMatrix& blk = params.blocks[i];
        if (blk.dim() % 2 != 0)
            throw Error("bad-block", "block " + std::to_string(i) + " has odd dimension");
        if (!is_symplectic(blk, SymplecticForm(FormVariant::PairwiseBlocks, blk.dim() / 2)))
            throw Error("bad-block", "block " + std::to_string(i) + " is not symplectic");
        total += blk.dim();
    }
    IntMatrix out(total);
    std::size_t offset = 0;
    for (const auto& blk : params.blocks) {
        out.set_block(offset, offset, blk);
        offset += blk.dim();
    }
    if (!is_symplectic(out, SymplecticForm(FormVariant::PairwiseBlocks, total / 2)))
        throw Error("internal", "direct sum failed the symplectic postcondition");
    return out;
}

IntMatrix random_symplectic(unsigned g, unsigned steps, std::uint64_t seed) {
    if (g == 0) throw Error("bad-params", "g must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kind_dist(0, 2);
    std::uniform_int_distribution<int> entry_dist(-1, 1);
    std::uniform_int_distribution<unsigned> index_dist(0, g - 1);
    const IntMatrix id = IntMatrix::identity(g);

    IntMatrix acc = IntMatrix::identity(2 * g);
    for (unsigned step = 0; step < steps; ++step) {
        IntMatrix gen = IntMatrix::identity(2 * g);
        const int kind = kind_dist(rng);
        if (kind < 2) {
            IntMatrix s(g);
            for (unsigned i = 0; i < g; ++i)
                for (unsigned j = i; j < g; ++j) {
                    s(i, j) = entry_dist(rng);
                    s(j, i) = s(i, j);
                }
            if (kind == 0)
                gen.set_block(0, g, s);
            else
                gen.set_block(g, 0, s);
        } else {
            // U = I + c E_ij, so U^-t = I - c E_ji. For g = 1 use U = -1.
            IntMatrix u = id;
            IntMatrix u_inv_t = id;
            if (g == 1) {
                u(0, 0) = -1;
                u_inv_t(0, 0) = -1;
            } else {
                const unsigned i = index_dist(rng);
                unsigned j = index_dist(rng);
                while (j == i) j = index_dist(rng);
                const int c = entry_dist(rng) >= 0 ? 1 : -1;
                u(i, j) = c;
                u_inv_t(j, i) = -c;
            }
            gen.set_block(0, 0, u);
            gen.set_block(g, g, u_inv_t);
        }
        acc = acc * gen;
    }
    return acc;
}

NonsurjectivityCertificate certificate_from_Y(const IntMatrix& y, const std::optional<IntPoly>& expected,
                                              unsigned max_refinement) {
    NonsurjectivityCertificate cert{y, IntMatrix(1), false, {}, expected, false, {}, false, {}, Simplicity::Simple};
    try {
        cert.a = build_A_from_Y(y);
    } catch (const Error& e) {
        throw StageError("build", e.what());
    }
    const std::size_t g = y.dim();
    cert.symplectic = is_symplectic(cert.a, SymplecticForm(FormVariant::StandardBlock, g));
    if (!cert.symplectic) throw StageError("is_symplectic", "A^t J A != J");

    cert.charpoly = charpoly(cert.a);
    if (expected) {
        cert.matches_closed_form = cert.charpoly == *expected;
        if (!cert.matches_closed_form)
            throw StageError("charpoly", "characteristic polynomial differs from the closed form");
    }

    cert.decomposition = square_free_decomposition(cert.charpoly);
    cert.all_nonsimple = cert.decomposition.simple_part().degree() == 0;
    if (!cert.all_nonsimple) throw StageError("all_roots_nonsimple", "a simple eigenvalue exists");

    cert.annulus = certify_biperron(cert.charpoly, CertMode::FullSpectrum, max_refinement);
    if (cert.annulus.verdict != Verdict::BiPerron) {
        std::string why(to_string(cert.annulus.verdict));
        for (const auto& note : cert.annulus.notes) why += "; " + note;
        throw StageError("certify_biperron", why);
    }
    cert.leading_simplicity = classify_simplicity(cert.charpoly, *cert.annulus.leading_bracket);
    if (cert.leading_simplicity != Simplicity::Multiple)
        throw StageError("classify_simplicity", "leading eigenvalue is simple");
    return cert;
}

NonsurjectivityCertificate nonsurjectivity_certificate(const YFamilyParams& params, unsigned max_refinement) {
    IntMatrix y = build_Y(params);
    std::optional<IntPoly> expected;
    if (!params.z) expected = expected_charpoly(params);
    return certificate_from_Y(y, expected, max_refinement);
}

} // namespace bps
