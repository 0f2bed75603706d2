#include "doctest.h"
#include "oracles.hpp"

#include "bps/exactmat.hpp"

using namespace bps;

namespace {

template <typename Fn>
std::string error_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("SL2 matrices are symplectic under the 2x2 form") {
    CHECK(is_symplectic(IntMatrix{{1, 1}, {0, 1}}, SymplecticForm(FormVariant::StandardBlock, 1)));
    CHECK(is_symplectic(IntMatrix{{2, 1}, {1, 1}}, SymplecticForm(FormVariant::StandardBlock, 1)));
    CHECK_FALSE(is_symplectic(IntMatrix{{2, 0}, {0, 1}}, SymplecticForm(FormVariant::StandardBlock, 1)));
}

TEST_CASE("materialized forms are antisymmetric with determinant 1") {
    for (auto v : {FormVariant::StandardBlock, FormVariant::PairwiseBlocks, FormVariant::Tridiagonal})
        for (std::size_t g = 1; g <= 4; ++g) {
            const IntMatrix j = SymplecticForm(v, g).matrix();
            CHECK(j.transpose() == j * Integer(-1));
            CHECK(det(j) == 1);
            CHECK(oracle::cofactor_det_int(j) == 1);
        }
    CHECK(det(SymplecticForm(FormVariant::StandardBlock, 2).matrix()) == 1);
}

TEST_CASE("form layouts") {
    const IntMatrix std2 = SymplecticForm(FormVariant::StandardBlock, 2).matrix();
    CHECK(std2 == IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    const IntMatrix pair2 = SymplecticForm(FormVariant::PairwiseBlocks, 2).matrix();
    CHECK(pair2 == IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    CHECK(error_code([] { SymplecticForm(FormVariant::StandardBlock, 0); }) == "dimension");
}

TEST_CASE("form variant names round-trip") {
    for (auto v : {FormVariant::StandardBlock, FormVariant::PairwiseBlocks, FormVariant::Tridiagonal})
        CHECK(parse_form_variant(to_string(v)) == v);
    CHECK_THROWS_AS(parse_form_variant("diagonal"), Error);
}

TEST_CASE("is_symplectic rejects mismatched and odd dimensions") {
    CHECK(error_code([] {
              is_symplectic(IntMatrix::identity(3), SymplecticForm(FormVariant::StandardBlock, 1));
          }) == "odd-dimension");
    CHECK(error_code([] {
              is_symplectic(IntMatrix::identity(4), SymplecticForm(FormVariant::StandardBlock, 1));
          }) == "dimension");
}

TEST_CASE("det agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 6;
        const IntMatrix m = oracle::random_matrix(rng, n, -9, 9);
        CHECK(det(m) == oracle::cofactor_det_int(m));
    }
    // a zero pivot in the first column forces a row swap
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det(IntMatrix{{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("charpoly agrees with cofactor expansion") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 6;
        const IntMatrix m = oracle::random_matrix(rng, n, -20, 20);
        const IntPoly p = charpoly(m);
        CHECK(p == oracle::cofactor_charpoly(m));
        CHECK(p.is_monic());
        CHECK(p.degree() == static_cast<long>(n));
    }
}

TEST_CASE("charpoly of a known 4x4") {
    // Y = [[0,1],[1,0]] gives A with charpoly (x^2 - 3x + 1)^2.
    const IntMatrix a{{2, 0, 0, 1}, {0, 2, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}};
    CHECK(charpoly(a) == IntPoly{1, -3, 1}.pow(2));
    CHECK(charpoly(IntMatrix::identity(3)) == IntPoly{-1, 1}.pow(3));
}

TEST_CASE("charpoly handles large entries exactly") {
    IntMatrix m(3);
    const Integer big("123456789012345678901234567890");
    m(0, 0) = big;
    m(1, 1) = -big;
    m(2, 2) = 1;
    m(0, 1) = 1;
    CHECK(charpoly(m) == oracle::cofactor_charpoly(m));
}

TEST_CASE("matrix text parsing") {
    CHECK(parse_matrix_text("2\n1 2\n3 4\n") == IntMatrix{{1, 2}, {3, 4}});
    CHECK(parse_matrix_text("\n 2\n\t1   -2\n\n3 4") == IntMatrix{{1, -2}, {3, 4}});
    CHECK(parse_matrix_text("1\n-123456789012345678901234567890\n")(0, 0) ==
          Integer("-123456789012345678901234567890"));
    CHECK(error_code([] { parse_matrix_text("2\n1 2\n3\n"); }) == "parse");
    CHECK(error_code([] { parse_matrix_text("2\n1 x\n3 4\n"); }) == "parse");
    CHECK(error_code([] { parse_matrix_text("2\n1 2\n"); }) == "parse");
    CHECK(error_code([] { parse_matrix_text("2\n1 2\n3 4\n5 6\n"); }) == "parse");
    CHECK(error_code([] { parse_matrix_text("0\n"); }) == "parse");
    CHECK(error_code([] { parse_matrix_text(""); }) == "parse");
    try {
        parse_matrix_text("2\n1 2\n3 y\n");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3, column 3") != std::string::npos);
    }
}

TEST_CASE("blocks") {
    IntMatrix m(4);
    m.set_block(2, 0, IntMatrix{{1, 2}, {3, 4}});
    CHECK(m.block(2, 0, 2) == IntMatrix{{1, 2}, {3, 4}});
    CHECK(m(3, 1) == 4);
    CHECK(IntMatrix{{1, 2}, {2, 5}}.is_symmetric());
    CHECK_FALSE(IntMatrix{{1, 2}, {3, 5}}.is_symmetric());
}
