#pragma once

#include "bps/core.hpp"
#include "bps/intpoly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bps {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    /// n x n zero matrix; throws Error("dimension") for n == 0.
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::size_t n, std::vector<Integer> row_major);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t dim() const noexcept { return n_; }

    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    IntMatrix transpose() const;
    bool is_symmetric() const;

    /// Copies the k x k block starting at (row, col).
    IntMatrix block(std::size_t row, std::size_t col, std::size_t k) const;
    /// Overwrites the block starting at (row, col) with src.
    void set_block(std::size_t row, std::size_t col, const IntMatrix& src);

    IntMatrix& operator+=(const IntMatrix& rhs);
    IntMatrix& operator-=(const IntMatrix& rhs);
    IntMatrix& operator*=(const Integer& s);

    friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
    friend IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs) { return lhs -= rhs; }
    friend IntMatrix operator*(IntMatrix m, const Integer& s) { return m *= s; }
    friend IntMatrix operator*(const Integer& s, IntMatrix m) { return m *= s; }
    friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// "n" on the first line, then one whitespace-separated row per line.
    std::string to_text() const;

private:
    std::size_t n_;
    std::vector<Integer> a_;
};

enum class FormVariant { StandardBlock, PairwiseBlocks, Tridiagonal };

std::string_view to_string(FormVariant v);
/// Accepts "standard", "pairwise", "tridiagonal".
FormVariant parse_form_variant(std::string_view name);

/// A nondegenerate antisymmetric form on Z^(2g) in one of three explicit
/// layouts:
///   StandardBlock   [[0, I_g], [-I_g, 0]]
///   PairwiseBlocks  diag([[0,1],[-1,0]], ..., [[0,1],[-1,0]])
///   Tridiagonal     J_ij = [i == j-1] - [i-1 == j]
class SymplecticForm {
public:
    SymplecticForm(FormVariant variant, std::size_t g);

    FormVariant variant() const noexcept { return variant_; }
    std::size_t half_dim() const noexcept { return g_; }
    std::size_t dim() const noexcept { return 2 * g_; }
    const IntMatrix& matrix() const noexcept { return j_; }

private:
    FormVariant variant_;
    std::size_t g_;
    IntMatrix j_;
};

/// A^t J A == J, exactly. Throws Error("odd-dimension") for odd-sized A and
/// Error("dimension") when A and J differ in size.
bool is_symplectic(const IntMatrix& a, const SymplecticForm& form);

/// Fraction-free (Bareiss) determinant.
Integer det(const IntMatrix& a);

/// det(xI - A) by the division-free Berkowitz recurrence.
IntPoly charpoly(const IntMatrix& a);

/// Parses the text format: a line holding n, then n rows of n integers.
/// Errors report the offending line and column.
IntMatrix parse_matrix_text(const std::string& text);

} // namespace bps
