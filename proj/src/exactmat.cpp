#include "bps/exactmat.hpp"

#include <sstream>
#include <utility>

namespace bps {

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw Error("dimension", "matrix dimension must be positive");
}

IntMatrix::IntMatrix(std::size_t n, std::vector<Integer> row_major) : n_(n), a_(std::move(row_major)) {
    if (n == 0) throw Error("dimension", "matrix dimension must be positive");
    if (a_.size() != n * n) throw Error("dimension", "entry count does not match n*n");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
    if (n_ == 0) throw Error("dimension", "matrix dimension must be positive");
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error("dimension", "matrix must be square");
        for (long v : row) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Integer> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw Error("dimension", "matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return IntMatrix(n, std::move(flat));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::block(std::size_t row, std::size_t col, std::size_t k) const {
    if (row + k > n_ || col + k > n_) throw Error("dimension", "block exceeds matrix");
    IntMatrix b(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(row + i, col + j);
    return b;
}

void IntMatrix::set_block(std::size_t row, std::size_t col, const IntMatrix& src) {
    const std::size_t k = src.dim();
    if (row + k > n_ || col + k > n_) throw Error("dimension", "block exceeds matrix");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) (*this)(row + i, col + j) = src(i, j);
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
    if (rhs.n_ != n_) throw Error("dimension", "matrix sizes differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
    if (rhs.n_ != n_) throw Error("dimension", "matrix sizes differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& s) {
    for (auto& v : a_) v *= s;
    return *this;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
    if (lhs.n_ != rhs.n_) throw Error("dimension", "matrix sizes differ");
    const std::size_t n = lhs.n_;
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Integer& l = lhs(i, k);
            if (l == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                mpz_addmul(out(i, j).get_mpz_t(), l.get_mpz_t(), rhs(k, j).get_mpz_t());
        }
    return out;
}

std::string IntMatrix::to_text() const {
    std::ostringstream os;
    os << n_ << '\n';
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::string_view to_string(FormVariant v) {
    switch (v) {
    case FormVariant::StandardBlock: return "standard";
    case FormVariant::PairwiseBlocks: return "pairwise";
    case FormVariant::Tridiagonal: return "tridiagonal";
    }
    return "unknown";
}

FormVariant parse_form_variant(std::string_view name) {
    if (name == "standard") return FormVariant::StandardBlock;
    if (name == "pairwise") return FormVariant::PairwiseBlocks;
    if (name == "tridiagonal") return FormVariant::Tridiagonal;
    throw Error("bad-form", "unknown symplectic form '" + std::string(name) + "'");
}

namespace {

IntMatrix materialize(FormVariant variant, std::size_t g) {
    if (g == 0) throw Error("dimension", "symplectic form needs g >= 1");
    const std::size_t n = 2 * g;
    IntMatrix j(n);
    switch (variant) {
    case FormVariant::StandardBlock:
        for (std::size_t i = 0; i < g; ++i) {
            j(i, g + i) = 1;
            j(g + i, i) = -1;
        }
        break;
    case FormVariant::PairwiseBlocks:
        for (std::size_t i = 0; i < g; ++i) {
            j(2 * i, 2 * i + 1) = 1;
            j(2 * i + 1, 2 * i) = -1;
        }
        break;
    case FormVariant::Tridiagonal:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            j(i, i + 1) = 1;
            j(i + 1, i) = -1;
        }
        break;
    }
    return j;
}

} // namespace

SymplecticForm::SymplecticForm(FormVariant variant, std::size_t g)
    : variant_(variant), g_(g), j_(materialize(variant, g)) {
    if (j_.transpose() != j_ * Integer(-1)) throw Error("form", "materialized form is not antisymmetric");
    if (det(j_) != 1) throw Error("form", "materialized form does not have determinant 1");
}

bool is_symplectic(const IntMatrix& a, const SymplecticForm& form) {
    if (a.dim() % 2 != 0) throw Error("odd-dimension", "symplectic matrices have even dimension");
    if (a.dim() != form.dim()) throw Error("dimension", "matrix and form dimensions differ");
    return a.transpose() * form.matrix() * a == form.matrix();
}

Integer det(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Integer> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };

    // Bareiss: after step k every entry is a k x k minor, and the division by
    // the previous pivot is exact.
    Integer prev = 1;
    int sign_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = at(i, j) * at(k, k);
                mpz_submul(v.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    Integer d = at(n - 1, n - 1);
    return sign_flip < 0 ? Integer(-d) : d;
}

IntPoly charpoly(const IntMatrix& a) {
    const std::size_t n = a.dim();
    // Berkowitz: with A_{r+1} = [[S, C], [R, s]] the coefficient vector of
    // det(xI - A_{r+1}) (descending powers) is T * coeffs(det(xI - S)), where
    // T is the lower-triangular Toeplitz matrix with first column
    // (1, -s, -R C, -R S C, ..., -R S^(r-1) C).
    std::vector<Integer> desc{1, -a(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Integer> col(r + 2);
        col[0] = 1;
        col[1] = -a(r, r);
        std::vector<Integer> v(r);  // S^k C
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            Integer dot = 0;
            for (std::size_t i = 0; i < r; ++i) mpz_addmul(dot.get_mpz_t(), a(r, i).get_mpz_t(), v[i].get_mpz_t());
            col[k + 2] = -dot;
            if (k + 1 == r) break;
            std::vector<Integer> next(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    mpz_addmul(next[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
            v = std::move(next);
        }
        std::vector<Integer> out(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < desc.size(); ++j)
                mpz_addmul(out[i].get_mpz_t(), col[i - j].get_mpz_t(), desc[j].get_mpz_t());
        desc = std::move(out);
    }
    return IntPoly(std::vector<Integer>(desc.rbegin(), desc.rend()));
}

IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto fail = [&](std::size_t col, const std::string& what) -> Error {
        return Error("parse", "line " + std::to_string(line_no) + ", column " + std::to_string(col) + ": " + what);
    };
    auto tokens = [&]() {
        std::vector<std::pair<std::size_t, std::string>> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            out.emplace_back(start + 1, line.substr(start, i - start));
        }
        return out;
    };

    if (!next_content_line()) throw Error("parse", "empty matrix text");
    auto head = tokens();
    if (head.size() != 1) throw fail(head.size() > 1 ? head[1].first : 1, "expected a single dimension");
    Integer n_big;
    try {
        n_big = parse_integer(head[0].second);
    } catch (const Error&) {
        throw fail(head[0].first, "bad dimension '" + head[0].second + "'");
    }
    if (n_big <= 0 || !n_big.fits_ulong_p()) throw fail(head[0].first, "dimension must be a positive integer");
    const std::size_t n = n_big.get_ui();

    std::vector<Integer> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_content_line())
            throw Error("parse", "line " + std::to_string(line_no + 1) + ", column 1: expected row " + std::to_string(r + 1));
        auto toks = tokens();
        if (toks.size() != n)
            throw fail(toks.size() > n ? toks[n].first : line.size() + 1,
                       "expected " + std::to_string(n) + " entries, found " + std::to_string(toks.size()));
        for (const auto& [col, tok] : toks) {
            try {
                entries.push_back(parse_integer(tok));
            } catch (const Error&) {
                throw fail(col, "bad integer '" + tok + "'");
            }
        }
    }
    if (next_content_line()) throw fail(1, "trailing content after matrix");
    return IntMatrix(n, std::move(entries));
}

} // namespace bps
