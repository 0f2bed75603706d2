#include "bps/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace bps {

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::linear_root(const Integer& r) { return IntPoly(std::vector<Integer>{-r, 1}); }

IntPoly IntPoly::linear_root(const Rational& r) {
    return IntPoly(std::vector<Integer>{-r.get_num(), r.get_den()});
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (is_zero()) throw Error("zero-polynomial", "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::reversed() const {
    std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::negated_argument() const {
    IntPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(out));
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer c = content();
    if (coeffs_.back() < 0) c = -c;
    return divexact(c);
}

IntPoly IntPoly::divexact(const Integer& s) const {
    if (s == 0) throw Error("division-by-zero", "polynomial divided by zero");
    IntPoly r = *this;
    for (auto& c : r.coeffs_) {
        if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
            throw Error("inexact-division", "coefficient not divisible by scalar");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    }
    return r;
}

int IntPoly::sign_at(const Rational& r) const {
    // den^deg * p(num/den) = sum a_i num^i den^(deg-i), evaluated by Horner.
    if (is_zero()) return 0;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    Integer acc = coeffs_.back();
    Integer den_pow = 1;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc *= num;
        acc += coeffs_[i] * den_pow;
    }
    return sgn(acc);
}

Integer IntPoly::eval(const Integer& v) const {
    Integer acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= v;
        acc += coeffs_[i];
    }
    return acc;
}

Rational IntPoly::eval(const Rational& r) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= r;
        acc += coeffs_[i];
    }
    return acc;
}

double IntPoly::eval_approx(double v) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i].get_d();
    return acc;
}

std::string IntPoly::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ' ';
        out += coeffs_[i].get_str();
    }
    return out;
}

std::string IntPoly::to_pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

DivisionResult pseudo_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error("division-by-zero", "pseudo-division by the zero polynomial");
    if (a.degree() < b.degree()) return {IntPoly{}, a};
    const long db = b.degree();
    const Integer& lb = b.leading();
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
    const auto& bc = b.coeffs();
    // Classic pseudo-division: each step multiplies the running remainder
    // by lc(b), so after deg a - deg b + 1 steps the identity holds with
    // lc(b)^(deg a - deg b + 1).
    for (long k = a.degree(); k >= db; --k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        Integer t = r[ks];
        for (auto& qc : q) qc *= lb;
        q[ks - db] += t;
        for (std::size_t i = 0; i < ks; ++i) r[i] *= lb;
        r[ks] = 0;
        if (t != 0) {
            for (long j = 0; j < db; ++j)
                mpz_submul(r[ks - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) { return pseudo_divide(a, b).remainder; }

std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error("division-by-zero", "division by the zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    const long db = b.degree();
    const Integer& lb = b.leading();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (long k = a.degree(); k >= db; --k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        if (r[ks] == 0) continue;
        if (!mpz_divisible_p(r[ks].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer t;
        mpz_divexact(t.get_mpz_t(), r[ks].get_mpz_t(), lb.get_mpz_t());
        q[ks - db] = t;
        for (long j = 0; j <= db; ++j)
            mpz_submul(r[ks - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    for (long j = 0; j < db; ++j)
        if (r[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw Error("inexact-division", "polynomial division is not exact");
    return *std::move(q);
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw Error("zero-gcd", "gcd of two zero polynomials");
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();

    IntPoly a = p.primitive_part();
    IntPoly b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);

    // Subresultant PRS: B_{i+1} = prem(A, B) / (g * h^delta).
    Integer g = 1;
    Integer h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) return b.primitive_part();
        if (r.degree() == 0) return IntPoly::constant(1);
        Integer h_pow;
        mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        a = std::move(b);
        b = r.divexact(g * h_pow);
        g = a.leading();
        // h <- g^delta / h^(delta - 1)
        if (delta == 0) {
            continue;
        }
        Integer g_pow;
        mpz_pow_ui(g_pow.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
        Integer h_den;
        mpz_pow_ui(h_den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), g_pow.get_mpz_t(), h_den.get_mpz_t());
    }
}

IntPoly SquareFreeDecomposition::expand() const {
    IntPoly out = IntPoly::constant(content);
    for (const auto& part : parts) out = out * part.factor.pow(part.multiplicity);
    return out;
}

IntPoly SquareFreeDecomposition::simple_part() const {
    IntPoly out = IntPoly::constant(1);
    for (const auto& part : parts)
        if (part.multiplicity == 1) out = out * part.factor;
    return out;
}

SquareFreeDecomposition square_free_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw Error("zero-polynomial", "square-free decomposition of the zero polynomial");
    SquareFreeDecomposition out;
    out.content = p.content();
    if (p.leading() < 0) out.content = -out.content;
    if (p.degree() == 0) return out;

    // Yun's algorithm; every quotient below is exact in Z[x] by Gauss's lemma.
    const IntPoly f = p.primitive_part();
    const IntPoly df = f.derivative();
    const IntPoly a0 = gcd(f, df);
    IntPoly b = divide_exact(f, a0);
    IntPoly c = divide_exact(df, a0);
    IntPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPoly a = d.is_zero() ? b : gcd(b, d);
        b = divide_exact(b, a);
        if (a.degree() > 0) out.parts.push_back({a, i});
        if (b.degree() <= 0) break;
        c = divide_exact(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) throw Error("zero-polynomial", "square-free part of the zero polynomial");
    if (p.degree() <= 0) return IntPoly::constant(1);
    const IntPoly f = p.primitive_part();
    return divide_exact(f, gcd(f, f.derivative()));
}

bool all_roots_nonsimple(const IntPoly& p) {
    return square_free_decomposition(p).simple_part().degree() == 0;
}

bool is_palindromic(const IntPoly& p) {
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

bool is_reciprocal(const IntPoly& p) {
    if (p.is_zero()) return true;
    // A zero constant term makes x^deg p(1/x) drop degree, so it cannot match.
    if (p.trailing() == 0) return false;
    const IntPoly r = p.reversed();
    return r == p || r == -p;
}

Integer cauchy_bound(const IntPoly& p) {
    if (p.degree() <= 0) return 1;
    const auto& c = p.coeffs();
    const Integer lead = abs(p.leading());
    Rational best = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Rational ratio = make_rational(abs(c[i]), lead);
        if (ratio > best) best = ratio;
    }
    Integer ceil_best;
    mpz_cdiv_q(ceil_best.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
    return ceil_best + 1;
}

IntPoly compose_identity_rhs(const IntPoly& q, unsigned g) {
    if (q.degree() != static_cast<long>(g))
        throw Error("degree", "compose_identity_rhs needs deg q == g");
    const IntPoly sq = IntPoly{1, -2, 1};  // (x-1)^2
    IntPoly out;
    IntPoly sq_pow = IntPoly::constant(1);
    for (unsigned k = 0; k <= g; ++k) {
        const Integer& qk = q.coeffs()[k];
        if (qk != 0) out += (sq_pow * qk).shifted(g - k);
        sq_pow = sq_pow * sq;
    }
    return out;
}

IntPoly parse_poly_text(const std::string& text) {
    std::istringstream is(text);
    std::vector<Integer> coeffs;
    std::string tok;
    while (is >> tok) {
        try {
            coeffs.push_back(parse_integer(tok));
        } catch (const Error&) {
            throw Error("parse", "bad polynomial coefficient '" + tok + "' at position " +
                                     std::to_string(coeffs.size() + 1));
        }
    }
    if (coeffs.empty()) throw Error("parse", "polynomial text holds no coefficients");
    return IntPoly(std::move(coeffs));
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw Error("parse", "empty integer literal");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error("parse", "bad integer literal '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error("parse", "zero denominator in '" + text + "'");
    return make_rational(num, den);
}

} // namespace bps
