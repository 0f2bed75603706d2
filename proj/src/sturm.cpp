#include "bps/intpoly.hpp"

#include <array>

namespace bps {

namespace {

// Negated pseudo-remainder with a positive multiplier, reduced to its
// primitive part by a positive content. Preserves the Sturm sign pattern.
IntPoly sturm_step(const IntPoly& a, const IntPoly& b) {
    IntPoly r = pseudo_remainder(a, b);
    const long delta = a.degree() - b.degree();
    // prem multiplies by lc(b)^(delta+1); undo its sign when negative.
    const bool flip = b.leading() < 0 && ((delta + 1) % 2 != 0);
    if (!flip) r = -r;
    if (r.is_zero()) return r;
    return r.divexact(r.content());
}

std::size_t variations_of_signs(const int* signs, std::size_t n) {
    std::size_t v = 0;
    int last = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (signs[i] == 0) continue;
        if (last != 0 && signs[i] != last) ++v;
        last = signs[i];
    }
    return v;
}

} // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    IntPoly p0 = square_free_part(p);
    if (p0.degree() <= 0) {
        chain.push_back(p0);
        return chain;
    }
    chain.push_back(p0);
    chain.push_back(p0.derivative());
    while (chain.back().degree() > 0) {
        IntPoly next = sturm_step(chain[chain.size() - 2], chain.back());
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

std::size_t sign_variations(std::span<const IntPoly> chain, const Rational& r) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.sign_at(r));
    return variations_of_signs(signs.data(), signs.size());
}

std::size_t sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw Error("zero-polynomial", "sturm_count of the zero polynomial");
    if (lo >= hi) throw Error("empty-interval", "sturm_count needs lo < hi");
    IntPoly s = square_free_part(p);
    if (s.degree() <= 0) return 0;

    // Divide out exact roots sitting on the endpoints; a root at hi belongs
    // to (lo, hi] and is added back.
    std::size_t extra = 0;
    if (s.sign_at(lo) == 0) s = divide_exact(s, IntPoly::linear_root(lo));
    if (s.sign_at(hi) == 0) {
        s = divide_exact(s, IntPoly::linear_root(hi));
        extra = 1;
    }
    if (s.degree() <= 0) return extra;

    const auto chain = sturm_chain(s);
    const std::size_t v_lo = sign_variations(chain, lo);
    const std::size_t v_hi = sign_variations(chain, hi);
    return v_lo - v_hi + extra;
}

std::size_t sturm_count_real(const IntPoly& p) {
    if (p.is_zero()) throw Error("zero-polynomial", "sturm_count of the zero polynomial");
    if (p.degree() <= 0) return 0;
    const Integer b = cauchy_bound(p);
    return sturm_count(p, Rational(-b), Rational(b));
}

namespace {

using i128 = __int128;

struct Small {
    std::array<i128, 5> c{};
    int deg = -1;
};

bool mul_ok(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool sub_ok(i128 a, i128 b, i128& out) { return !__builtin_sub_overflow(a, b, &out); }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void trim(Small& p) {
    while (p.deg >= 0 && p.c[static_cast<std::size_t>(p.deg)] == 0) --p.deg;
}

void make_primitive(Small& p) {
    i128 g = 0;
    for (int i = 0; i <= p.deg; ++i) g = gcd128(g, p.c[static_cast<std::size_t>(i)]);
    if (g > 1)
        for (int i = 0; i <= p.deg; ++i) p.c[static_cast<std::size_t>(i)] /= g;
}

// Same contract as sturm_step, in checked 128-bit arithmetic.
bool small_step(const Small& a, const Small& b, Small& out) {
    Small r = a;
    const i128 lb = b.c[static_cast<std::size_t>(b.deg)];
    const int delta = a.deg - b.deg;
    for (int k = a.deg; k >= b.deg; --k) {
        const i128 t = r.c[static_cast<std::size_t>(k)];
        for (int i = 0; i < k; ++i)
            if (!mul_ok(r.c[static_cast<std::size_t>(i)], lb, r.c[static_cast<std::size_t>(i)])) return false;
        r.c[static_cast<std::size_t>(k)] = 0;
        for (int j = 0; j < b.deg; ++j) {
            i128 prod;
            if (!mul_ok(t, b.c[static_cast<std::size_t>(j)], prod)) return false;
            auto& slot = r.c[static_cast<std::size_t>(k - b.deg + j)];
            if (!sub_ok(slot, prod, slot)) return false;
        }
    }
    r.deg = b.deg - 1;
    trim(r);
    const bool flip = lb < 0 && ((delta + 1) % 2 != 0);
    if (!flip)
        for (int i = 0; i <= r.deg; ++i) r.c[static_cast<std::size_t>(i)] = -r.c[static_cast<std::size_t>(i)];
    make_primitive(r);
    out = r;
    return true;
}

int sgn128(i128 v) { return (v > 0) - (v < 0); }

} // namespace

std::optional<std::size_t> sturm_count_real_small(std::span<const std::int64_t> ascending) {
    Small p;
    if (ascending.size() > p.c.size()) return std::nullopt;
    for (std::size_t i = 0; i < ascending.size(); ++i) p.c[i] = ascending[i];
    p.deg = static_cast<int>(ascending.size()) - 1;
    trim(p);
    if (p.deg <= 0) return p.deg < 0 ? std::nullopt : std::optional<std::size_t>(0);

    Small dp;
    dp.deg = p.deg - 1;
    for (int i = 1; i <= p.deg; ++i) {
        if (!mul_ok(p.c[static_cast<std::size_t>(i)], i, dp.c[static_cast<std::size_t>(i - 1)])) return std::nullopt;
    }

    // Sign variations at -inf and +inf only need leading coefficients and
    // degrees. Every real root lies strictly inside the Cauchy bound, so this
    // equals the count on (-B, B]. A repeated factor ends the chain early
    // with the gcd; dividing it out scales every member by the same
    // polynomial, which has no sign change at +-inf, so counts still hold.
    std::array<int, 6> neg{};
    std::array<int, 6> pos{};
    std::size_t len = 0;
    auto record = [&](const Small& q) {
        const int s = sgn128(q.c[static_cast<std::size_t>(q.deg)]);
        pos[len] = s;
        neg[len] = (q.deg % 2 == 0) ? s : -s;
        ++len;
    };
    Small a = p;
    Small b = dp;
    record(a);
    record(b);
    while (b.deg > 0) {
        Small next;
        if (!small_step(a, b, next)) return std::nullopt;
        if (next.deg < 0) break;
        record(next);
        a = b;
        b = next;
    }
    const std::size_t v_neg = variations_of_signs(neg.data(), len);
    const std::size_t v_pos = variations_of_signs(pos.data(), len);
    return v_neg - v_pos;
}

} // namespace bps
