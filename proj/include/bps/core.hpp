#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bps {

using Integer = mpz_class;
using Rational = mpq_class;

// Every failure carries a short machine-readable code ("dimension",
// "odd-dimension", "bad-params", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    explicit Error(std::string code)
        : std::runtime_error(code), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

// Accepts "123", "-7", "3/4", "-12/8" (reduced on parse).
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

} // namespace bps
