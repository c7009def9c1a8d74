#pragma once

// Exact arithmetic over the Gaussian rationals Q(i), the computational
// stand-in for the complex ground field.  Every value is kept in canonical
// reduced form, so equality is structural and never depends on how a value
// was produced.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace omegader {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Thrown by parse_scalar on malformed input; `position` is the byte offset
/// of the first offending character.
class scalar_parse_error : public std::runtime_error {
public:
    scalar_parse_error(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class division_by_zero : public std::domain_error {
public:
    division_by_zero() : std::domain_error("division by zero scalar") {}
};

/// An element a + b*i of Q(i).  Components are canonical rationals
/// (reduced, positive denominator), which the backing type maintains.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(Rational r) : re(std::move(r)) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar of(long num, long den) { return Scalar(Rational(num, den)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    /// Squared modulus as a rational: re^2 + im^2.  Zero iff the scalar is zero.
    Rational norm2() const { return re * re + im * im; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (im == 0 && o.im == 0) {  // common real-only fast path
            re *= o.re;
            return *this;
        }
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
};

/// Multiplicative inverse; throws division_by_zero on 0.
inline Scalar inv(const Scalar& a) {
    if (a.is_zero()) throw division_by_zero();
    Rational d = a.norm2();
    return Scalar(a.re / d, -a.im / d);
}

inline Scalar operator/(const Scalar& a, const Scalar& b) { return a * inv(b); }

namespace detail {

inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

}  // namespace detail

/// Canonical rendering.  Grammar:
///   scalar := real | imag | real sign imag
///   real   := sign? nat ("/" nat)?
///   imag   := (real "*")? "i"
/// Reduced fractions, denominator omitted when 1, no whitespace.  The unit
/// imaginary renders as "i" (and as "+i"/"-i" continuations after a real
/// part); other imaginary parts carry an explicit "*i" factor.
inline std::string render_scalar(const Scalar& s) {
    if (s.im == 0) return detail::rational_str(s.re);
    std::string imag;
    if (s.re == 0) {
        if (s.im == 1) return "i";
        return detail::rational_str(s.im) + "*i";
    }
    std::string out = detail::rational_str(s.re);
    Rational mag = s.im < 0 ? Rational(-s.im) : s.im;
    out += s.im < 0 ? '-' : '+';
    if (mag != 1) out += detail::rational_str(mag) + "*";
    out += 'i';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << render_scalar(s);
}

namespace detail {

struct ScalarParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw scalar_parse_error("scalar syntax error at position " + std::to_string(pos) +
                                     ": " + what,
                                 pos);
    }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    BigInt nat() {
        if (eof() || peek() < '0' || peek() > '9') fail("expected digit");
        BigInt v = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }

    // real := sign? nat ("/" nat)?
    Rational real() {
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos;
        }
        BigInt num = nat();
        BigInt den = 1;
        if (peek() == '/') {
            ++pos;
            den = nat();
            if (den == 0) fail("zero denominator");
        }
        Rational r(num, den);
        return neg ? Rational(-r) : r;
    }

    Scalar scalar() {
        Scalar out;
        if (peek() == 'i') {  // bare imaginary unit
            ++pos;
            out.im = 1;
            return out;
        }
        Rational first = real();
        if (peek() == '*') {
            ++pos;
            if (peek() != 'i') fail("expected 'i' after '*'");
            ++pos;
            out.im = first;
            return out;
        }
        out.re = first;
        if (peek() == '+' || peek() == '-') {
            bool neg = peek() == '-';
            ++pos;
            if (peek() == 'i') {
                ++pos;
                out.im = neg ? -1 : 1;
                return out;
            }
            Rational mag = real();
            if (peek() != '*') fail("expected '*i' in imaginary part");
            ++pos;
            if (peek() != 'i') fail("expected 'i' after '*'");
            ++pos;
            out.im = neg ? Rational(-mag) : mag;
        }
        return out;
    }
};

}  // namespace detail

/// Parses the exact scalar grammar; parse_scalar(render_scalar(x)) == x.
inline Scalar parse_scalar(std::string_view text) {
    detail::ScalarParser p{text};
    Scalar s = p.scalar();
    if (!p.eof()) p.fail("trailing characters");
    return s;
}

}  // namespace omegader
