#pragma once

// Exact scalar arithmetic: arbitrary-precision rationals (always reduced,
// positive denominator) and complex rationals, plus "p/q" string helpers.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nonassoc {

using Rational = mpq_class;
using Integer = mpz_class;

// Thrown on malformed numeric input (zero denominators, unparsable strings).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw input_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Parses "p", "-p", or "p/q" into a reduced rational.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational literal: " + s);
    }
}

// Formats as "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Complex number with exact rational components.
struct CRational {
    Rational re;
    Rational im;

    CRational() : re(0), im(0) {}
    CRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    CRational(long r) : re(r), im(0) {}                 // NOLINT(google-explicit-constructor)
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static CRational i() { return CRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRational conj() const { return {re, Rational(-im)}; }
    // Squared modulus re² + im² (exact).
    Rational norm() const { return re * re + im * im; }

    friend CRational operator+(const CRational& a, const CRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CRational operator-(const CRational& a, const CRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRational operator/(const CRational& a, const CRational& b) {
        Rational n = b.norm();
        if (n == 0) throw input_error("division by zero complex rational");
        CRational c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    CRational& operator+=(const CRational& o) { return *this = *this + o; }
    CRational& operator-=(const CRational& o) { return *this = *this - o; }
    CRational& operator*=(const CRational& o) { return *this = *this * o; }

    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }
};

inline std::string crational_to_string(const CRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    return rational_to_string(z.re) + (z.im < 0 ? "-" : "+") +
           rational_to_string(rational_abs(z.im)) + "i";
}

inline std::ostream& operator<<(std::ostream& os, const CRational& z) {
    return os << crational_to_string(z);
}

// Exact n! as an integer.
inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Exact binomial coefficient C(n, k); zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace nonassoc
