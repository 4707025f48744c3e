// Exact scalar types: arbitrary-precision rationals and Gaussian rationals.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stabdiv {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). GMP's mpq_class keeps this invariant through arithmetic;
// construction from raw numerator/denominator goes through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "p/q" or a decimal like "-1.5" (decimals arise on the CLI).
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(std::uint64_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Element of Q(i). |c|^2 = re^2 + im^2 is again rational, which keeps every
// norm computation in this project exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero coefficient");
        Rational n = b.norm_sq();
        GaussianRational c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& b) {
        re -= b.re;
        im -= b.im;
        return *this;
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// "3/2", "(1+2i)", "(2i)", ... — the coefficient syntax of the polynomial grammar.
std::string to_string(const GaussianRational& c);

}  // namespace stabdiv
