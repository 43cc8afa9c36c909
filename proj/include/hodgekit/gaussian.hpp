#pragma once

#include <compare>
#include <string>

#include "hodgekit/rational.hpp"

namespace hodgekit {

/// Exact complex scalar a + b*i with rational a, b. This is the coefficient
/// field for all symbolic algebra in the library.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long long r) : re(rat(r)) {}

    static GaussianRational i() { return {rat(0), rat(1)}; }

    bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }
    bool is_real() const { return im.numerator() == 0; }

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
        Rational n = b.norm_sq();
        if (n.numerator() == 0) throw RangeError("GaussianRational: division by zero");
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(long long e) const {
        if (e < 0) return GaussianRational(1) / pow(-e);
        GaussianRational acc(1), b = *this;
        long long k = e;
        while (k > 0) {
            if (k & 1) acc *= b;
            b *= b;
            k >>= 1;
        }
        return acc;
    }

    std::string str() const {
        return to_fraction_string(re) + (im >= Rational(0) ? "+" : "") + to_fraction_string(im) + "i";
    }
};

inline GaussianRational gr(long long re, long long im = 0) { return {rat(re), rat(im)}; }

inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }
inline GaussianRational conj_coeff(const GaussianRational& g) { return g.conj(); }
inline GaussianRational scale(const GaussianRational& c, const GaussianRational& s) { return c * s; }

/// i^e for any integer e.
inline GaussianRational i_power(long long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return gr(1);
        case 1: return gr(0, 1);
        case 2: return gr(-1);
        default: return gr(0, -1);
    }
}

inline GaussianRational minus_one_power(long long e) { return (e % 2 == 0) ? gr(1) : gr(-1); }

} // namespace hodgekit
