#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace nilorb {

using Rational = mpq_class;

/// Element of Q(i): a complex number with rational real and imaginary
/// parts. All arithmetic is exact; mpq_class keeps fractions reduced.
struct GScalar {
    Rational re;
    Rational im;

    GScalar() : re(0), im(0) {}
    GScalar(long r) : re(r), im(0) {}
    // GMP requires canonical operands, but mpq_class(p, q) does not reduce
    GScalar(const Rational& r) : re(r), im(0) { re.canonicalize(); }
    GScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    GScalar(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GScalar conj() const { return GScalar(re, -im); }

    GScalar operator-() const { return GScalar(-re, -im); }

    GScalar& operator+=(const GScalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GScalar& operator-=(const GScalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GScalar operator+(GScalar a, const GScalar& b) { return a += b; }
    friend GScalar operator-(GScalar a, const GScalar& b) { return a -= b; }

    friend GScalar operator*(const GScalar& a, const GScalar& b) {
        return GScalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GScalar& operator*=(const GScalar& o) { return *this = *this * o; }

    friend GScalar operator/(const GScalar& a, const GScalar& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw std::domain_error("GScalar: division by zero");
        return GScalar((a.re * b.re + a.im * b.im) / n,
                       (a.im * b.re - a.re * b.im) / n);
    }
    GScalar& operator/=(const GScalar& o) { return *this = *this / o; }

    friend bool operator==(const GScalar& a, const GScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GScalar& a, const GScalar& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {re.get_d(), im.get_d()};
    }

    /// |Re| + |Im|; the scalar norm used throughout the norm layer.
    /// Exact (rational) and bounded between |.| and sqrt(2)|.|.
    Rational l1() const { return abs(re) + abs(im); }

    std::string str() const {
        if (sgn(im) == 0) return re.get_str();
        std::string s = re.get_str();
        s += (sgn(im) < 0) ? "-" : "+";
        Rational a = abs(im);
        s += a.get_str();
        s += "i";
        return s;
    }
};

inline GScalar gi() { return GScalar(Rational(0), Rational(1)); }

}  // namespace nilorb
