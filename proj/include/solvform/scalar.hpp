#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <iosfwd>
#include <string>

#include "solvform/errors.hpp"

namespace solvform {

namespace mp = boost::multiprecision;

/// Arbitrary-precision rational, always stored in canonical form.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;

/// Parses "p" or "p/q" with optional leading sign; q must be positive after
/// canonicalization. Throws InputError on anything else (whitespace included).
Rational parse_rational(const std::string& text);

/// Canonical form: "p" for integers, "p/q" with q > 1 otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

/// If r == s^2 for some rational s >= 0, stores s and returns true.
bool rational_sqrt(const Rational& r, Rational& root);

/// Gaussian rational a + b*i. The field of coefficients for all exterior
/// algebra below; purely real values round-trip through the Rational part.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(int v) : re(v), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

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
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o);
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
inline Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }

inline bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

inline Scalar conj(const Scalar& a) { return Scalar(a.re, -a.im); }

/// |a|^2 = a * conj(a), a nonnegative rational.
inline Rational abs2(const Scalar& a) { return a.re * a.re + a.im * a.im; }

inline Scalar& Scalar::operator/=(const Scalar& o) {
    Rational n = abs2(o);
    if (n == 0) throw Error("division by zero scalar");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

/// "0", "3/2", "i", "-2i", "1+i", "1/2-3i", ...
std::string to_string(const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& a);

} // namespace solvform

namespace Eigen {

// Scalar is a field; Eigen is used purely as a dense container with +,-,*,/.
// IsComplex is left at 0 on purpose: Eigen's own conjugation machinery is
// never used, complex conjugation always goes through solvform::conj.
template <>
struct NumTraits<solvform::Scalar> {
    using Self = solvform::Scalar;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 20,
        MulCost = 40
    };
    static Self epsilon() { return Self(0); }
    static Self dummy_precision() { return Self(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen
