#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace acphase {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Gaussian rational re + i*im with arbitrary-precision parts.
///
/// Both parts are kept in lowest terms with a positive denominator; zero is 0/1.
/// Every matrix the verification touches (gamma, beta, U, xi, ...) has entries
/// in this field, so identities checked with it are exact.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(int re) : re_(re) {}  // NOLINT: integer literals read naturally in tables
    ExactScalar(long long re) : re_(re) {}
    ExactScalar(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactScalar i() { return {Rational(0), Rational(1)}; }
    static ExactScalar fraction(long long num, long long den);
    /// Exact conversion of a finite double (every double is a dyadic rational).
    static ExactScalar from_double(double re, double im = 0.0);
    static ExactScalar from_complex(std::complex<double> z) { return from_double(z.real(), z.imag()); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    ExactScalar conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    /// Each part rounded to the nearest double.
    std::complex<double> to_complex() const;
    std::string to_string() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    ExactScalar operator-() const { return {-re_, -im_}; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline ExactScalar conj(const ExactScalar& z) { return z.conj(); }

std::ostream& operator<<(std::ostream& os, const ExactScalar& z);

}  // namespace acphase
