#include "acphase/exact_scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "acphase/error.hpp"

namespace acphase {

namespace {

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw PreconditionError("ExactScalar: non-finite double");
    if (v == 0.0) return Rational(0);
    int exponent = 0;
    double mantissa = std::frexp(v, &exponent);  // v = mantissa * 2^exponent, |mantissa| in [0.5,1)
    // 53 bits of mantissa fit exactly in an int64 after scaling.
    auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    BigInt num(scaled);
    BigInt den(1);
    if (exponent >= 0) {
        num <<= exponent;
    } else {
        den <<= -exponent;
    }
    return Rational(num, den);
}

std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

}  // namespace

ExactScalar ExactScalar::fraction(long long num, long long den) {
    if (den == 0) throw PreconditionError("ExactScalar: zero denominator");
    if (den < 0) return {Rational(-BigInt(num), -BigInt(den))};
    return {Rational(BigInt(num), BigInt(den))};
}

ExactScalar ExactScalar::from_double(double re, double im) {
    return {rational_from_double(re), rational_from_double(im)};
}

std::complex<double> ExactScalar::to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
}

std::string ExactScalar::to_string() const {
    if (im_.is_zero()) return rational_string(re_);
    std::string imag = rational_string(im_ < 0 ? Rational(-im_) : im_);
    if (imag == "1") imag.clear();
    if (re_.is_zero()) return (im_ < 0 ? "-" : "") + imag + "i";
    return rational_string(re_) + (im_ < 0 ? "-" : "+") + imag + "i";
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    // Most entries are 0 or +-1; skip the bignum work for the common cases.
    if (is_zero() || o.is_zero()) {
        re_ = 0;
        im_ = 0;
        return *this;
    }
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw PreconditionError("ExactScalar: division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& z) { return os << z.to_string(); }

}  // namespace acphase
