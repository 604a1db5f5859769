#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "wsd/errors.hpp"

namespace wsd {

// "a" if integral, else "a/b" (sign on the numerator, denominator positive).
std::string rational_str(const mpq_class& q);

// Inverse of rational_str, also accepts non-canonical input like "2/4".
// Throws ParseError on bad grammar, ZeroDenominator on "x/0".
mpq_class parse_rational(const std::string& s);

// An exact element re + im*i of Q(i).  Always kept canonical: both parts
// are reduced fractions with positive denominator, so equality is
// structural.
class Gaussian {
public:
    Gaussian() : re_(0), im_(0) {}
    Gaussian(int n) : re_(n), im_(0) {}          // implicit on purpose: 0, 1, -1 ...
    explicit Gaussian(const mpq_class& re) : re_(re), im_(0) {}
    Gaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    // Build from four integers (re = rn/rd, im = in_/id).  Throws
    // ZeroDenominator before GMP ever sees a zero denominator.
    static Gaussian normalize(const mpz_class& rn, const mpz_class& rd,
                              const mpz_class& in_, const mpz_class& id);

    static Gaussian rational(long num, long den);   // num/den
    static Gaussian i(long num = 1, long den = 1);  // (num/den)*i

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    // |z|^2 = re^2 + im^2, a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian operator+(const Gaussian& o) const { return Gaussian(re_ + o.re_, im_ + o.im_); }
    Gaussian operator-(const Gaussian& o) const { return Gaussian(re_ - o.re_, im_ - o.im_); }
    Gaussian operator*(const Gaussian& o) const {
        return Gaussian(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Gaussian operator/(const Gaussian& o) const;   // throws DivisionByZero

    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o) { *this = *this * o; return *this; }

    bool operator==(const Gaussian& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }

    // Canonical text forms: "0", "a/b", "c/d*i", "a/b+c/d*i", "a/b-c/d*i"
    // ("/1" omitted throughout).
    std::string str() const;
    static Gaussian parse(const std::string& s);

private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

} // namespace wsd
