#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <utility>

#include "slicedepth/errors.hpp"

namespace slicedepth {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive
/// denominator. The sign lives on the numerator.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int value) : num_(std::move(value)), den_(1) {}
    Fraction(long long value) : num_(value), den_(1) {}

    Fraction(Int numerator, Int denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw Error("fraction: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Fraction reciprocal() const {
        if (num_ == 0) throw Error("fraction: reciprocal of zero");
        return Fraction(den_, num_);
    }

    friend Fraction operator-(const Fraction& x) { return Fraction(-x.num_, x.den_); }

    friend Fraction operator+(const Fraction& x, const Fraction& y) {
        return Fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Fraction operator-(const Fraction& x, const Fraction& y) {
        return Fraction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Fraction operator*(const Fraction& x, const Fraction& y) {
        return Fraction(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Fraction operator/(const Fraction& x, const Fraction& y) {
        if (y.num_ == 0) throw Error("fraction: division by zero");
        return Fraction(x.num_ * y.den_, x.den_ * y.num_);
    }

    friend bool operator==(const Fraction& x, const Fraction& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Fraction& x, const Fraction& y) { return !(x == y); }
    friend bool operator<(const Fraction& x, const Fraction& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const Fraction& x, const Fraction& y) { return y < x; }
    friend bool operator<=(const Fraction& x, const Fraction& y) { return !(y < x); }
    friend bool operator>=(const Fraction& x, const Fraction& y) { return !(x < y); }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Fraction& x) { return os << x.str(); }

private:
    Int num_;
    Int den_;
};

}  // namespace slicedepth
