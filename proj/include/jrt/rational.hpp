#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace jrt {

// Exact rational with normalized sign and gcd-reduced representation.
// Used for Laurent-polynomial derivatives (values in Q·log q) and for
// cyclotomic coefficients. Magnitudes stay tiny in this code base, but
// intermediates are widened to __int128 before reduction.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    // "-3/2"; integers render without the denominator.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    long long num_, den_;

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a == 0) a = 1;
        n /= a; d /= a;
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
    void normalize() { *this = from128(num_, den_); }
};

// An exact element r·log q of the value group Q·log q in which derived
// orbital integrals live. Addition and scaling are exact on r.
struct LogMultiple {
    Rational r;  // the value is r·log q
    LogMultiple() = default;
    explicit LogMultiple(Rational v) : r(v) {}
    friend LogMultiple operator+(const LogMultiple& a, const LogMultiple& b) {
        return LogMultiple(a.r + b.r);
    }
    friend LogMultiple operator*(const Rational& c, const LogMultiple& a) {
        return LogMultiple(c * a.r);
    }
    friend bool operator==(const LogMultiple& a, const LogMultiple& b) { return a.r == b.r; }
    friend bool operator!=(const LogMultiple& a, const LogMultiple& b) { return !(a == b); }
    std::string str() const { return r.str(); }  // in units of log q
};

}  // namespace jrt
