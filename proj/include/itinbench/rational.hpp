#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace itinbench {

/// Exact rational arithmetic on __int128, always kept reduced with den > 0.
/// Score math stays exact so level-gating comparisons never see rounding.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational from_int128(__int128 n, __int128 d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    /// Exact value of a finite double (every finite double is a rational).
    static Rational from_double(double x) {
        if (!std::isfinite(x)) throw std::domain_error("rational from non-finite double");
        if (x == 0.0) return Rational();
        int exp = 0;
        double m = std::frexp(x, &exp);       // x = m * 2^exp, |m| in [0.5, 1)
        auto mant = static_cast<long long>(std::ldexp(m, 53));  // integral
        int shift = 53 - exp;
        __int128 n = mant;
        __int128 d = 1;
        if (shift >= 0) {
            if (shift > 120) throw std::domain_error("rational from_double underflow");
            d <<= shift;
        } else {
            if (-shift > 60) throw std::domain_error("rational from_double overflow");
            n <<= -shift;
        }
        return from_int128(n, d);
    }

    Rational operator+(const Rational& o) const {
        return from_int128(mul(num_, o.den_) + mul(o.num_, den_), mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return from_int128(mul(num_, o.den_) - mul(o.num_, den_), mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        // cross-reduce before multiplying to keep magnitudes small
        __int128 g1 = gcd128(abs128(num_), o.den_);
        __int128 g2 = gcd128(abs128(o.num_), den_);
        return from_int128(mul(num_ / g1, o.num_ / g2), mul(den_ / g2, o.den_ / g1));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        __int128 g1 = gcd128(abs128(num_), abs128(o.num_));
        __int128 g2 = gcd128(o.den_, den_);
        Rational r;
        r.num_ = mul(num_ / g1, o.den_ / g2);
        r.den_ = mul(den_ / g2, o.num_ / g1);
        r.normalize();
        return r;
    }
    Rational operator-() const { return from_int128(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mul(num_, o.den_) < mul(o.num_, den_); }
    bool operator<=(const Rational& o) const { return mul(num_, o.den_) <= mul(o.num_, den_); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Rounded to 2 decimals, half away from zero; exact on the rational.
    double round2() const {
        __int128 scaled = num_ * 100;
        __int128 q = scaled / den_;
        __int128 rem = scaled % den_;
        if (rem < 0) rem = -rem;
        if (2 * rem >= den_) q += (num_ >= 0 ? 1 : -1);
        return static_cast<double>(q) / 100.0;
    }

    std::string str() const {
        auto part = [](__int128 v) {
            if (v == 0) return std::string("0");
            bool neg = v < 0;
            if (neg) v = -v;
            std::string s;
            while (v > 0) {
                s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
                v /= 10;
            }
            return neg ? "-" + s : s;
        };
        if (den_ == 1) return part(num_);
        return part(num_) + "/" + part(den_);
    }

    __int128 numerator() const { return num_; }
    __int128 denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }

private:
    __int128 num_;
    __int128 den_;

    static __int128 abs128(__int128 v) { return v < 0 ? -v : v; }

    static __int128 gcd128(__int128 a, __int128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static __int128 mul(__int128 a, __int128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        __int128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }
};

}  // namespace itinbench
