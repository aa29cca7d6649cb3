#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace kzb {

// Exact rational number, always canonical: lowest terms, denominator > 0.
// Thin value wrapper around GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p", "p/q" or "-p/q".
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    // Always "p/q" with q > 0, e.g. "0/1", "-3/7".
    std::string str() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n! as a Rational (n small).
Rational factorial(int n);

// Binomial coefficient C(n, k); zero for k < 0 or k > n.
Rational binom(int n, int k);

}  // namespace kzb
