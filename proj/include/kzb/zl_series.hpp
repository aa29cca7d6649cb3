#pragma once

#include "kzb/rational.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace kzb {

// Truncated formal series  sum c_{n,j} z^n L^j  with exact rational
// coefficients, finite principal part, and L a formal symbol for log z
// (dL = dz/z).  Every series carries the order through which its
// coefficients are valid; binary operations propagate the minimum so
// truncation is never silent.
class ZLSeries {
public:
    // Sentinel bound for series known exactly at every order.
    static constexpr int kExactOrder = 1 << 28;

    ZLSeries() : order_(kExactOrder) {}
    explicit ZLSeries(const Rational& c, int order = kExactOrder) : order_(order) {
        if (!c.is_zero()) c_[{0, 0}] = c;
    }

    static ZLSeries zero() { return ZLSeries(); }
    static ZLSeries one() { return ZLSeries(Rational(1)); }
    // c * z^n L^j
    static ZLSeries monomial(const Rational& c, int n, int j, int order = kExactOrder);

    int order_bound() const { return order_; }
    void set_order_bound(int m);

    bool is_zero() const { return c_.empty(); }
    // Smallest z-exponent with a nonzero coefficient; kExactOrder if zero.
    int valuation() const;
    // Largest L-exponent present; -1 if zero.
    int log_degree() const;

    // Coefficient of z^n L^j.  Requesting n past the valid order is a
    // contract violation and throws.
    const Rational& coeff(int n, int j) const;

    void add_term(int n, int j, const Rational& c);

    ZLSeries& operator+=(const ZLSeries& o);
    ZLSeries& operator-=(const ZLSeries& o);
    friend ZLSeries operator+(ZLSeries a, const ZLSeries& b) { return a += b; }
    friend ZLSeries operator-(ZLSeries a, const ZLSeries& b) { return a -= b; }
    friend ZLSeries operator-(const ZLSeries& a);
    friend ZLSeries operator*(const ZLSeries& a, const ZLSeries& b);
    ZLSeries& operator*=(const ZLSeries& o) { return *this = *this * o; }

    ZLSeries scaled(const Rational& c) const;
    ZLSeries shifted(int dn) const;  // multiply by z^dn
    ZLSeries pow(int k) const;       // k >= 0

    // Reciprocal; requires the lowest-order term to be L-free.
    ZLSeries reciprocal() const;

    // Termwise d/dz (L differentiates as 1/z).  Valid order drops by one.
    ZLSeries derivative() const;

    // True iff every coefficient with n <= through is zero.
    bool vanishes_through(int through) const;

    // Exact equality of all coefficients up to min(valid orders, through).
    static bool equal_through(const ZLSeries& a, const ZLSeries& b, int through);

    const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }

private:
    int order_;  // coefficients valid for all n <= order_
    std::map<std::pair<int, int>, Rational> c_;
};

// Termwise antiderivative with the regularized constant: the z^0 L^0
// coefficient of the result is 0, and  int z^-1 L^j dz = L^{j+1}/(j+1),
// int z^n L^j dz = z^{n+1} L^j/(n+1) - (j/(n+1)) int z^n L^{j-1} dz  otherwise.
// The valid order grows by one.
ZLSeries antiderivative(const ZLSeries& f);

// I(w1..wn) defined by dI/dz = w1 * I(w2..wn), I() = 1, with the
// regularized antiderivative above.  Forms are given as dz-coefficients.
ZLSeries iterated_integral(std::span<const ZLSeries> forms);
ZLSeries iterated_integral(std::initializer_list<ZLSeries> forms);

}  // namespace kzb
