#pragma once

#include "kzb/ring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace kzb {

// Truncated power series in two commuting variables U, V with total-degree
// bound and coefficients in a ring R.
template <class R>
class BivarSeries {
public:
    explicit BivarSeries(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("BivarSeries: negative degree bound");
    }

    int degree_bound() const { return degree_; }
    bool is_zero() const { return c_.empty(); }

    R coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? R{} : it->second;
    }

    void add_term(int i, int j, const R& v) {
        if (i < 0 || j < 0) throw std::invalid_argument("BivarSeries: negative exponent");
        if (v.is_zero() || i + j > degree_) return;
        auto [it, fresh] = c_.try_emplace({i, j}, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    BivarSeries& operator+=(const BivarSeries& o) {
        degree_ = std::min(degree_, o.degree_);
        truncate();
        for (const auto& [ij, v] : o.c_) add_term(ij.first, ij.second, v);
        return *this;
    }
    BivarSeries& operator-=(const BivarSeries& o) {
        degree_ = std::min(degree_, o.degree_);
        truncate();
        for (const auto& [ij, v] : o.c_) add_term(ij.first, ij.second, -v);
        return *this;
    }
    friend BivarSeries operator+(BivarSeries a, const BivarSeries& b) { return a += b; }
    friend BivarSeries operator-(BivarSeries a, const BivarSeries& b) { return a -= b; }

    friend BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
        BivarSeries r(std::min(a.degree_, b.degree_));
        for (const auto& [ij1, v1] : a.c_)
            for (const auto& [ij2, v2] : b.c_) {
                int i = ij1.first + ij2.first, j = ij1.second + ij2.second;
                if (i + j > r.degree_) continue;
                r.add_term(i, j, v1 * v2);
            }
        return r;
    }

    BivarSeries scaled(const Rational& c) const {
        BivarSeries r(degree_);
        if (c.is_zero()) return r;
        for (const auto& [ij, v] : c_) r.c_[ij] = ring_scale(v, c);
        return r;
    }

    // Reciprocal; requires an invertible constant term (R = Rational).
    BivarSeries reciprocal() const
        requires std::same_as<R, Rational>
    {
        Rational c0 = coeff(0, 0);
        if (c0.is_zero())
            throw std::domain_error("BivarSeries::reciprocal: zero constant term");
        BivarSeries u = scaled(Rational(1) / c0);
        u.add_term(0, 0, Rational(-1));
        BivarSeries inv(degree_);
        inv.add_term(0, 0, Rational(1));
        BivarSeries upow(degree_);
        upow.add_term(0, 0, Rational(1));
        for (int k = 1; k <= degree_ && !u.is_zero(); ++k) {
            upow = upow * u;
            if (upow.is_zero()) break;
            inv += (k % 2 == 1) ? upow.scaled(Rational(-1)) : upow;
        }
        return inv.scaled(Rational(1) / c0);
    }

    // Exact division by U.  Terms without a U factor are reported through
    // the `offenders` string; the division throws if any exist.
    BivarSeries divided_by_U() const {
        BivarSeries r(degree_ == 0 ? 0 : degree_ - 1);
        std::string offenders;
        for (const auto& [ij, v] : c_) {
            if (ij.first == 0) {
                offenders += " U^0 V^" + std::to_string(ij.second);
                continue;
            }
            r.add_term(ij.first - 1, ij.second, v);
        }
        if (!offenders.empty())
            throw std::domain_error("BivarSeries: 1/U prefactor does not cancel; monomials:" +
                                    offenders);
        return r;
    }

    BivarSeries swapped_vars() const {
        BivarSeries r(degree_);
        for (const auto& [ij, v] : c_) r.c_[{ij.second, ij.first}] = v;
        return r;
    }

    // Exact division by (U + V); throws, naming the remainder monomials,
    // if the numerator is not a multiple.  The valid total degree drops
    // by one.
    BivarSeries divided_by_UplusV() const
        requires std::same_as<R, Rational>
    {
        BivarSeries p = *this;
        BivarSeries q(degree_ == 0 ? 0 : degree_ - 1);
        bool progress = true;
        while (progress) {
            progress = false;
            // peel the highest-U term with i >= 1
            auto best = p.c_.end();
            for (auto it = p.c_.begin(); it != p.c_.end(); ++it)
                if (it->first.first >= 1 &&
                    (best == p.c_.end() || it->first.first > best->first.first))
                    best = it;
            if (best == p.c_.end()) break;
            auto [i, j] = best->first;
            Rational c = best->second;
            q.add_term(i - 1, j, c);
            p.add_term(i, j, -c);
            if (i - 1 + j + 1 <= p.degree_) p.add_term(i - 1, j + 1, -c);
            progress = true;
        }
        // truncating a genuine multiple of (U+V) keeps it a multiple, so
        // the remainder must vanish identically
        std::string offenders;
        for (const auto& [ij, v] : p.c_)
            offenders += " U^" + std::to_string(ij.first) + " V^" + std::to_string(ij.second);
        if (!offenders.empty())
            throw std::domain_error(
                "BivarSeries: 1/(U+V) prefactor does not cancel; monomials:" + offenders);
        return q;
    }

    // Substitute U -> auu*U + auv*V, V -> avu*U + avv*V.
    BivarSeries linear_subst(const Rational& auu, const Rational& auv, const Rational& avu,
                             const Rational& avv) const
        requires std::same_as<R, Rational>
    {
        BivarSeries r(degree_);
        BivarSeries nu(degree_), nv(degree_);
        nu.add_term(1, 0, auu);
        nu.add_term(0, 1, auv);
        nv.add_term(1, 0, avu);
        nv.add_term(0, 1, avv);
        for (const auto& [ij, v] : c_) {
            BivarSeries t(degree_);
            t.add_term(0, 0, v);
            for (int k = 0; k < ij.first; ++k) t = t * nu;
            for (int k = 0; k < ij.second; ++k) t = t * nv;
            r += t;
        }
        return r;
    }

    const std::map<std::pair<int, int>, R>& terms() const { return c_; }

private:
    void truncate() {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->first.first + it->first.second > degree_) it = c_.erase(it);
            else ++it;
        }
    }

    int degree_;
    std::map<std::pair<int, int>, R> c_;
};

}  // namespace kzb
