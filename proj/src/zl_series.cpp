#include "kzb/zl_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace kzb {

namespace {
const Rational kZero(0);
}

ZLSeries ZLSeries::monomial(const Rational& c, int n, int j, int order) {
    if (j < 0) throw std::invalid_argument("ZLSeries: negative L-exponent");
    ZLSeries s;
    s.order_ = order;
    if (!c.is_zero() && n <= order) s.c_[{n, j}] = c;
    return s;
}

void ZLSeries::set_order_bound(int m) {
    order_ = m;
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->first.first > order_) it = c_.erase(it);
        else ++it;
    }
}

int ZLSeries::valuation() const {
    if (c_.empty()) return kExactOrder;
    return c_.begin()->first.first;
}

int ZLSeries::log_degree() const {
    int d = -1;
    for (const auto& [nj, v] : c_) d = std::max(d, nj.second);
    return d;
}

const Rational& ZLSeries::coeff(int n, int j) const {
    if (n > order_)
        throw std::out_of_range("ZLSeries::coeff: order " + std::to_string(n) +
                                " past valid bound " + std::to_string(order_));
    auto it = c_.find({n, j});
    return it == c_.end() ? kZero : it->second;
}

void ZLSeries::add_term(int n, int j, const Rational& c) {
    if (c.is_zero() || n > order_) return;
    auto [it, fresh] = c_.try_emplace({n, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

ZLSeries& ZLSeries::operator+=(const ZLSeries& o) {
    set_order_bound(std::min(order_, o.order_));
    for (const auto& [nj, v] : o.c_) add_term(nj.first, nj.second, v);
    return *this;
}

ZLSeries& ZLSeries::operator-=(const ZLSeries& o) {
    set_order_bound(std::min(order_, o.order_));
    for (const auto& [nj, v] : o.c_) add_term(nj.first, nj.second, -v);
    return *this;
}

ZLSeries operator-(const ZLSeries& a) {
    ZLSeries r;
    r.order_ = a.order_;
    for (const auto& [nj, v] : a.c_) r.c_[nj] = -v;
    return r;
}

ZLSeries operator*(const ZLSeries& a, const ZLSeries& b) {
    ZLSeries r;
    if (a.is_zero() || b.is_zero()) return r;  // exact zero
    long bound = std::min<long>(
        std::min<long>(static_cast<long>(a.order_) + b.valuation(),
                       static_cast<long>(b.order_) + a.valuation()),
        ZLSeries::kExactOrder);
    r.order_ = static_cast<int>(bound);
    for (const auto& [nj1, v1] : a.c_) {
        for (const auto& [nj2, v2] : b.c_) {
            int n = nj1.first + nj2.first;
            if (n > r.order_) continue;
            r.add_term(n, nj1.second + nj2.second, v1 * v2);
        }
    }
    return r;
}

ZLSeries ZLSeries::scaled(const Rational& c) const {
    ZLSeries r;
    r.order_ = order_;
    if (c.is_zero()) {
        r.order_ = kExactOrder;
        return r;
    }
    for (const auto& [nj, v] : c_) r.c_[nj] = v * c;
    return r;
}

ZLSeries ZLSeries::shifted(int dn) const {
    ZLSeries r;
    r.order_ = order_ == kExactOrder ? kExactOrder : order_ + dn;
    for (const auto& [nj, v] : c_) r.c_[{nj.first + dn, nj.second}] = v;
    return r;
}

ZLSeries ZLSeries::pow(int k) const {
    if (k < 0) throw std::invalid_argument("ZLSeries::pow: negative exponent");
    ZLSeries r = one();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

ZLSeries ZLSeries::reciprocal() const {
    if (is_zero()) throw std::domain_error("ZLSeries::reciprocal: zero series");
    int k = valuation();
    // leading z-coefficient must be L-free
    for (const auto& [nj, v] : c_)
        if (nj.first == k && nj.second > 0)
            throw std::domain_error("ZLSeries::reciprocal: leading term carries L");
    Rational lead = coeff(k, 0);
    // f = lead z^k (1 + u), val(u) > 0 relative to z^k
    ZLSeries u = shifted(-k).scaled(Rational(1) / lead);
    u.add_term(0, 0, Rational(-1));
    int rel_order = order_ == kExactOrder ? kExactOrder : order_ - k;
    ZLSeries inv = one();
    inv.set_order_bound(rel_order);
    ZLSeries upow = one();
    int uval = u.is_zero() ? kExactOrder : u.valuation();
    for (long deg = uval; deg <= rel_order && !u.is_zero(); deg += uval) {
        upow = upow * u;
        upow.set_order_bound(rel_order);
        if (upow.is_zero()) break;
        ZLSeries term = upow;
        if ((deg / uval) % 2 == 1) term = -term;
        inv += term;
    }
    return inv.shifted(-k).scaled(Rational(1) / lead);
}

ZLSeries ZLSeries::derivative() const {
    ZLSeries r;
    r.order_ = order_ == kExactOrder ? kExactOrder : order_ - 1;
    for (const auto& [nj, v] : c_) {
        auto [n, j] = nj;
        r.add_term(n - 1, j, v * Rational(n));
        if (j > 0) r.add_term(n - 1, j - 1, v * Rational(j));
    }
    return r;
}

bool ZLSeries::vanishes_through(int through) const {
    if (through > order_)
        throw std::out_of_range("ZLSeries::vanishes_through: past valid bound");
    for (const auto& [nj, v] : c_)
        if (nj.first <= through) return false;
    return true;
}

bool ZLSeries::equal_through(const ZLSeries& a, const ZLSeries& b, int through) {
    ZLSeries d = a - b;
    return d.vanishes_through(std::min(through, d.order_bound()));
}

ZLSeries antiderivative(const ZLSeries& f) {
    ZLSeries r;
    r.set_order_bound(f.order_bound() == ZLSeries::kExactOrder ? ZLSeries::kExactOrder
                                                               : f.order_bound() + 1);
    for (const auto& [nj, v] : f.terms()) {
        auto [n, j] = nj;
        if (n == -1) {
            r.add_term(0, j + 1, v / Rational(j + 1));
            continue;
        }
        // int z^n L^j = sum_{i=0..j} (-1)^i j!/(j-i)! z^{n+1} L^{j-i} / (n+1)^{i+1}
        Rational c = v;
        for (int i = 0; i <= j; ++i) {
            c /= Rational(n + 1);
            r.add_term(n + 1, j - i, c);
            c *= Rational(-(j - i));
        }
    }
    return r;
}

ZLSeries iterated_integral(std::span<const ZLSeries> forms) {
    ZLSeries acc = ZLSeries::one();
    for (auto it = forms.rbegin(); it != forms.rend(); ++it) acc = antiderivative(*it * acc);
    return acc;
}

ZLSeries iterated_integral(std::initializer_list<ZLSeries> forms) {
    std::vector<ZLSeries> v(forms);
    return iterated_integral(std::span<const ZLSeries>(v));
}

}  // namespace kzb
