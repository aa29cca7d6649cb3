#include "kzb/kernels.hpp"

#include "kzb/zl_series.hpp"

#include <mutex>

namespace kzb {

Rational bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::vector<Rational> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (m < static_cast<int>(cache.size())) return cache[m];
    int M = m + 8;
    // T/(1 - e^{-T}) = 1/D(T) with D(T) = sum_{k>=0} (-1)^k T^k/(k+1)!
    ZLSeries den;
    den.set_order_bound(M);
    Rational c(1);
    for (int k = 0; k <= M; ++k) {
        den.add_term(k, 0, c);
        c = -c / Rational(k + 2);
    }
    ZLSeries gf = den.reciprocal();
    cache.clear();
    Rational fact(1);
    for (int k = 0; k <= M; ++k) {
        if (k > 0) fact *= Rational(k);
        cache.push_back(gf.coeff(k, 0) * fact);
    }
    return cache[m];
}

namespace {

// sum_m (aU + bV)^m / (m+1)!
QBivar exp_ratio_linear(int D, const Rational& a, const Rational& b) {
    QBivar r(D);
    for (int m = 0; m <= D; ++m) {
        Rational inv_f = Rational(1) / factorial(m + 1);
        for (int i = 0; i <= m; ++i) {
            Rational c = binom(m, i);
            Rational ai(1), bj(1);
            for (int t = 0; t < i; ++t) ai *= a;
            for (int t = 0; t < m - i; ++t) bj *= b;
            r.add_term(i, m - i, c * ai * bj * inv_f);
        }
    }
    return r;
}

// e^{aU+bV} - 1
QBivar expm1_linear(int D, const Rational& a, const Rational& b) {
    QBivar r(D);
    for (int m = 1; m <= D; ++m) {
        Rational inv_f = Rational(1) / factorial(m);
        for (int i = 0; i <= m; ++i) {
            Rational c = binom(m, i);
            Rational ai(1), bj(1);
            for (int t = 0; t < i; ++t) ai *= a;
            for (int t = 0; t < m - i; ++t) bj *= b;
            r.add_term(i, m - i, c * ai * bj * inv_f);
        }
    }
    return r;
}

}  // namespace

QBivar exp_ratio_UplusV(int D) { return exp_ratio_linear(D, Rational(1), Rational(1)); }
QBivar exp_ratio_U(int D) { return exp_ratio_linear(D, Rational(1), Rational(0)); }
QBivar exp_ratio_V(int D) { return exp_ratio_linear(D, Rational(0), Rational(1)); }
QBivar exp_ratio_negV(int D) { return exp_ratio_linear(D, Rational(0), Rational(-1)); }

QBivar kernel_T(int D) {
    int W = D + 1;
    QBivar one(W);
    one.add_term(0, 0, Rational(1));
    QBivar num = one - exp_ratio_V(W) * exp_ratio_UplusV(W).reciprocal();
    return num.divided_by_U();
}

QBivar kernel_bch(int D) {
    int W = D + 1;
    QBivar one(W);
    one.add_term(0, 0, Rational(1));
    QBivar num = one - exp_ratio_negV(W) * exp_ratio_U(W).reciprocal();
    return num.divided_by_UplusV();
}

QBivar kurlin_kernel(int D) {
    int W = D + 1;
    QBivar one(W);
    one.add_term(0, 0, Rational(1));
    // (1/y)(1 - E(x)/E(x+y)), with x in the U slot and y in the V slot;
    // swap to bring y into the U slot for the division, then swap back
    QBivar num = one - exp_ratio_U(W) * exp_ratio_UplusV(W).reciprocal();
    return num.swapped_vars().divided_by_U().swapped_vars();
}

KernelProbe probe_literal_T(int D) {
    KernelProbe p;
    int W = D + 1;
    // inner bracket = 1 - (e^U-1) / (V E(U+V)); test V | (V E(U+V) - (e^U-1))
    QBivar lhs(W);
    QBivar euv = exp_ratio_UplusV(W);
    for (const auto& [ij, v] : euv.terms())
        if (ij.first + ij.second + 1 <= W) lhs.add_term(ij.first, ij.second + 1, v);
    lhs -= expm1_linear(W, Rational(1), Rational(0));
    std::string offenders;
    for (const auto& [ij, v] : lhs.terms())
        if (ij.second == 0) offenders += " U^" + std::to_string(ij.first);
    p.cancels = offenders.empty();
    if (!p.cancels) p.detail = "1/V factor does not cancel; V-free monomials:" + offenders;
    return p;
}

KernelProbe probe_literal_S(int D) {
    KernelProbe p;
    int W = D + 1;
    QBivar one(W);
    one.add_term(0, 0, Rational(1));
    // numerator = 1 + E(-V)/E(U+V); test divisibility by U+V
    QBivar num = one + exp_ratio_negV(W) * exp_ratio_UplusV(W).reciprocal();
    try {
        num.divided_by_UplusV();
        p.cancels = true;
    } catch (const std::domain_error& e) {
        p.cancels = false;
        p.detail = e.what();
    }
    return p;
}

QBivar series_inv_rs1(int D) {
    QBivar r(D);
    for (int s = 0; s <= D; ++s)
        for (int rr = 0; rr + s <= D; ++rr)
            r.add_term(s, rr, Rational(1) / (Rational(rr + s + 1) * factorial(rr) * factorial(s)));
    return r;
}

QBivar series_inv_rs2(int D) {
    QBivar r(D);
    for (int s = 0; s <= D; ++s)
        for (int rr = 0; rr + s <= D; ++rr)
            r.add_term(s, rr,
                       Rational(1) / (Rational(rr + s + 2) * factorial(rr) * factorial(s + 1)));
    return r;
}

}  // namespace kzb
