#pragma once

#include "kzb/bivar_series.hpp"
#include "kzb/rational.hpp"

#include <string>
#include <vector>

namespace kzb {

// Bernoulli numbers with the generating function T/(1 - e^{-T}) = sum B_m T^m/m!,
// so B_0 = 1, B_1 = 1/2, B_2 = 1/6, B_3 = 0, ...
Rational bernoulli(int m);

using QBivar = BivarSeries<Rational>;

// E(T) = (e^T - 1)/T expanded in T = U + V, to total degree D.
QBivar exp_ratio_UplusV(int D);
// E(U) resp. E(V) as bivariate series.
QBivar exp_ratio_U(int D);
QBivar exp_ratio_V(int D);
// E(-V).
QBivar exp_ratio_negV(int D);

// The logarithm kernel: T(U,V) = (1/U) (1 - E(V)/E(U+V)), a genuine power
// series; the 1/U cancellation is verified and failure throws.  Expanded
// from exp(V)-1 and exp(U+V)-1 by series division.
QBivar kernel_T(int D);

// The operative BCH kernel in the period-map slots:
// S(U,V) = (1/(U+V)) (1 - E(-V)/E(U)); the 1/(U+V) cancellation is
// verified and failure throws.
QBivar kernel_bch(int D);

// The two-variable Kurlin kernel K(x,y) = (1/y)(1 - E(x)/E(x+y)) with
// log(e^X e^Y) = X + Y + K(ad_X, ad_Y)[X,Y] on the metabelian algebra.
QBivar kurlin_kernel(int D);

// Result of probing a printed kernel expression for the required
// singular-prefactor cancellation.
struct KernelProbe {
    bool cancels = false;
    std::string detail;  // offending monomials when cancellation fails
};

// (1/U)(1 - ((U+V)/V) (e^U-1)/(e^{U+V}-1)): the inner 1/V does not cancel.
KernelProbe probe_literal_T(int D);
// (1/(U+V))(1 - ((e^{-V}-1)/V) ((U+V)/(e^{U+V}-1))): the 1/(U+V) does not cancel.
KernelProbe probe_literal_S(int D);

// sum_{r,s} X^s Y^r / ((r+s+1) r! s!) as a bivariate series in (X, Y).
QBivar series_inv_rs1(int D);
// sum_{r,s} X^s Y^r / ((r+s+2) r! (s+1)!).
QBivar series_inv_rs2(int D);

}  // namespace kzb
