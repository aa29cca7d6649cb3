#pragma once

#include "kzb/rational.hpp"
#include "kzb/zl_series.hpp"

namespace kzb {

// Customization points for the coefficient rings used by the generic
// containers (bivariate series, noncommutative series, metabelian
// elements).  A ring type R must be default-constructible to zero and
// provide is_zero(), +=, unary -, and *.

template <class R>
R ring_one();

template <>
inline Rational ring_one<Rational>() { return Rational(1); }

template <>
inline ZLSeries ring_one<ZLSeries>() { return ZLSeries::one(); }

inline Rational ring_scale(const Rational& x, const Rational& c) { return x * c; }
inline ZLSeries ring_scale(const ZLSeries& x, const Rational& c) { return x.scaled(c); }

}  // namespace kzb
