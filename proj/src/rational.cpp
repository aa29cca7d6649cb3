#include "kzb/rational.hpp"

#include <ostream>

namespace kzb {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(z));
}

Rational binom(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(z));
}

}  // namespace kzb
