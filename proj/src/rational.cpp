#include "monocert/rational.hpp"

namespace monocert {

Rational rat_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

Rational rat_sqrt_upper(const Rational& q) {
    if (q < 0) throw std::invalid_argument("sqrt of negative rational");
    if (q == 0) return Rational(0);
    // ceil-sqrt of ceil(q * 2^96), divided by 2^48: the square is >= q.
    mpz_class shifted = (q.get_num() << 96) / q.get_den() + 1;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), shifted.get_mpz_t());
    root += 1;  // floor sqrt -> strict upper bound
    Rational r(root, mpz_class(1) << 48);
    r.canonicalize();
    return r;
}

}  // namespace monocert
