#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace monocert {

// Exact rational scalar. GMP keeps values canonical (reduced, denominator > 0),
// which is what every identity check in this library relies on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p". Throws on empty/malformed input or zero denominator.
Rational rat_parse(const std::string& text);

// Renders as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rational& q);

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int rat_sign(const Rational& q) { return sgn(q); }

// Smallest-effort rational upper bound s with s*s >= q (q >= 0), accurate to
// about 2^-48 relatively. Used only to scale cutting-plane iterates back into
// the James unit ball; everything downstream stays exact.
Rational rat_sqrt_upper(const Rational& q);

// One value of [-inf, +inf] never occurs here; +inf alone is needed for
// indicator functions and Fitzpatrick values.
struct ExtRat {
    std::optional<Rational> v;  // nullopt encodes +infinity

    ExtRat() : v(Rational(0)) {}
    ExtRat(Rational r) : v(std::move(r)) {}
    static ExtRat infinity() { return ExtRat(Tag{}); }

    bool is_finite() const { return v.has_value(); }
    const Rational& value() const {
        if (!v) throw std::logic_error("value() on +infinity");
        return *v;
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (!a.v || !b.v) return infinity();
        return ExtRat(*a.v + *b.v);
    }
    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (!a.v || !b.v) return !a.v && !b.v;
        return *a.v == *b.v;
    }
    // a >= b in the extended order.
    friend bool ext_ge(const ExtRat& a, const ExtRat& b) {
        if (!a.v) return true;
        if (!b.v) return false;
        return *a.v >= *b.v;
    }

    std::string str() const { return v ? rat_str(*v) : "+inf"; }

  private:
    struct Tag {};
    explicit ExtRat(Tag) : v(std::nullopt) {}
};

}  // namespace monocert
