#ifndef CROC_RATIONAL_HPP
#define CROC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace croc {

/// Exact rational scalar. GMP keeps values reduced with positive denominator.
using Rational = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long num, long den = 1)
{
    if (den == 0)
        throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q". Used by every JSON reader.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
std::string to_string(const Rational& q);

} // namespace croc

#endif
