#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lapdiam {

/// Arbitrary-precision rational, always canonicalised (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

class RationalParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Accepts "p", "-p", "p/q" with decimal digits. Zero denominators are rejected.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& r);

}  // namespace lapdiam
