#ifndef ZECC_RATIONAL_HPP
#define ZECC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace zecc {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p/q", "p", or a plain decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_to_string(const Rational& value);

}  // namespace zecc

#endif  // ZECC_RATIONAL_HPP
