#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nilflat/error.hpp"

namespace nilflat {

// Exact arbitrary-precision rationals. cpp_rational keeps the canonical form
// we need everywhere: lowest terms, denominator > 0, unique zero.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sign-safe construction; cpp_rational's two-argument constructor rejects
// negative denominators rather than normalising them.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

// Accepts "p", "-p", "p/q" with optional sign on either part.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

// max(|numerator|, denominator); used to pick small pivots in elimination.
Integer height(const Rational& r);

} // namespace nilflat
