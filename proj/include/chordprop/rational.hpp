#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "chordprop/error.hpp"

namespace chordprop {

/// Exact rational type used for all metric data. No floats anywhere.
using Rational = boost::rational<std::int64_t>;

inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Floor-style modulus into [0, m) for positive m.
inline Rational rational_mod(Rational x, const Rational& m) {
    while (x < Rational(0)) x += m;
    while (x >= m) x -= m;
    return x;
}

}  // namespace chordprop
