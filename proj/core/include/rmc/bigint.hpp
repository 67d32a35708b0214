#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rmc {

// Counts in this library routinely exceed 64 bits (e.g. dual distributions of
// codes over GF(3^16)); everything count-valued is an Int, never a double.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(const Int& base, unsigned long exp) {
    return boost::multiprecision::pow(base, exp);
}

// q^e for the common case of a machine-word base.
inline Int pow_q(std::uint64_t q, unsigned long e) {
    return boost::multiprecision::pow(Int(q), e);
}

}  // namespace rmc
