#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordcalc {

using Integer = boost::multiprecision::cpp_int;

inline Integer pow2_int(std::uint64_t k) {
    Integer r = 1;
    r <<= static_cast<unsigned>(k);
    return r;
}

inline int sign_of(const Integer& x) { return x.sign(); }

// Number of bits needed so that 2^bits > x, for x >= 0.
inline std::uint64_t bits_exceeding(const Integer& x) {
    if (x <= 0) return 0;
    return static_cast<std::uint64_t>(boost::multiprecision::msb(x)) + 1;
}

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace ordcalc
