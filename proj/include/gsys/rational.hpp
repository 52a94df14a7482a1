#ifndef GSYS_RATIONAL_HPP
#define GSYS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gsys {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Prints "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Exact rational square root; false when r is not a perfect square.
inline bool rat_sqrt(const Rat& r, Rat& out) {
    if (r < 0) return false;
    Int n = numerator(r), d = denominator(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rat(sn, sd);
    return true;
}

} // namespace gsys

#endif
