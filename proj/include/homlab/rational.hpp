#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace homlab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt int_pow(BigInt base, unsigned long exp) {
    BigInt result{1};
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

// base^exp for possibly negative exp; base must be nonzero when exp < 0.
inline Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        Rat inv{boost::multiprecision::denominator(base), boost::multiprecision::numerator(base)};
        return rat_pow(inv, -exp);
    }
    Rat result{1};
    Rat b = base;
    auto e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical "num/den" form; integers print without the denominator.
inline std::string rat_to_string(const Rat& r) {
    const BigInt num = rat_num(r);
    const BigInt den = rat_den(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rat{BigInt{text}};
        // decimal literal, e.g. "0.5"
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty()) return Rat{BigInt{whole}};
        BigInt den = int_pow(BigInt{10}, frac.size());
        BigInt num = BigInt{whole.empty() || whole == "-" ? std::string{"0"} : whole} * den;
        BigInt fnum{frac};
        num += (text[0] == '-') ? -fnum : fnum;
        return Rat{num, den};
    }
    BigInt num{text.substr(0, slash)};
    BigInt den{text.substr(slash + 1)};
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return Rat{num, den};
}

}  // namespace homlab
