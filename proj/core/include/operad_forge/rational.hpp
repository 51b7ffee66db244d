#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace operad_forge {

// Exact arithmetic over Q. GMP-backed, always in reduced form with a
// positive denominator; no rounding can occur anywhere downstream.
using Int    = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // always divides: r is C(n-k+i, i) at this point
    }
    return r;
}

/// Parse "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Scalar scalar_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Scalar(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Scalar(num) / Scalar(den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

inline std::string scalar_to_string(const Scalar& s) {
    if (denominator(s) == 1) return numerator(s).str();
    return numerator(s).str() + "/" + denominator(s).str();
}

}  // namespace operad_forge
