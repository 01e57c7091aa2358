#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hensel {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned exp) {
    Int r = 1;
    Int b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// Extended gcd: returns g = gcd(a,b) and x with a*x ≡ g (mod b).
inline Int ext_gcd(Int a, Int b, Int& x) {
    Int x0 = 1, x1 = 0;
    Int m = b;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    x = x0;
    if (m != 0) {
        x %= m;
        if (x < 0) x += abs(m);
    }
    return a;
}

// Inverse of a modulo m (m > 1); throws if gcd(a,m) != 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int x;
    Int r = a % m;
    if (r < 0) r += m;
    Int g = ext_gcd(r, m, x);
    if (g != 1 && g != -1) throw std::domain_error("mod_inverse: not a unit");
    x %= m;
    if (x < 0) x += m;
    return x;
}

inline Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Multiplicity of p in n; n must be nonzero.
inline long long int_valuation(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("int_valuation: zero argument");
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline bool is_small_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace hensel
