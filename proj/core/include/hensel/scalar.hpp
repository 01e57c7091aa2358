#pragma once

#include "hensel/fp.hpp"
#include "hensel/ints.hpp"

namespace hensel {

// Customization points used by the generic polynomial code. Coefficient
// types that need runtime context (Fp and everything built on it) answer
// through an exemplar element instead of a global.

inline bool is_zero_elem(const Int& x) { return x == 0; }
inline Int zero_like(const Int&) { return Int(0); }
inline Int one_like(const Int&) { return Int(1); }
inline Int from_int_like(const Int&, long long v) { return Int(v); }

inline bool is_zero_elem(const Rat& x) { return x == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int_like(const Rat&, long long v) { return Rat(v); }

inline std::string elem_str(const Int& x) { return x.str(); }
inline std::string elem_str(const Rat& x) { return x.str(); }
inline bool elem_is_negative(const Int& x) { return x < 0; }
inline bool elem_is_negative(const Rat& x) { return x < 0; }

inline bool is_zero_elem(const Fp& x) { return x.is_zero(); }
inline Fp zero_like(const Fp& x) {
    return x.modulus() == 0 ? Fp() : Fp(0, x.modulus());
}
inline Fp one_like(const Fp& x) {
    if (x.modulus() == 0) throw std::logic_error("one_like: unbound Fp exemplar");
    return Fp(1, x.modulus());
}
inline Fp from_int_like(const Fp& x, long long v) {
    if (x.modulus() == 0) throw std::logic_error("from_int_like: unbound Fp exemplar");
    return Fp(v, x.modulus());
}
inline std::string elem_str(const Fp& x) { return x.str(); }
inline bool elem_is_negative(const Fp&) { return false; }

/// Square-and-multiply for any multiplicative monoid element.
template <class T>
T ring_pow(T base, unsigned long long e, T one) {
    T acc = std::move(one);
    while (e != 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return acc;
}

}  // namespace hensel
