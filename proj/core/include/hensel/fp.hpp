#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hensel {

/// Element of a prime field F_p. Carries its modulus so that arithmetic is
/// context-free; mixing moduli is a logic error.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v, long long p) : p_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        long long p = merge(a, b);
        if (p == 0) return Fp();
        return make((a.v_ + b.v_) % p, p);
    }
    friend Fp operator-(Fp a, Fp b) {
        long long p = merge(a, b);
        if (p == 0) return Fp();
        long long r = (a.v_ - b.v_) % p;
        if (r < 0) r += p;
        return make(r, p);
    }
    friend Fp operator*(Fp a, Fp b) {
        long long p = merge(a, b);
        if (p == 0) return Fp();
        return make(static_cast<long long>(static_cast<__int128>(a.v_) * b.v_ % p), p);
    }
    Fp operator-() const {
        if (p_ == 0) return *this;
        return make(v_ == 0 ? 0 : p_ - v_, p_);
    }

    Fp inverse() const {
        if (p_ == 0 || v_ == 0) throw std::domain_error("Fp: inverse of zero");
        long long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (r != 1) throw std::domain_error("Fp: modulus not prime");
        if (t < 0) t += p_;
        return make(t, p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    friend bool operator==(Fp a, Fp b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) return false;
        return a.v_ == b.v_;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp make(long long v, long long p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    // A default-constructed Fp is the zero of an unspecified field (v_ == 0,
    // p_ == 0) and adopts the other operand's modulus.
    static long long merge(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli");
        return a.p_;
    }

    long long v_;
    long long p_;
};

}  // namespace hensel
