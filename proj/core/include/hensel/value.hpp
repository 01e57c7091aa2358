#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hensel {

/// Element of the extended value group Z ∪ {∞}.
///
/// Infinity is the value of 0; it is the maximum of the order and absorbing
/// under addition. All finite amounts are plain integers (the value group is
/// fixed to rank one; the representation is kept behind this type so a
/// different group could be swapped in).
class Value {
public:
    constexpr Value() : finite_(true), amount_(0) {}
    constexpr explicit Value(long long amount) : finite_(true), amount_(amount) {}

    static constexpr Value infinity() {
        Value v;
        v.finite_ = false;
        v.amount_ = 0;
        return v;
    }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_infinity() const { return !finite_; }

    constexpr long long amount() const {
        if (!finite_) throw std::logic_error("Value: amount of infinity");
        return amount_;
    }

    friend constexpr Value operator+(Value a, Value b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return Value(a.amount_ + b.amount_);
    }

    friend constexpr Value operator-(Value a, Value b) {
        if (!b.finite_) throw std::logic_error("Value: subtracting infinity");
        if (!a.finite_) return infinity();
        return Value(a.amount_ - b.amount_);
    }

    friend constexpr bool operator==(Value a, Value b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.amount_ == b.amount_;
    }

    friend constexpr bool operator<(Value a, Value b) {
        if (!a.finite_) return false;          // inf < x never
        if (!b.finite_) return true;           // finite < inf
        return a.amount_ < b.amount_;
    }
    friend constexpr bool operator>(Value a, Value b) { return b < a; }
    friend constexpr bool operator<=(Value a, Value b) { return !(b < a); }
    friend constexpr bool operator>=(Value a, Value b) { return !(a < b); }
    friend constexpr bool operator!=(Value a, Value b) { return !(a == b); }

    friend constexpr Value min(Value a, Value b) { return a < b ? a : b; }

    std::string str() const { return finite_ ? std::to_string(amount_) : "inf"; }

private:
    bool finite_;
    long long amount_;
};

}  // namespace hensel
