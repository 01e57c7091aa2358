#pragma once

#include "hensel/poly.hpp"
#include "hensel/value.hpp"

#include <vector>

namespace hensel {

struct PolygonPoint {
    int index;
    Value value;

    friend bool operator==(const PolygonPoint& a, const PolygonPoint& b) {
        return a.index == b.index && a.value == b.value;
    }
};

struct PolygonSegment {
    int start_index;
    int end_index;
    Value start_value;
    Value end_value;
    Rat slope;
    int horizontal_length;
};

/// Lower convex hull of the coefficient-valuation points (i, v(b_i)) of a
/// polynomial. Zero coefficients (value ∞) lie above every line and are
/// skipped; points lying exactly on a segment are not vertices, so slopes
/// strictly increase along the hull.
class NewtonPolygon {
public:
    static NewtonPolygon from_values(const std::vector<Value>& values) {
        if (values.empty()) throw std::invalid_argument("NewtonPolygon: no coefficients");
        if (values.back().is_infinity())
            throw std::invalid_argument("NewtonPolygon: leading coefficient must be nonzero");

        std::vector<PolygonPoint> finite;
        for (size_t i = 0; i < values.size(); ++i)
            if (values[i].is_finite())
                finite.push_back(PolygonPoint{static_cast<int>(i), values[i]});

        NewtonPolygon P;
        for (const PolygonPoint& pt : finite) {
            while (P.vertices_.size() >= 2) {
                const PolygonPoint& a = P.vertices_[P.vertices_.size() - 2];
                const PolygonPoint& b = P.vertices_.back();
                // pop b when slope(b, pt) <= slope(a, b), i.e. b is not a
                // strict corner of the lower hull
                const Int lhs = Int(pt.value.amount() - b.value.amount()) * (b.index - a.index);
                const Int rhs = Int(b.value.amount() - a.value.amount()) * (pt.index - b.index);
                if (lhs <= rhs)
                    P.vertices_.pop_back();
                else
                    break;
            }
            P.vertices_.push_back(pt);
        }
        for (size_t i = 0; i + 1 < P.vertices_.size(); ++i) {
            const PolygonPoint& a = P.vertices_[i];
            const PolygonPoint& b = P.vertices_[i + 1];
            P.segments_.push_back(PolygonSegment{
                a.index, b.index, a.value, b.value,
                Rat(b.value.amount() - a.value.amount()) / Rat(b.index - a.index),
                b.index - a.index});
        }
        return P;
    }

    template <class F>
    static NewtonPolygon of_polynomial(const Poly<typename F::Elem>& g, const F& K) {
        if (g.is_zero()) throw std::invalid_argument("NewtonPolygon: zero polynomial");
        std::vector<Value> values;
        values.reserve(static_cast<size_t>(g.degree() + 1));
        for (const auto& c : g.coeffs()) values.push_back(K.valuation(c));
        return from_values(values);
    }

    const std::vector<PolygonPoint>& vertices() const { return vertices_; }
    const std::vector<PolygonSegment>& segments() const { return segments_; }

    /// Segments of horizontal length 1: consecutive vertices (k,·),(k+1,·).
    std::vector<std::pair<int, Rat>> isolated_slopes() const {
        std::vector<std::pair<int, Rat>> out;
        for (const PolygonSegment& s : segments_)
            if (s.horizontal_length == 1) out.emplace_back(s.start_index, s.slope);
        return out;
    }

    bool is_isolated(int k) const {
        for (const PolygonSegment& s : segments_)
            if (s.start_index == k && s.horizontal_length == 1) return true;
        return false;
    }

    /// v(b_k) - v(b_{k+1}), the valuation of the unique root attached to the
    /// isolated slope starting at k (the negated slope).
    Value root_valuation(int k) const {
        for (const PolygonSegment& s : segments_)
            if (s.start_index == k && s.horizontal_length == 1)
                return s.start_value - s.end_value;
        throw std::invalid_argument("root_valuation: index is not an isolated slope");
    }

private:
    std::vector<PolygonPoint> vertices_;
    std::vector<PolygonSegment> segments_;
};

}  // namespace hensel
