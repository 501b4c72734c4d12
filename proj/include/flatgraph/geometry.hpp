#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace flatgraph {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
    Rational x, y;

    bool operator==(const Point&) const = default;
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// Sign of the signed area of (a,b,c): +1 counterclockwise, -1 clockwise.
int orientation(const Point& a, const Point& b, const Point& c);

bool point_on_segment(const Point& p, const Point& a, const Point& b); // includes endpoints

/// Counterclockwise angular order of nonzero direction vectors, starting
/// from the positive x axis. Exact; equal directions compare equivalent.
bool angle_less(const Point& a, const Point& b);

struct SegmentMeeting {
    enum Kind { None, AtPoint, Overlap } kind = None;
    Point p;                 // when AtPoint
    Rational t1, t2;         // parameters of p along [a1,b1] and [a2,b2]
};

/// How two closed segments meet: nowhere, in a single point, or in a
/// shared subsegment (collinear overlap).
SegmentMeeting meet_segments(const Point& a1, const Point& b1,
                             const Point& a2, const Point& b2);

} // namespace flatgraph
