#include "flatgraph/geometry.hpp"

namespace flatgraph {

int orientation(const Point& a, const Point& b, const Point& c) {
    Rational v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

bool angle_less(const Point& a, const Point& b) {
    auto half = [](const Point& v) {
        // 0 = positive x axis and upper half, 1 = lower half
        return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

SegmentMeeting meet_segments(const Point& a1, const Point& b1,
                             const Point& a2, const Point& b2) {
    SegmentMeeting out;
    Point d1 = b1 - a1, d2 = b2 - a2;
    Rational denom = cross(d1, d2);
    if (denom != 0) {
        Rational t1 = cross(a2 - a1, d2) / denom;
        Rational t2 = cross(a2 - a1, d1) / denom;
        if (t1 < 0 || t1 > 1 || t2 < 0 || t2 > 1) return out;
        out.kind = SegmentMeeting::AtPoint;
        out.p = {a1.x + t1 * d1.x, a1.y + t1 * d1.y};
        out.t1 = t1;
        out.t2 = t2;
        return out;
    }
    // parallel
    if (orientation(a1, b1, a2) != 0) return out; // parallel, not collinear
    // collinear: project on the dominant axis
    auto key = [&](const Point& p) {
        return (d1.x != 0) ? p.x : p.y;
    };
    Rational lo1 = std::min(key(a1), key(b1)), hi1 = std::max(key(a1), key(b1));
    Rational lo2 = std::min(key(a2), key(b2)), hi2 = std::max(key(a2), key(b2));
    Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return out;
    if (lo == hi) {
        out.kind = SegmentMeeting::AtPoint;
        out.p = (key(a1) == lo) ? a1 : (key(b1) == lo ? b1 : (key(a2) == lo ? a2 : b2));
        Rational len1 = key(b1) - key(a1), len2 = key(b2) - key(a2);
        out.t1 = len1 == 0 ? Rational(0) : (lo - key(a1)) / len1;
        out.t2 = len2 == 0 ? Rational(0) : (lo - key(a2)) / len2;
        return out;
    }
    out.kind = SegmentMeeting::Overlap;
    return out;
}

} // namespace flatgraph
