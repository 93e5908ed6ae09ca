#pragma once

#include <cmath>
#include <stdexcept>

namespace ferry {

// Planar position of a static node or robot, in abstract length units.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline bool is_finite(const Point& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

// Euclidean distance. Symmetric, zero iff the points coincide.
inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace ferry
