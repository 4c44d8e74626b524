#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace dimerpf {

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

inline double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline int orientation_sign(const Point& o, const Point& a, const Point& b) {
  double c = cross(o, a, b);
  return (c > 0) - (c < 0);
}

// p collinear with [a, b] and inside its bounding box.
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
  return orientation_sign(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Segments [a,b] and [c,d] meet somewhere other than at a shared endpoint.
inline bool segments_conflict(const Point& a, const Point& b, const Point& c, const Point& d) {
  bool shared = a == c || a == d || b == c || b == d;
  if (shared) {
    // Only overlap along a common line can conflict.
    Point s = (a == c || a == d) ? a : b;
    Point p = s == a ? b : a;
    Point q = (c == s) ? d : c;
    if (orientation_sign(s, p, q) != 0) return false;
    return (p.x - s.x) * (q.x - s.x) + (p.y - s.y) * (q.y - s.y) > 0;
  }
  int o1 = orientation_sign(a, b, c), o2 = orientation_sign(a, b, d);
  int o3 = orientation_sign(c, d, a), o4 = orientation_sign(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

inline int winding_number(const Point& p, const std::vector<Point>& polygon) {
  int wn = 0;
  std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && cross(a, b, p) > 0) ++wn;
    } else if (b.y <= p.y && cross(a, b, p) < 0) {
      --wn;
    }
  }
  return wn;
}

inline double signed_area(const std::vector<Point>& polygon) {
  double s = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % polygon.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s / 2;
}

}  // namespace dimerpf
