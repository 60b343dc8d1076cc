#pragma once

// Geometry helpers shared by the region tests and the acceptance suite:
// symmetric Hausdorff distance between two sampled rate frontiers, with
// each frontier treated as a polyline so that sample spacing along the
// curve does not inflate the distance.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ifc/rate_regions.hpp"

namespace ifc_test {

struct XY {
    double x{};
    double y{};
};

inline double point_segment_distance(const XY& p, const XY& a, const XY& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
    const double dx = p.x - (a.x + t * vx), dy = p.y - (a.y + t * vy);
    return std::hypot(dx, dy);
}

inline double point_polyline_distance(const XY& p, const std::vector<XY>& poly) {
    if (poly.empty()) return std::numeric_limits<double>::infinity();
    if (poly.size() == 1) return std::hypot(p.x - poly[0].x, p.y - poly[0].y);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
        best = std::min(best, point_segment_distance(p, poly[i], poly[i + 1]));
    return best;
}

inline std::vector<XY> frontier_polyline(const ifc::RegionBoundary& rb) {
    std::vector<XY> out;
    out.reserve(rb.points.size());
    for (const ifc::RegionPoint& p : rb.points) out.push_back({p.rates.r1, p.rates.r2});
    return out;
}

inline double hausdorff_distance(const std::vector<XY>& a, const std::vector<XY>& b) {
    double worst = 0.0;
    for (const XY& p : a) worst = std::max(worst, point_polyline_distance(p, b));
    for (const XY& p : b) worst = std::max(worst, point_polyline_distance(p, a));
    return worst;
}

} // namespace ifc_test
