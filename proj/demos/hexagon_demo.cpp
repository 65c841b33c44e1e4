// Walkthrough: three antipodal unit pairs at consecutive pi/3 angles.
// Computes the min-max selection value of the family, the circumradius of
// the Minkowski sum of the corresponding segments, and the containment
// certificate of one segment.

#include <cmath>
#include <cstdio>

#include "radii/radii.hpp"

using namespace radii;

int main() {
    std::vector<BalancedSet> sets;
    std::vector<PointBody> segments;
    for (int i = 1; i <= 3; ++i) {
        const Vec u{std::cos(i * M_PI / 3), std::sin(i * M_PI / 3)};
        sets.emplace_back(2, 1.0, std::vector<Vec>{u, neg(u)}, Vec{0.5, 0.5});
        segments.push_back(PointBody(2, {u, neg(u)}));
    }

    const MinmaxResult mm = minmax_center(sets);
    std::printf("min-max selection value: %.12g (center %.3g, %.3g)\n", mm.value, mm.c_star[0],
                mm.c_star[1]);
    std::printf("hexagon equality configuration: %s\n",
                detect_hexagon_equality(sets) ? "yes" : "no");

    const PointBody sum = minkowski_sum(segments);
    const CircumResult r = circumradius(sum, EuclideanBall{});
    std::printf("circumradius of the summed segments: %.12g\n", r.radius);

    const CircumResult seg = circumradius(segments[0], EuclideanBall{});
    const Certificate cert = extract_certificate(segments[0], EuclideanBall{}, seg);
    std::printf("segment certificate: %zu touching points, balance residual %.2e\n",
                cert.touch_points.size(),
                verify_certificate(segments[0], EuclideanBall{}, seg, cert).balance_norm);
    return 0;
}
