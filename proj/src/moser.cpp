#include "chromalab/moser.hpp"

#include <cmath>

namespace chromalab {

std::array<Point2, 7> moser_spindle_e2()
{
    const double s3 = std::sqrt(3.0);
    // Tips at distance sqrt(3) from the hinge; rotation with cos(phi) = 5/6
    // puts them at distance 1 from each other.
    const double c = 5.0 / 6.0;
    const double s = std::sqrt(11.0) / 6.0;
    auto rot = [&](Point2 p) { return Point2{c * p.x1 - s * p.x2, s * p.x1 + c * p.x2}; };

    const Point2 a{0.0, 0.0};
    const Point2 b{s3 / 2.0, 0.5};
    const Point2 cc{s3 / 2.0, -0.5};
    const Point2 d{s3, 0.0};
    return {a, b, cc, d, rot(b), rot(cc), rot(d)};
}

} // namespace chromalab
