#pragma once

#include <array>

namespace stfem {

// A point in space-time: entries [0..dim-1] are spatial, entry [dim] is time.
using Point = std::array<double, 3>;

// Geometry of a single (d+1)-simplex embedded in R^{d+1}, d = 1 or 2.
// P1 basis gradients are constant per simplex and carried here in full
// space-time form; callers slice off the spatial part or the time component.
struct SimplexGeometry {
    int dim = 1;               // spatial dimension d
    double signed_measure = 0; // positive for consistently oriented elements
    double measure = 0;
    double diameter = 0;       // max pairwise vertex distance
    Point centroid{};
    std::array<Point, 4> grad{}; // grad[i][c]: d/dx_c of basis i, c <= dim
};

SimplexGeometry simplex_geometry(int dim, const std::array<Point, 4>& verts);

} // namespace stfem
