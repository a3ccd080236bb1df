#pragma once

#include <array>
#include <vector>

namespace stfem {

// Symmetric quadrature on the reference (d+1)-simplex in barycentric
// coordinates. Weights sum to one; the element measure is applied at the
// use site. Supported: dim=1 (triangle) degrees {2, 5}, dim=2 (tetrahedron)
// degrees {2, 4}.
struct QuadratureRule {
    int dim = 1;    // spatial dimension d; points have dim+2 barycentric coords
    int degree = 0; // guaranteed polynomial exactness
    std::vector<std::array<double, 4>> points;
    std::vector<double> weights;

    int n_points() const { return static_cast<int>(points.size()); }
};

QuadratureRule quadrature(int dim, int degree);

} // namespace stfem
