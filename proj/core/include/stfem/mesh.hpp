#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stfem/geometry.hpp"

namespace stfem {

enum class VertexMarker : std::uint8_t {
    interior,
    lateral_boundary, // on d(Omega) x (0,T); constrained
    initial_time,     // on Omega x {0}; constrained
    final_time,       // on Omega x {T}; free
    interface         // snapped onto a moving-interface curve; free
};

bool is_constrained(VertexMarker m);

struct Element {
    std::array<int, 4> v{-1, -1, -1, -1}; // dim+2 entries used
    int region = 0;                       // 1 between the curves, 2 outside; 0 = unclassified
};

// Facet k of an element is the one opposite its local vertex k.
struct FacetRef {
    int element = -1;
    int local_facet = -1;
};

// Simplicial decomposition of the space-time cylinder (0,1)^d x (0,T).
struct SpaceTimeMesh {
    int dim = 1;          // spatial dimension d, 1 or 2
    double horizon = 1.0; // final time T
    std::vector<Point> vertices;
    std::vector<Element> elements;
    std::vector<VertexMarker> markers;
    std::vector<FacetRef> interface_facets; // facets with every vertex marked interface

    int n_vertices() const { return static_cast<int>(vertices.size()); }
    int n_elements() const { return static_cast<int>(elements.size()); }
    int verts_per_element() const { return dim + 2; }
    double time_of(int v) const { return vertices[static_cast<std::size_t>(v)][dim]; }

    std::array<Point, 4> element_coords(int e) const;
    SimplexGeometry element_geometry(int e) const;
    // Global vertex indices of a facet, sorted ascending.
    std::array<int, 3> facet_vertices(const FacetRef& f) const;
};

// A pair of non-crossing moving-interface curves x = L1(t), x = L2(t)
// inside (0,1), d = 1 only.
struct InterfaceCurves {
    std::function<double(double)> l1;
    std::function<double(double)> l2;
    std::function<double(double)> shift; // w(t), time integral of the interface velocity
};

struct ValidationReport {
    bool orientation_ok = false;
    bool conformity_ok = false;
    double min_measure = 0;
    double max_measure = 0;
    double total_measure = 0;
    double min_diameter = 0;
    double max_diameter = 0;
    double quasi_uniformity = 0;    // max diameter / min diameter
    double interface_exactness = 0; // max over interface vertices of |x - L_i(t)|
    std::vector<std::string> issues;

    bool ok() const { return orientation_ok && conformity_ok && issues.empty(); }
};

// Tensor grid of (0,1) x (0,horizon) with N intervals per direction, interface
// nodes snapped onto both curves at every time level and cell diagonals chosen
// so the discrete interface is a chain of element edges. Elements come back
// classified and consistently oriented.
SpaceTimeMesh generate_fitted_mesh_1d(int n, const InterfaceCurves& curves, double horizon);

// Plain uniform triangulation of (0,1) x (0,horizon), no interface, region 2.
SpaceTimeMesh tensor_grid_1d(int n, double horizon);

// Kuhn subdivision of (0,1)^3 into 6*N^3 congruent tetrahedra, region 2.
SpaceTimeMesh kuhn_cube_mesh(int n);

// Label every element by the side of the discrete interface chains its
// centroid falls on. Idempotent; throws if a centroid sits on a chain.
void classify_elements(SpaceTimeMesh& mesh, const InterfaceCurves& curves);

ValidationReport validate(const SpaceTimeMesh& mesh);
ValidationReport validate(const SpaceTimeMesh& mesh, const InterfaceCurves& curves);

// Max element diameter. Throws on an empty mesh.
double mesh_size(const SpaceTimeMesh& mesh);

// Piecewise-linear interface chain (t, x) recovered from mesh vertices lying
// exactly on curve `which` (1 or 2), sorted by t.
std::vector<std::array<double, 2>> interface_chain(const SpaceTimeMesh& mesh,
                                                   const InterfaceCurves& curves, int which);

// Max over interface facets of the midpoint distance to the nearest analytic
// curve; the discrete interface resolves the exact one to second order.
double interface_deviation(const SpaceTimeMesh& mesh, const InterfaceCurves& curves);

} // namespace stfem
