#pragma once

#include <array>
#include <functional>
#include <vector>

#include "stfem/mesh.hpp"
#include "stfem/problems.hpp"
#include "stfem/quadrature.hpp"

namespace stfem {

// Local P1 contributions of one element: time-derivative, advection and
// diffusion terms combined in `a`, load in `b`.
struct ElementMatrices {
    std::array<std::array<double, 4>, 4> a{};
    std::array<double, 4> b{};
};

struct CsrMatrix {
    int n = 0;
    std::vector<int> row_offsets; // size n+1
    std::vector<int> cols;        // sorted within each row
    std::vector<double> vals;

    std::vector<double> multiply(const std::vector<double>& x) const;
    double max_abs() const;
    // Structural validity: monotone offsets, sorted in-range columns.
    bool structurally_valid() const;
};

// Reduced linear system over the free vertices (markers other than
// lateral_boundary / initial_time).
struct SparseSystem {
    CsrMatrix matrix;
    std::vector<double> rhs;
    std::vector<int> vertex_to_eq; // -1 for constrained vertices
    std::vector<int> eq_to_vertex;

    int n_free() const { return matrix.n; }
    // Scatter a free-dof vector to all vertices, zero on constrained ones.
    std::vector<double> expand(const std::vector<double>& free_values) const;
    // Gather a full nodal vector down to the free dofs.
    std::vector<double> restrict_free(const std::vector<double>& nodal) const;
};

using VelocityField = std::function<std::array<double, 2>(double, double, double)>;

// A[i][j] = int_K dphi_j/dt phi_i + (v . grad phi_j) phi_i + kappa grad phi_j . grad phi_i.
// Time and diffusion terms are closed-form; advection uses the rule (exact for
// constant v). Throws on degenerate elements.
ElementMatrices element_matrices(int dim, const std::array<Point, 4>& verts, double kappa,
                                 const VelocityField& velocity, const QuadratureRule& quad);

std::array<double, 4> element_load(int dim, const std::array<Point, 4>& verts,
                                   const std::function<double(double, double, double)>& f,
                                   const QuadratureRule& quad);

// Global Galerkin system with kappa_h constant per element (region label) and
// rows/columns of constrained vertices eliminated. The source branch at each
// quadrature point follows the analytic region; a problem without a source
// yields a zero right-hand side.
SparseSystem assemble(const SpaceTimeMesh& mesh, const ProblemSpec& problem,
                      const QuadratureRule& system_quad, const QuadratureRule& load_quad);

// Nodal values of the exact solution at every vertex.
std::vector<double> interpolate_exact(const SpaceTimeMesh& mesh, const ProblemSpec& problem);

} // namespace stfem
