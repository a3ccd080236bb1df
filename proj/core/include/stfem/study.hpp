#pragma once

#include <vector>

#include "stfem/analysis.hpp"
#include "stfem/mesh.hpp"
#include "stfem/problems.hpp"
#include "stfem/solver.hpp"

namespace stfem {

struct StudyOptions {
    SolveMethod method = SolveMethod::direct_lu;
    int error_quad_degree = 0; // 0 = default: 5 on triangles, 4 on tetrahedra
    bool zero_source = false;  // replace f by 0 (diagnostic runs)
};

struct LevelResult {
    int n = 0;
    int dof = 0;
    double h = 0;
    double error = 0;        // Y-norm of u - u_h
    double interp_error = 0; // Y-norm of u - I_h u
    double residual = 0;     // solver relative residual
};

int default_error_quad_degree(int dim);

// Fitted (0,1)x(0,T) mesh for d = 1 problems, Kuhn cube for d = 2.
SpaceTimeMesh build_mesh(const ProblemSpec& problem, int n);

// Assemble, solve and measure one refinement level; `nodal_out`, when given,
// receives the full nodal solution.
LevelResult run_level_on_mesh(const ProblemSpec& problem, const SpaceTimeMesh& mesh, int n_label,
                              const StudyOptions& options = {},
                              std::vector<double>* nodal_out = nullptr);
LevelResult run_level(const ProblemSpec& problem, int n, const StudyOptions& options = {});

ConvergenceReport run_convergence(const ProblemSpec& problem, const std::vector<int>& levels,
                                  const StudyOptions& options = {});

} // namespace stfem
