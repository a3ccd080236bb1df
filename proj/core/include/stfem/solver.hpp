#pragma once

#include <vector>

#include "stfem/assembly.hpp"

namespace stfem {

enum class SolveMethod {
    direct_lu, // sparse LU with partial pivoting (default)
    iterative  // restarted GMRES with incomplete-LU preconditioning
};

struct SolveReport {
    std::vector<double> solution;
    double relative_residual = 0; // ||b - Ax||_2 / ||b||_2, 0 when b = 0
    int iterations = 0;           // 0 for the direct method
    SolveMethod method = SolveMethod::direct_lu;
};

// Solves the reduced system to a relative residual of at most 1e-10;
// deterministic for identical inputs. Throws on singular factorizations and
// on iterative non-convergence.
SolveReport solve(const SparseSystem& system, SolveMethod method = SolveMethod::direct_lu);

} // namespace stfem
