#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stfem/assembly.hpp"
#include "stfem/mesh.hpp"
#include "stfem/problems.hpp"

namespace stfem {

// Space-time L2 norm of grad(u - u_h) (spatial gradient, unweighted). The
// exact-gradient branch at each quadrature point follows the analytic region.
double y_norm_error(const SpaceTimeMesh& mesh, const std::vector<double>& uh,
                    const ProblemSpec& problem, const QuadratureRule& quad);

// kappa_h-weighted spatial-gradient seminorm, exact for P1.
double energy_seminorm(const SpaceTimeMesh& mesh, const std::vector<double>& v, double kappa1,
                       double kappa2);

// int_{Omega x {T}} v^2, by exact edge/face quadrature on the final-time facets.
double final_time_l2_sq(const SpaceTimeMesh& mesh, const std::vector<double>& v);

// order[k] = log(e[k]/e[k+1]) / log(h[k]/h[k+1]); hs must decrease strictly.
std::vector<double> eoc(const std::vector<double>& errors, const std::vector<double>& hs);

struct CoercivityReport {
    // max |y'Ay - |||y|||^2 - 0.5*||y(.,T)||^2| / y'Ay over the trials;
    // vanishes (to rounding) for constant-velocity problems.
    double max_identity_violation = 0;
    // min (y'Ay - |||y|||^2) / y'Ay; nonnegative up to quadrature error.
    double min_margin = 0;
    int trials = 0;
};

CoercivityReport coercivity_probe(const SpaceTimeMesh& mesh, const ProblemSpec& problem,
                                  int trials, unsigned seed);

struct ConvergenceRow {
    int n = 0;
    int dof = 0;
    double h = 0;
    double error = 0;
    std::optional<double> order; // absent on the first row
};

struct ConvergenceReport {
    std::string problem;
    int system_quad_degree = 2;
    int load_quad_degree = 0;
    int error_quad_degree = 0;
    std::string timestamp;
    std::vector<ConvergenceRow> rows;

    void compute_orders();
    // CSV schema: N,dof,h,error,order with an empty order cell on row one.
    void write_csv(std::ostream& os) const;
};

} // namespace stfem
