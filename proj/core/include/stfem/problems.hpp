#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stfem/mesh.hpp"

namespace stfem {

// One instance of the moving-interface advection-diffusion problem
//   du/dt + v . grad(u) - div(kappa grad(u)) = f
// on (0,1)^d x (0,horizon) with homogeneous Dirichlet and initial data.
// Scalar fields take (x, y, t, region); y is ignored for d = 1 and `region`
// selects the branch of piecewise-defined fields (1 between the curves,
// 2 outside). Exact solution and gradient are absent for problems without a
// manufactured solution.
struct ProblemSpec {
    std::string name;
    int dim = 1;
    double horizon = 1.0;
    double kappa1 = 1.0;
    double kappa2 = 1.0;
    std::function<std::array<double, 2>(double x, double y, double t)> velocity;
    std::optional<InterfaceCurves> curves;
    std::function<double(double x, double y, double t, int region)> exact;
    std::function<std::array<double, 2>(double x, double y, double t, int region)> exact_grad;
    std::function<double(double x, double y, double t, int region)> source;
    // Extended-precision exact solution for finite-difference derivative
    // checks; set for every built-in manufactured solution.
    std::function<long double(long double x, long double y, long double t, int region)> exact_hp;

    double kappa(int region) const { return region == 1 ? kappa1 : kappa2; }
    // Side of the analytic curves a point falls on; 2 when there are no curves.
    int analytic_region(double x, double t) const;
};

// Planar interface moving at constant speed 0.1; the exact solution is smooth
// across it.
ProblemSpec example1();

// Sinusoidal interface, v = 0.1*pi*cos(2*pi*t); the exact solution has a
// gradient jump matching the (0.5, 1) diffusion pair.
ProblemSpec example2();

// Rotating-interface coefficient set in d = 2: kappa = (2, 1),
// v = (-2*pi*y, 2*pi*x). No manufactured solution; `source` is left empty and
// must be supplied by the caller together with an imported fitted mesh.
ProblemSpec example3_coefficients();

// Smooth interface-free d = 2 verification problem on the unit cube with a
// divergence-free rotation about (1/2, 1/2).
ProblemSpec smooth_verification_3d();

// Lookup by CLI name: example1, example2, example3, smooth3d.
ProblemSpec problem_by_name(const std::string& name);
std::vector<std::string> problem_names();

// Max |f - (du/dt + v.grad(u) - kappa lap(u))| over `npoints` quasi-random
// interior points, derivatives by Richardson-extrapolated central differences
// of the extended-precision exact solution at base step `step`. Points within
// 4*step of an interface curve are skipped.
double max_source_deviation(const ProblemSpec& problem, int npoints, double step);

// Max |div v| by central differences over quasi-random points.
double max_divergence(const ProblemSpec& problem, int npoints);

struct InterfaceJumps {
    double max_u_jump = 0;    // [u] across the interface
    double max_flux_jump = 0; // [kappa du/dx . n]
};

// Jump magnitudes of the exact solution sampled along both curves.
InterfaceJumps interface_jumps(const ProblemSpec& problem, int npoints);

} // namespace stfem
