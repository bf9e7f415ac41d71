#pragma once

#include "helisurf/surface.hpp"

namespace helisurf {

/// Second-order central differencing configuration. Positions are evaluated
/// in extended precision internally so that second-difference roundoff stays
/// below the comparison tolerances at the default step.
struct FDConfig {
    double step = 1e-5;  // must satisfy 0 < step < 1e-2
};

/// Central-difference first and second partials of the parametrization.
/// Requires s +- 2*step inside the profile domain. Independent of the
/// analytic jet: only positions are evaluated.
SurfaceJet fd_jet(const HelicoidalSurface& surface, double s, double t,
                  const FDConfig& cfg = {});

/// Mean curvature assembled from the finite-difference jet and the
/// cross-product normal: H = (eG - 2fF + gE) / (EG - F^2). Throws
/// RegularityError on a degenerate stencil.
double fd_mean_curvature(const HelicoidalSurface& surface, double s, double t,
                         const FDConfig& cfg = {});

}  // namespace helisurf
