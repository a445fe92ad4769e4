// Umbrella header: the complete mlfrac library.
//
// Layering (each header includes everything beneath it):
//   core          errors, policies, grids, Kahan summation
//   gamma         log-gamma, signed gamma, reciprocal gamma
//   special       three-parameter Mittag-Leffler evaluation
//   mellin_barnes Mellin-Barnes integrands, contour/residue evaluation,
//                 Levy-structure detection, strip/attach
//   densities     gamma / generalized-ML / generalized-gamma / Weibull /
//                 Levy densities, transforms, limit studies, pathway ratios
//   frac          Riemann-Liouville integral, relaxation-equation solvers,
//                 solution catalog, residual checks
//   lift          the finite-index transform between ordinary space and
//                 alpha-level space, its limit studies and correspondence
//   mb_json       JSON (de)serialization of Mellin integrands

#pragma once

#include "mlfrac/core.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/special.hpp"
#include "mlfrac/mellin_barnes.hpp"
#include "mlfrac/densities.hpp"
#include "mlfrac/frac.hpp"
#include "mlfrac/lift.hpp"
#include "mlfrac/mb_json.hpp"
