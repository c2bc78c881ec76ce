// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MPFEEC_SOLVERS_MANUFACTURED_HPP
#define MPFEEC_SOLVERS_MANUFACTURED_HPP

#include "mpfeec/derham/project.hpp"

namespace mpfeec {

/// -Laplace(phi) = f with phi = sin(pi x) sin(pi y), homogeneous on the unit
/// square.
struct PoissonCase {
  ScalarField source;
  ScalarField exact;
};
PoissonCase poisson_sine_case();

/// Time-harmonic Maxwell with E = (0, -cos x sin y) on [0, pi]^2; curl E =
/// sin x sin y vanishes on the boundary, so the natural (no-bc) weak form is
/// consistent. J = -omega^2 E + curl curl E.
struct MaxwellCase {
  VectorField source;
  VectorField exact;
  ScalarField exact_curl;
};
MaxwellCase maxwell_sine_case(double omega);

/// Smooth fields for the weak-operator studies (not in the homogeneous trace
/// spaces).
VectorField weak_div_field();      // u = (cos pix sin piy, sin pix cos piy)
ScalarField weak_div_exact();      // div u = -2 pi sin pix sin piy
ScalarField weak_curl_field();     // f = cos pix cos piy
VectorField weak_curl_exact();     // rot f = (df/dy, -df/dx)

/// Divergence-free rotating Gaussian pulse and its scalar curl.
VectorField gaussian_pulse_e(Vec2 center, double sigma);
ScalarField gaussian_pulse_b(Vec2 center, double sigma);

/// First standing mode of the Dirichlet wave problem on the unit square.
ScalarField standing_mode_phi();

} // namespace mpfeec

#endif
