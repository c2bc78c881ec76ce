// Copyright (c) the mpfeec contributors.
// SPDX-License-Identifier: Apache-2.0

#include "mpfeec/solvers/manufactured.hpp"

#include <cmath>

namespace mpfeec {

PoissonCase poisson_sine_case() {
  PoissonCase c;
  c.exact = [](double x, double y) {
    return std::sin(M_PI * x) * std::sin(M_PI * y);
  };
  c.source = [](double x, double y) {
    return 2.0 * M_PI * M_PI * std::sin(M_PI * x) * std::sin(M_PI * y);
  };
  return c;
}

MaxwellCase maxwell_sine_case(double omega) {
  MaxwellCase c;
  c.exact = [](double x, double y) -> Vec2 {
    return {0.0, -std::cos(x) * std::sin(y)};
  };
  c.exact_curl = [](double x, double y) { return std::sin(x) * std::sin(y); };
  // J = -omega^2 E + curl curl E, curl curl E = (sin x cos y, -cos x sin y).
  c.source = [omega](double x, double y) -> Vec2 {
    const double w2 = omega * omega;
    return {std::sin(x) * std::cos(y), (w2 - 1.0) * std::cos(x) * std::sin(y)};
  };
  return c;
}

VectorField weak_div_field() {
  return [](double x, double y) -> Vec2 {
    return {std::cos(M_PI * x) * std::sin(M_PI * y),
            std::sin(M_PI * x) * std::cos(M_PI * y)};
  };
}

ScalarField weak_div_exact() {
  return [](double x, double y) {
    return -2.0 * M_PI * std::sin(M_PI * x) * std::sin(M_PI * y);
  };
}

ScalarField weak_curl_field() {
  return [](double x, double y) {
    return std::cos(M_PI * x) * std::cos(M_PI * y);
  };
}

VectorField weak_curl_exact() {
  return [](double x, double y) -> Vec2 {
    return {-M_PI * std::cos(M_PI * x) * std::sin(M_PI * y),
            M_PI * std::sin(M_PI * x) * std::cos(M_PI * y)};
  };
}

VectorField gaussian_pulse_e(Vec2 center, double sigma) {
  return [center, sigma](double x, double y) -> Vec2 {
    const double dx = x - center[0], dy = y - center[1];
    const double g = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
    return {dy * g / (sigma * sigma), -dx * g / (sigma * sigma)};
  };
}

ScalarField gaussian_pulse_b(Vec2 center, double sigma) {
  return [center, sigma](double x, double y) {
    const double dx = x - center[0], dy = y - center[1];
    const double r2 = dx * dx + dy * dy;
    const double s2 = sigma * sigma;
    return std::exp(-r2 / (2.0 * s2)) * (r2 - 2.0 * s2) / (s2 * s2);
  };
}

ScalarField standing_mode_phi() {
  return [](double x, double y) {
    return std::sin(M_PI * x) * std::sin(M_PI * y);
  };
}

} // namespace mpfeec
