#pragma once

#include <functional>

namespace taildep {

// Midpoint tensor rule over an m x m uniform grid of the unit square.
double grid_quadrature(const std::function<double(double, double)>& f, int m);

// Adaptive Gauss-Legendre on [a,b]: GL15 per panel, bisect until the whole
// panel and its two halves agree within the panel's share of abs_tol.
double adaptive_gauss_legendre(const std::function<double(double)>& f,
                               double a, double b, double abs_tol = 1e-10);

}  // namespace taildep
