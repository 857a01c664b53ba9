#include "taildep/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace taildep {

double grid_quadrature(const std::function<double(double, double)>& f, int m) {
    if (m < 2) throw std::invalid_argument("grid_quadrature: m must be >= 2");
    const double h = 1.0 / m;
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        const double x = (i + 0.5) * h;
        double row = 0.0;
        for (int j = 0; j < m; ++j) {
            row += f(x, (j + 0.5) * h);
        }
        sum += row;
    }
    return sum * h * h;
}

namespace {

// 15-point Gauss-Legendre nodes (positive half) and weights on [-1,1].
constexpr double kGlx[8] = {
    0.0000000000000000, 0.2011940939974345, 0.3941513470775634,
    0.5709721726085388, 0.7244177313601701, 0.8482065834104272,
    0.9372733924007060, 0.9879925180204854};
constexpr double kGlw[8] = {
    0.2025782419255613, 0.1984314853271116, 0.1861610000155622,
    0.1662692058169939, 0.1395706779261543, 0.1071592204671719,
    0.0703660474881081, 0.0307532419961173};

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = kGlw[0] * f(c);
    for (int i = 1; i < 8; ++i) {
        const double d = h * kGlx[i];
        s += kGlw[i] * (f(c + d) + f(c - d));
    }
    return s * h;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = gl15(f, a, m);
    const double right = gl15(f, m, b);
    const double two = left + right;
    if (std::abs(two - whole) <= tol || depth >= 40) return two;
    return adapt(f, a, m, left, 0.5 * tol, depth + 1) +
           adapt(f, m, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_gauss_legendre(const std::function<double(double)>& f,
                               double a, double b, double abs_tol) {
    if (!(b > a)) return 0.0;
    return adapt(f, a, b, gl15(f, a, b), abs_tol, 0);
}

}  // namespace taildep
