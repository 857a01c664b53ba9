#include "taildep/spectral.hpp"

#include <cmath>

#include "taildep/quadrature.hpp"

namespace taildep {

double SpectralMeasure::total_mass() const {
    double m = 0.0;
    for (const auto& a : atoms) m += a.mass;
    if (density) {
        m += adaptive_gauss_legendre([&](double w) { return density(w); }, 0.0, 1.0, 1e-12);
    }
    return m;
}

std::pair<double, double> SpectralMeasure::moment_defect() const {
    double mw = 0.0, mc = 0.0;
    for (const auto& a : atoms) {
        mw += a.location * a.mass;
        mc += (1.0 - a.location) * a.mass;
    }
    if (density) {
        mw += adaptive_gauss_legendre([&](double w) { return w * density(w); }, 0.0, 1.0, 1e-12);
        mc += adaptive_gauss_legendre([&](double w) { return (1.0 - w) * density(w); }, 0.0, 1.0, 1e-12);
    }
    return {mw - 1.0, mc - 1.0};
}

bool SpectralMeasure::valid(double tol) const {
    for (const auto& a : atoms) {
        if (!(a.location >= 0.0 && a.location <= 1.0) || !(a.mass > 0.0)) return false;
    }
    const auto [dw, dc] = moment_defect();
    return std::abs(dw) <= tol && std::abs(dc) <= tol;
}

}  // namespace taildep
