#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace taildep {

// Finite measure H on [0,1] given as weighted atoms plus an optional
// density component. A valid spectral measure satisfies
// int w H(dw) = int (1-w) H(dw) = 1, hence total mass 2.
struct SpectralMeasure {
    struct Atom {
        double location;  // in [0,1]
        double mass;      // > 0
    };

    std::vector<Atom> atoms;
    std::function<double(double)> density;  // optional, on (0,1)

    double total_mass() const;
    // (int w H(dw) - 1, int (1-w) H(dw) - 1); density part by quadrature.
    std::pair<double, double> moment_defect() const;
    bool valid(double tol = 1e-12) const;
};

}  // namespace taildep
