#pragma once

#include <string>
#include <utility>
#include <vector>

#include "taildep/spectral.hpp"

namespace taildep {

using Theta = std::vector<double>;

enum class EstimateStatus { OK, NOT_IN_RANGE, AMBIGUOUS };

struct InvertResult {
    EstimateStatus status = EstimateStatus::NOT_IN_RANGE;
    Theta theta;         // valid when status == OK
    std::string detail;  // carries the offending moments / roots otherwise
};

// A parametric family of stable tail dependence functions. For theta in the
// open domain and (x,y) in [0,1]^2: max(x,y) <= l <= x+y, 0 <= R <= min(x,y),
// l(tx,ty) = t l(x,y). partials() are the right-hand partial derivatives
// of R.
class ModelFamily {
public:
    virtual ~ModelFamily() = default;

    virtual std::string name() const = 0;
    virtual int p() const = 0;
    virtual bool in_domain(const Theta& theta) const = 0;

    virtual double l(double x, double y, const Theta& theta) const = 0;
    virtual double R(double x, double y, const Theta& theta) const {
        return x + y - l(x, y, theta);
    }
    virtual std::pair<double, double> partials(double x, double y, const Theta& theta) const = 0;

    // Moment map phi(theta) = iint g(x,y) l(x,y;theta) dxdy for the family's
    // paired g, and its inverse on the image of the open domain.
    virtual std::vector<double> phi(const Theta& theta) const = 0;
    virtual InvertResult invert(const std::vector<double>& moments) const = 0;

    // Jacobian d phi / d theta, row-major p x p. Default: central finite
    // differences with step 1e-5 * max(1, |theta_j|).
    virtual std::vector<double> dphi(const Theta& theta) const;

    // Gradient of theta -> l(x,y;theta), length p. Default: central FD.
    virtual std::vector<double> dl_dtheta(double x, double y, const Theta& theta) const;

    virtual bool has_closed_form_inverse() const { return false; }
    virtual bool has_spectral_atoms() const { return false; }
    virtual SpectralMeasure spectral(const Theta& theta) const;
};

const char* to_string(EstimateStatus s);

}  // namespace taildep
