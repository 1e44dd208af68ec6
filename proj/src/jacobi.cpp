#include "bures/jacobi.hpp"

#include <cmath>
#include <string>

#include "bures/sylvester.hpp"

namespace bures {

namespace {

SymmetricTangent project_normal(const SPDMatrix& base, const SymmetricTangent& velocity,
                                const SymmetricTangent& seed) {
    const double vv = inner(base, velocity, velocity);
    if (vv <= 0.0) {
        return seed;  // zero velocity: every seed is normal
    }
    const double coeff = inner(base, velocity, seed) / vv;
    return SymmetricTangent(seed.entries() - coeff * velocity.entries());
}

void require_inside(const Extension& eps, double t, const char* who) {
    if (t < 0.0 || !eps.contains(t)) {
        if (eps.is_bounded() && t >= 0.0) {
            throw BoundaryError(std::string(who) + ": t = " + std::to_string(t) +
                                    " outside [0, eps_max)",
                                eps.value());
        }
        throw RangeError(std::string(who) + ": t = " + std::to_string(t) + " negative");
    }
}

}  // namespace

JacobiSpec::JacobiSpec(SPDMatrix base, SymmetricTangent velocity,
                       SymmetricTangent seed_derivative)
    : base_(std::move(base)),
      velocity_(std::move(velocity)),
      seed_(project_normal(base_, velocity_, seed_derivative)),
      t_max_(max_extension(base_, velocity_)) {
    if (velocity_.dim() != base_.dim() || seed_.dim() != base_.dim()) {
        throw DimensionError("JacobiSpec: dimensions differ");
    }
}

SymmetricTangent jacobi_field(const JacobiSpec& spec, double t) {
    require_inside(spec.t_max(), t, "jacobi_field");
    const SPDMatrix& a = spec.base();
    const Matrix gx = gamma(a, spec.velocity()).value.entries();
    const Matrix gy = gamma(a, spec.seed_derivative()).value.entries();
    const Matrix& p = a.entries();
    return SymmetricTangent(t * spec.seed_derivative().entries() +
                            t * t * (gx * p * gy + gy * p * gx));
}

SymmetricTangent variation_oracle(const JacobiSpec& spec, double t, double h) {
    const Matrix forward_dir =
        t * (spec.velocity().entries() + h * spec.seed_derivative().entries());
    const Matrix backward_dir =
        t * (spec.velocity().entries() - h * spec.seed_derivative().entries());
    const SPDMatrix plus = exp_map(spec.base(), SymmetricTangent(forward_dir));
    const SPDMatrix minus = exp_map(spec.base(), SymmetricTangent(backward_dir));
    return SymmetricTangent((plus.entries() - minus.entries()) / (2.0 * h));
}

double min_jacobi_norm(const JacobiSpec& spec, std::span<const double> t_grid) {
    double best = std::numeric_limits<double>::max();
    for (double t : t_grid) {
        require_inside(spec.t_max(), t, "min_jacobi_norm");
        if (t <= 0.0) {
            throw RangeError("min_jacobi_norm: grid point t = " + std::to_string(t) +
                             " not strictly positive");
        }
        const SPDMatrix point = geodesic_ivp(spec.base(), spec.velocity(), t);
        const double value = norm(point, jacobi_field(spec, t)) / t;
        best = std::min(best, value);
    }
    return best;
}

}  // namespace bures
