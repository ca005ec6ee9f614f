#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dualif/errors.hpp"

namespace dualif {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) integral of `f` over [a, b], a <= b.
/// Throws QuadratureError when the tolerance cannot be met within
/// spec.max_subdivisions panel splits.
double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Integral over [points.front(), points.back()] with forced panel breaks at
/// each interior point (used to isolate kinks of |u|-type integrands).
double integrate_piecewise(const Integrand& f, const std::vector<double>& points,
                           const QuadratureSpec& spec = {});

/// Improper integral of `f` over [0, +inf), computed after the substitution
/// u = t/(1-t). Convergence is classified from the growth of partial integrals
/// at the truncations u = 1e3, 1e6, 1e9; a convergent tail is extrapolated
/// geometrically. Throws DivergentError(side_label) when the increments do
/// not decay.
double integrate_to_infinity(const Integrand& f, const QuadratureSpec& spec,
                             const std::string& side_label);

/// Integral of `s` over (0, b] where s may have an integrable singularity at
/// 0. Dyadic panels shrink toward the endpoint; the remainder is extrapolated
/// from the geometric decay of panel contributions. Returns std::nullopt when
/// the panel contributions do not decay (divergent integral).
std::optional<double> singular_endpoint_integral(const Integrand& s, double b,
                                                 const QuadratureSpec& spec = {});

}  // namespace dualif
