// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace compdesign::numerics {

using RealFunction = std::function<double(double)>;

/// Settings for composite Simpson quadrature.
///
/// `subdivisions` is the number of panels on the uniform grid (rounded up to
/// an even count). The first node is evaluated at `a + lower_epsilon*(b-a)`
/// rather than at `a`, which keeps integrands with an integrable singularity
/// at the lower limit (Weibull hazards with shape < 1) finite.
struct QuadratureSpec {
    int subdivisions = 1000;
    double lower_epsilon = 1e-6;

    void validate() const;
};

/// Composite Simpson approximation of the integral of `f` over [a, b].
/// Throws Error(Evaluation) naming the abscissa if `f` returns a non-finite
/// value, Error(Domain) if a >= b.
double integrate(const RealFunction& f, double a, double b, const QuadratureSpec& spec = {});

/// Integral over [0, horizon] after the substitution t = horizon * s^grading.
/// With grading = 1 this is plain `integrate`; larger values cluster nodes near
/// t = 0 and absorb t^(k-1) singularities with k >= 1/grading.
double integrate_graded(const RealFunction& f, double horizon, double grading,
                        const QuadratureSpec& spec = {});

/// Brent's method on a sign-changing bracket. Returns x with |f(x)| <= tol or
/// a final bracket narrower than tol. Throws Error(Bracketing) when
/// f(lo) and f(hi) share a sign.
double find_root(const RealFunction& f, double lo, double hi, double tol = 1e-10,
                 int max_iterations = 200);

/// Standard normal distribution function.
double normal_cdf(double z);

/// Inverse of the standard normal distribution function, |error| < 1e-12.
double normal_quantile(double p);

}  // namespace compdesign::numerics
