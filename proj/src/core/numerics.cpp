// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/numerics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "core/error.hpp"

namespace compdesign::numerics {

void QuadratureSpec::validate() const {
    if (subdivisions < 16) {
        throw Error(ErrorKind::Validation, "subdivisions", "subdivisions must be at least 16");
    }
    if (!(lower_epsilon >= 0.0 && lower_epsilon < 0.01)) {
        throw Error(ErrorKind::Validation, "lower_epsilon", "lower_epsilon must lie in [0, 0.01)");
    }
}

double integrate(const RealFunction& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (!(a < b)) {
        throw Error(ErrorKind::Domain, "interval", "integration interval must satisfy a < b");
    }
    const int n = spec.subdivisions + (spec.subdivisions % 2);
    const double h = (b - a) / n;
    const double first = a + spec.lower_epsilon * (b - a);

    auto eval = [&](double x) {
        const double y = f(x);
        if (!std::isfinite(y)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "integrand is not finite at x = " << x;
            throw Error(ErrorKind::Evaluation, "integrand", msg.str());
        }
        return y;
    };

    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < n; ++i) {
        const double y = eval(a + i * h);
        (i % 2 ? odd : even) += y;
    }
    return h / 3.0 * (eval(first) + 4.0 * odd + 2.0 * even + eval(b));
}

double integrate_graded(const RealFunction& f, double horizon, double grading,
                        const QuadratureSpec& spec) {
    if (!(horizon > 0.0)) {
        throw Error(ErrorKind::Domain, "horizon", "integration horizon must be positive");
    }
    if (!(grading >= 1.0)) {
        throw Error(ErrorKind::Domain, "grading", "grading exponent must be >= 1");
    }
    if (grading == 1.0) {
        return integrate(f, 0.0, horizon, spec);
    }
    auto mapped = [&](double s) {
        const double t = horizon * std::pow(s, grading);
        return f(t) * grading * horizon * std::pow(s, grading - 1.0);
    };
    return integrate(mapped, 0.0, 1.0, spec);
}

double find_root(const RealFunction& f, double lo, double hi, double tol, int max_iterations) {
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::Domain, "tol", "root tolerance must be positive");
    }
    double a = lo;
    double b = hi;
    double fa = f(a);
    double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb)) {
        throw Error(ErrorKind::Evaluation, "bracket", "function is not finite at the bracket ends");
    }
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream msg;
        msg << "no sign change on [" << lo << ", " << hi << "]";
        throw Error(ErrorKind::Bracketing, "bracket", msg.str());
    }

    double c = b;
    double fc = fb;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < max_iterations; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double half_tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
        const double m = 0.5 * (c - b);
        if (std::abs(fb) <= tol || std::abs(m) <= half_tol) {
            return b;
        }
        if (std::abs(e) >= half_tol && std::abs(fa) > std::abs(fb)) {
            // Secant or inverse quadratic interpolation step.
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            } else {
                p = -p;
            }
            if (2.0 * p < std::min(3.0 * m * q - std::abs(half_tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > half_tol) ? d : (m > 0.0 ? half_tol : -half_tol);
        fb = f(b);
        if (!std::isfinite(fb)) {
            throw Error(ErrorKind::Evaluation, "root", "function is not finite inside the bracket");
        }
    }
    return b;
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

namespace {

// Wichura's AS 241 (PPND16).
double ppnd16(double p) {
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r + 67265.770927008700853) * r +
                    45921.953931549871457) * r + 13731.693765509461125) * r + 1971.5909503065514427) * r +
                 133.14166789178437745) * r + 3.387132872796366608) /
               (((((((r * 5226.495278852545925 + 28729.085735721942674) * r + 39307.89580009271061) * r +
                    21213.794301586595867) * r + 5394.1960214247511077) * r + 687.1870074920579083) * r +
                 42.313330701600911252) * r + 1.0);
    }
    double r = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r + 0.24178072517745061177) * r +
                   1.27045825245236838258) * r + 3.64784832476320460504) * r + 5.7694972214606914055) * r +
                4.6303378461565452959) * r + 1.42343711074968357734) /
              (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r + 0.0151986665636164571966) * r +
                   0.14810397642748007459) * r + 0.68976733498510000455) * r + 1.6763848301838038494) * r +
                2.05319162663775882187) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r + 0.0012426609473880784386) * r +
                   0.026532189526576123093) * r + 0.29656057182850489123) * r + 1.7848265399172913358) * r +
                5.4637849111641143699) * r + 6.6579046435011037772) /
              (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r + 1.8463183175100546818e-5) * r +
                   7.868691311456132591e-4) * r + 0.0148753612908506148525) * r + 0.13692988092273580531) * r +
                0.59983220655588793769) * r + 1.0);
    }
    return q < 0.0 ? -val : val;
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorKind::Domain, "p", "normal quantile requires 0 < p < 1");
    }
    double z = ppnd16(p);
    // One Newton step on the distribution function.
    const double density = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
    if (density > 0.0) {
        z -= (normal_cdf(z) - p) / density;
    }
    return z;
}

}  // namespace compdesign::numerics
