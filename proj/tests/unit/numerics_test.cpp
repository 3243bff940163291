#include <gtest/gtest.h>

#include <cmath>

#include "core/error.hpp"
#include "core/numerics.hpp"

namespace nm = compdesign::numerics;
using compdesign::Error;
using compdesign::ErrorKind;

namespace {

// Bisection on erfc; slow but independent of the library's rational
// approximation.
double quantile_by_bisection(double p) {
    double lo = -40.0;
    double hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (0.5 * std::erfc(-mid / std::sqrt(2.0)) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

nm::QuadratureSpec exact_lower(int n) { return {n, 0.0}; }

}  // namespace

TEST(Integrate, PolynomialIsExact) {
    EXPECT_NEAR(nm::integrate([](double x) { return x * x; }, 0.0, 1.0, exact_lower(1000)), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(nm::integrate([](double x) { return x * x; }, 0.0, 1.0), 1.0 / 3.0, 1e-9);
}

TEST(Integrate, ConstantOverWideInterval) {
    EXPECT_NEAR(nm::integrate([](double) { return 1.0; }, 0.0, 4.0, exact_lower(1000)), 4.0, 1e-12);
}

TEST(Integrate, ExponentialMatchesClosedForm) {
    EXPECT_NEAR(nm::integrate([](double x) { return std::exp(x); }, 0.0, 1.0), std::exp(1.0) - 1.0, 1e-8);
}

TEST(Integrate, OddSubdivisionCountIsRoundedUp) {
    const double v = nm::integrate([](double x) { return x * x * x; }, 0.0, 2.0, exact_lower(17));
    EXPECT_NEAR(v, 4.0, 1e-12);
}

TEST(Integrate, Linearity) {
    auto f = [](double x) { return std::sin(3.0 * x); };
    auto g = [](double x) { return std::exp(-x * x); };
    const double lhs = nm::integrate([&](double x) { return 2.5 * f(x) - 0.7 * g(x); }, 0.0, 2.0);
    const double rhs = 2.5 * nm::integrate(f, 0.0, 2.0) - 0.7 * nm::integrate(g, 0.0, 2.0);
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::abs(rhs));
}

TEST(Integrate, AdditiveOverAdjacentIntervals) {
    auto f = [](double x) { return std::cos(x) + x; };
    const auto spec = exact_lower(1000);
    const double whole = nm::integrate(f, 0.0, 3.0, spec);
    const double parts = nm::integrate(f, 0.0, 1.2, spec) + nm::integrate(f, 1.2, 3.0, spec);
    EXPECT_NEAR(whole, parts, 1e-9 * std::abs(whole));
}

TEST(Integrate, RefinementConverges) {
    auto f = [](double x) { return std::log1p(x) * std::exp(-x); };
    const double coarse = nm::integrate(f, 0.0, 5.0, exact_lower(1000));
    const double fine = nm::integrate(f, 0.0, 5.0, exact_lower(2000));
    EXPECT_NEAR(coarse, fine, 1e-10);
}

TEST(Integrate, LowerOffsetTamesSingularity) {
    // integral of x^(-1/2) on [0,1] is 2
    const double v = nm::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {4000, 1e-6});
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 1.9);
}

TEST(Integrate, GradedSubstitutionAbsorbsSingularity) {
    // integral of 0.5 x^(-1/2) on [0,1] is 1 exactly
    const double v = nm::integrate_graded([](double x) { return 0.5 / std::sqrt(x); }, 1.0, 2.0, {1000, 1e-9});
    EXPECT_NEAR(v, 1.0, 1e-10);
}

TEST(Integrate, NonFiniteValueNamesAbscissa) {
    try {
        nm::integrate([](double x) { return x > 0.5 ? NAN : 1.0; }, 0.0, 1.0);
        FAIL() << "expected an evaluation error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Evaluation);
        EXPECT_NE(std::string(e.what()).find("0.50"), std::string::npos) << e.what();
    }
}

TEST(Integrate, RejectsEmptyInterval) {
    EXPECT_THROW(nm::integrate([](double) { return 1.0; }, 1.0, 1.0), Error);
}

TEST(QuadratureSpec, Validation) {
    EXPECT_THROW((nm::QuadratureSpec{15, 1e-6}.validate()), Error);
    EXPECT_THROW((nm::QuadratureSpec{1000, 0.01}.validate()), Error);
    EXPECT_THROW((nm::QuadratureSpec{1000, -1e-9}.validate()), Error);
    EXPECT_NO_THROW((nm::QuadratureSpec{16, 0.0}.validate()));
}

TEST(FindRoot, SquareRootOfTwo) {
    EXPECT_NEAR(nm::find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0), std::sqrt(2.0), 1e-8);
}

TEST(FindRoot, RootAtBracketMidpoint) {
    EXPECT_NEAR(nm::find_root([](double x) { return x; }, -1.0, 1.0), 0.0, 1e-10);
}

TEST(FindRoot, EulerNumber) {
    EXPECT_NEAR(nm::find_root([](double x) { return std::log(x) - 1.0; }, 1.0, 10.0), std::exp(1.0), 1e-8);
}

TEST(FindRoot, RootOnBracketEndpoint) {
    EXPECT_DOUBLE_EQ(nm::find_root([](double x) { return x - 3.0; }, 3.0, 5.0), 3.0);
}

TEST(FindRoot, SatisfiesToleranceOnAssortedBrackets) {
    const double tol = 1e-10;
    auto check = [&](const nm::RealFunction& f, double lo, double hi) {
        const double x = nm::find_root(f, lo, hi, tol);
        EXPECT_LE(std::abs(f(x)), 1e-6) << "x=" << x;
        EXPECT_GE(x, lo);
        EXPECT_LE(x, hi);
    };
    check([](double x) { return std::cos(x) - x; }, 0.0, 1.0);
    check([](double x) { return std::pow(x, 9) - 1e-3; }, 0.0, 2.0);
    check([](double x) { return std::tanh(50.0 * (x - 0.3)); }, -1.0, 1.0);
    check([](double x) { return std::exp(x) - 1e6; }, 0.0, 30.0);
}

TEST(FindRoot, NoSignChangeIsBracketingError) {
    try {
        nm::find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Bracketing);
    }
}

TEST(NormalQuantile, TableValues) {
    EXPECT_NEAR(nm::normal_quantile(0.975), 1.959964, 1e-6);
    EXPECT_NEAR(nm::normal_quantile(0.8), 0.841621, 1e-6);
    EXPECT_DOUBLE_EQ(nm::normal_quantile(0.5), 0.0);
}

TEST(NormalQuantile, AgreesWithBisectionOracle) {
    for (double p : {1e-12, 1e-8, 1e-4, 0.01, 0.025, 0.1, 0.3, 0.45, 0.55, 0.7, 0.9, 0.99, 0.9999, 1 - 1e-8}) {
        EXPECT_NEAR(nm::normal_quantile(p), quantile_by_bisection(p), 1e-9) << "p=" << p;
    }
}

TEST(NormalQuantile, Antisymmetry) {
    for (double p = 0.001; p < 0.5; p += 0.0137) {
        EXPECT_NEAR(nm::normal_quantile(p), -nm::normal_quantile(1.0 - p), 1e-12) << "p=" << p;
    }
}

TEST(NormalQuantile, RoundTripsThroughCdf) {
    // Above z = 5 the upper tail 1 - p is below 3e-7 and its rounding dominates.
    for (double z = -8.0; z <= 5.0; z += 0.25) {
        EXPECT_NEAR(nm::normal_quantile(nm::normal_cdf(z)), z, 1e-9) << "z=" << z;
    }
}

TEST(NormalQuantile, RejectsBoundary) {
    EXPECT_THROW(nm::normal_quantile(0.0), Error);
    EXPECT_THROW(nm::normal_quantile(1.0), Error);
    EXPECT_THROW(nm::normal_quantile(-0.2), Error);
}
