#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/binary.hpp"
#include "core/error.hpp"

using namespace compdesign;
using namespace compdesign::binary;

namespace {

struct TableBounds {
    double lo;
    double hi;
};

// Extreme joint cells over all 2x2 tables with the given margins. The feasible
// set is a segment in p11, so the extremes sit where some cell is empty.
TableBounds enumerate_p11(double p1, double p2) {
    const double candidates[] = {0.0, p1, p2, p1 + p2 - 1.0};
    TableBounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (double p11 : candidates) {
        const double p10 = p1 - p11;
        const double p01 = p2 - p11;
        const double p00 = 1.0 - p11 - p10 - p01;
        if (p11 >= -1e-15 && p10 >= -1e-15 && p01 >= -1e-15 && p00 >= -1e-15) {
            b.lo = std::min(b.lo, p11);
            b.hi = std::max(b.hi, p11);
        }
    }
    return b;
}

double pearson_from_p11(double p1, double p2, double p11) {
    return (p11 - p1 * p2) / std::sqrt(p1 * (1 - p1) * p2 * (1 - p2));
}

BinaryDesign design(double p1, double p2, double e1, double e2, EffectMeasure m1, EffectMeasure m2, EffectMeasure mce,
                    double rho) {
    BinaryDesign d;
    d.p0_e1 = p1;
    d.p0_e2 = p2;
    d.eff_e1 = e1;
    d.eff_e2 = e2;
    d.effm_e1 = m1;
    d.effm_e2 = m2;
    d.effm_ce = mce;
    d.rho = rho;
    return d;
}

}  // namespace

TEST(CorrBounds, SymmetricHalf) {
    EXPECT_NEAR(lower_corr(0.5, 0.5), -1.0, 1e-15);
    EXPECT_NEAR(upper_corr(0.5, 0.5), 1.0, 1e-15);
}

TEST(CorrBounds, WorkedValues) {
    EXPECT_NEAR(upper_corr(0.3, 0.6), (0.3 - 0.18) / std::sqrt(0.3 * 0.7 * 0.6 * 0.4), 1e-15);
    EXPECT_NEAR(upper_corr(0.3, 0.6), 0.5345, 1e-4);
    EXPECT_NEAR(lower_corr(0.2, 0.9), -0.6667, 1e-4);
}

TEST(CorrBounds, MatchTableEnumeration) {
    for (int i = 1; i <= 19; ++i) {
        for (int j = 1; j <= 19; ++j) {
            const double p1 = i / 20.0;
            const double p2 = j / 20.0;
            const auto b = enumerate_p11(p1, p2);
            EXPECT_NEAR(lower_corr(p1, p2), pearson_from_p11(p1, p2, b.lo), 1e-12);
            EXPECT_NEAR(upper_corr(p1, p2), pearson_from_p11(p1, p2, b.hi), 1e-12);
            EXPECT_LE(lower_corr(p1, p2), 0.0);
            EXPECT_GE(upper_corr(p1, p2), 0.0);
        }
    }
}

TEST(CorrBounds, RejectBoundaryProbabilities) {
    EXPECT_THROW(lower_corr(0.0, 0.5), Error);
    EXPECT_THROW(upper_corr(0.5, 1.0), Error);
}

TEST(ProbCbe, WorkedValues) {
    EXPECT_NEAR(prob_cbe(0.3, 0.2, 0.0), 0.44, 1e-15);
    EXPECT_NEAR(prob_cbe(0.3, 0.3, 1.0), 0.3, 1e-15);
}

TEST(ProbCbe, MatchesTableEnumeration) {
    for (int i = 1; i <= 19; ++i) {
        for (int j = 1; j <= 19; ++j) {
            const double p1 = i / 20.0;
            const double p2 = j / 20.0;
            const auto b = enumerate_p11(p1, p2);
            for (int k = 0; k <= 10; ++k) {
                const double p11 = b.lo + (b.hi - b.lo) * k / 10.0;
                const double rho = pearson_from_p11(p1, p2, p11);
                // Union of the events: every cell except (0, 0).
                const double cells = p11 + (p1 - p11) + (p2 - p11);
                EXPECT_NEAR(prob_cbe(p1, p2, rho), cells, 1e-12) << p1 << " " << p2 << " " << rho;
            }
        }
    }
}

TEST(ProbCbe, IndependenceIsExact) {
    for (double p1 : {0.1, 0.37, 0.8}) {
        for (double p2 : {0.05, 0.5, 0.93}) {
            EXPECT_DOUBLE_EQ(prob_cbe(p1, p2, 0.0), 1 - (1 - p1) * (1 - p2));
        }
    }
}

TEST(ProbCbe, DecreasingInCorrelation) {
    const double lo = lower_corr(0.4, 0.3);
    const double hi = upper_corr(0.4, 0.3);
    double previous = 2.0;
    for (int k = 0; k <= 50; ++k) {
        const double p = prob_cbe(0.4, 0.3, lo + (hi - lo) * k / 50.0);
        EXPECT_LT(p, previous);
        previous = p;
    }
}

TEST(ProbCbe, InfeasibleCorrelation) {
    try {
        prob_cbe(0.3, 0.6, 0.6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfeasibleCorrelation);
    }
}

TEST(TreatedProb, Measures) {
    EXPECT_NEAR(treated_prob(0.3, -0.1, EffectMeasure::Diff), 0.2, 1e-15);
    EXPECT_NEAR(treated_prob(0.3, 1.0, EffectMeasure::RR), 0.3, 1e-15);
    EXPECT_NEAR(treated_prob(0.3, 0.5, EffectMeasure::OR), 0.1765, 1e-4);
    EXPECT_THROW(treated_prob(0.3, 0.8, EffectMeasure::Diff), Error);
    EXPECT_THROW(treated_prob(0.6, 2.0, EffectMeasure::RR), Error);
}

TEST(EffectSizeCbe, NullEffects) {
    for (auto m : {EffectMeasure::Diff, EffectMeasure::RR, EffectMeasure::OR}) {
        const double null = m == EffectMeasure::Diff ? 0.0 : 1.0;
        const auto e = effectsize_cbe(design(0.3, 0.2, null, null, m, m, m, 0.1));
        EXPECT_NEAR(e.effect, null, 1e-15);
    }
}

TEST(EffectSizeCbe, IndependenceArithmetic) {
    auto d = design(0.3, 0.2, -0.1, -0.05, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, 0.0);
    auto e = effectsize_cbe(d);
    EXPECT_NEAR(e.control.composite, 0.44, 1e-15);
    EXPECT_NEAR(e.treated.composite, 1 - 0.8 * 0.85, 1e-15);
    EXPECT_NEAR(e.effect, -0.12, 1e-15);
    d.effm_ce = EffectMeasure::RR;
    EXPECT_NEAR(effectsize_cbe(d).effect, 0.32 / 0.44, 1e-12);
    d.effm_ce = EffectMeasure::OR;
    EXPECT_NEAR(effectsize_cbe(d).effect, (0.32 / 0.68) / (0.44 / 0.56), 1e-12);
}

TEST(EffectSizeCbe, InfeasibleCorrelationNamesArm) {
    // Feasible in control (upper 0.53) but not in the treated arm (upper 0.21).
    const auto d = design(0.3, 0.6, 0.2, 1.0, EffectMeasure::RR, EffectMeasure::RR, EffectMeasure::RR, 0.3);
    try {
        effectsize_cbe(d);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfeasibleCorrelation);
        EXPECT_NE(e.field().find("treated"), std::string::npos) << e.field();
    }
}

TEST(SampleSizeCbe, DiffUnpooledByHand) {
    const double z = 1.959963984540054 + 0.8416212335729143;
    EXPECT_NEAR(per_arm_sample_size(0.3, 0.2, EffectMeasure::Diff, 0.05, 0.2, true), z * z * 0.37 / 0.01, 1e-9);
    EXPECT_NEAR(per_arm_sample_size(0.3, 0.2, EffectMeasure::Diff, 0.05, 0.2, true), 290.4, 0.05);
}

TEST(SampleSizeCbe, TotalIsTwiceCeiling) {
    // Composite 0.3 vs 0.2 from a degenerate second component.
    auto d = design(0.3, 1e-9, -0.1, 0.0, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, 0.0);
    const auto s = samplesize_cbe(d);
    EXPECT_EQ(s.per_arm, 291);
    EXPECT_EQ(s.total, 582);
}

TEST(SampleSizeCbe, PooledAnalogues) {
    const double z_a = 1.959963984540054;
    const double z_b = 0.8416212335729143;
    const double p0 = 0.3, p1 = 0.2, pb = 0.25;
    const double diff = std::pow(z_a * std::sqrt(2 * pb * (1 - pb)) + z_b * std::sqrt(0.21 + 0.16), 2) / 0.01;
    EXPECT_NEAR(per_arm_sample_size(p0, p1, EffectMeasure::Diff, 0.05, 0.2, false), diff, 1e-9);
    const double rr = std::pow(z_a * std::sqrt(2 * (1 - pb) / pb) + z_b * std::sqrt(0.7 / 0.3 + 0.8 / 0.2), 2) /
                      std::pow(std::log(p1 / p0), 2);
    EXPECT_NEAR(per_arm_sample_size(p0, p1, EffectMeasure::RR, 0.05, 0.2, false), rr, 1e-9);
}

TEST(SampleSizeCbe, NullCompositeIsError) {
    const auto d = design(0.3, 0.2, 0.0, 0.0, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, 0.0);
    try {
        samplesize_cbe(d);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UndetectableEffect);
    }
}

TEST(SampleSizeCbe, MonotoneInEffect) {
    std::int64_t previous = std::numeric_limits<std::int64_t>::max();
    for (double eff : {-0.02, -0.04, -0.06, -0.08, -0.1}) {
        const auto d = design(0.3, 0.2, eff, eff, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, 0.2);
        const auto n = samplesize_cbe(d).total;
        EXPECT_LT(n, previous);
        previous = n;
    }
}

TEST(AreCbe, DegeneratesWithoutSecondComponent) {
    const auto d = design(0.3, 1e-9, -0.1, 0.0, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, 0.0);
    EXPECT_NEAR(are_cbe(d), 1.0, 1e-6);
}

TEST(AreCbe, SymmetricDesignFavoursComposite) {
    const auto d = design(0.2, 0.2, -0.05, -0.05, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, 0.0);
    EXPECT_GT(are_cbe(d), 1.0);
}

TEST(AreCbe, MatchesSampleSizeRatio) {
    for (double rho : {0.0, 0.2, 0.4}) {
        auto d = design(0.15, 0.25, -0.05, -0.08, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, rho);
        const double n_composite = samplesize_cbe(d).per_arm_exact;
        const double n_relevant = per_arm_sample_size(0.15, 0.10, EffectMeasure::Diff, d.alpha, d.beta, true);
        EXPECT_NEAR(are_cbe(d), n_relevant / n_composite, 0.05 * are_cbe(d)) << rho;
    }
}

TEST(AreCbe, UndefinedWithoutRelevantEffect) {
    const auto d = design(0.3, 0.2, 0.0, -0.05, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, 0.0);
    EXPECT_THROW(are_cbe(d), Error);
}

TEST(BinaryDesign, Validation) {
    auto d = design(0.3, 0.2, -0.1, -0.05, EffectMeasure::Diff, EffectMeasure::Diff, EffectMeasure::Diff, 0.0);
    EXPECT_NO_THROW(d.validate());
    d.p0_e1 = 0.0;
    EXPECT_THROW(d.validate(), Error);
    d = design(0.3, 0.2, -0.5, 1.0, EffectMeasure::RR, EffectMeasure::RR, EffectMeasure::RR, 0.0);
    EXPECT_THROW(d.validate(), Error);
    EXPECT_THROW(parse_effect_measure("hr"), Error);
    EXPECT_EQ(parse_effect_measure("OR"), EffectMeasure::OR);
}
