// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "core/copula.hpp"
#include "core/numerics.hpp"
#include "core/weibull.hpp"

namespace compdesign {

enum class Arm { Control = 0, Treated = 1 };

/// Two-arm time-to-event design with a two-component composite endpoint.
///
/// `case_id` encodes which components are fatal:
///   1 none, 2 endpoint 2 fatal, 3 endpoint 1 fatal, 4 both fatal.
/// The control probabilities are probabilities of *observing* each event by
/// `followup_time`; for a component whose observation a fatal competitor can
/// preclude this is a crude incidence rather than a marginal probability.
struct TTEDesign {
    double p0_e1 = 0.5;
    double p0_e2 = 0.5;
    double hr_e1 = 1.0;
    double hr_e2 = 1.0;
    double beta_e1 = 1.0;
    double beta_e2 = 1.0;
    int case_id = 1;
    CopulaFamily copula = CopulaFamily::Frank;
    AssociationSpec association{0.3, AssociationKind::Spearman};
    double followup_time = 1.0;

    void validate() const;
    /// True when a fatal competitor can preclude observing component k (1 or 2).
    bool is_precluded(int component) const;
};

/// Evaluated composite law at one time point for one arm.
struct LawPoint {
    double s1;
    double s2;
    double survival;  // S*(t)
    double density;   // f*(t)
    double hazard;    // lambda*(t)
};

struct SurvivalTable {
    std::vector<double> time;
    // Indexed by arm: component 1, component 2, composite.
    std::array<std::vector<double>, 2> s1;
    std::array<std::vector<double>, 2> s2;
    std::array<std::vector<double>, 2> composite;
    std::vector<double> hr_star;
};

/// Law of T* = min(T1, T2) in both arms, calibrated from a design.
class CompositeLaw {
public:
    static CompositeLaw calibrate(const TTEDesign& design, const numerics::QuadratureSpec& quad = {});

    const TTEDesign& design() const noexcept { return design_; }
    const Copula& copula() const noexcept { return copula_; }
    const numerics::QuadratureSpec& quadrature() const noexcept { return quad_; }
    double horizon() const noexcept { return design_.followup_time; }
    const WeibullMarginal& marginal(Arm arm, int component) const;

    LawPoint evaluate(Arm arm, double t) const;
    double survival(Arm arm, double t) const;
    double density(Arm arm, double t) const;
    double hazard(Arm arm, double t) const;

    /// P(T* <= followup_time).
    double event_probability(Arm arm) const;
    /// P(T_k <= tau, T_k < T_j): the probability of observing component k
    /// before the competing component within follow-up.
    double crude_incidence(Arm arm, int component) const;
    /// Marginal probability for components nothing precludes, crude incidence
    /// otherwise.
    double observation_probability(Arm arm, int component) const;

    /// lambda*_treated(t) / lambda*_control(t). Times below the quadrature
    /// offset are evaluated at the offset.
    double hr_star(double t) const;
    /// Smallest time at which singular hazards are evaluated.
    double offset_time() const noexcept { return std::max(quad_.lower_epsilon, 1e-9) * horizon(); }

    /// Exponent for integrate_graded, 2 / min(shape). Turns the t^(shape-1)
    /// factors of component densities into s^1 in the graded variable.
    double grading() const noexcept { return grading_; }
    /// Integral over [0, followup_time] with this law's grading and quadrature.
    double integrate_time(const numerics::RealFunction& f) const;

    SurvivalTable survival_curves(std::size_t grid_size) const;

private:
    CompositeLaw(TTEDesign design, Copula copula, numerics::QuadratureSpec quad,
                 std::array<std::array<WeibullMarginal, 2>, 2> marginals);

    double crude_incidence(const WeibullMarginal& m1, const WeibullMarginal& m2, int component) const;

    TTEDesign design_;
    Copula copula_;
    numerics::QuadratureSpec quad_;
    // [arm][component - 1]
    std::array<std::array<WeibullMarginal, 2>, 2> marginals_;
    double grading_ = 1.0;
};

}  // namespace compdesign
