// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/composite_law.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace compdesign {

namespace {

int arm_index(Arm arm) { return static_cast<int>(arm); }

void require_component(int component) {
    if (component != 1 && component != 2) {
        throw Error(ErrorKind::Domain, "component", "component must be 1 or 2");
    }
}

double grading_for(const TTEDesign& d) { return std::max(1.0, 2.0 / std::min(d.beta_e1, d.beta_e2)); }

std::string probability_field(int component) { return component == 1 ? "p0_e1" : "p0_e2"; }

struct CrudeIntegrator {
    const Copula& copula;
    const numerics::QuadratureSpec& quad;
    double grading;
    double horizon;

    double operator()(const WeibullMarginal& m1, const WeibullMarginal& m2, int component) const {
        auto integrand = [&](double t) {
            const double u = m1.survival(t);
            const double v = m2.survival(t);
            return component == 1 ? copula.partial_u(u, v) * m1.density(t)
                                  : copula.partial_v(u, v) * m2.density(t);
        };
        return numerics::integrate_graded(integrand, horizon, grading, quad);
    }
};

// Scale of component `component` whose crude incidence hits `target`, holding
// the competing marginal fixed. Crude incidence decreases with the scale.
WeibullMarginal solve_crude_scale(const CrudeIntegrator& crude, double target, double shape, int component,
                                  const WeibullMarginal& other) {
    const double anchor_scale = WeibullMarginal::from_anchor({target, crude.horizon}, shape).scale();
    auto gap = [&](double log_scale) {
        const WeibullMarginal m(shape, std::exp(log_scale));
        return component == 1 ? crude(m, other, 1) - target : crude(other, m, 2) - target;
    };
    const double lo = std::log(anchor_scale / 50.0);
    const double hi = std::log(anchor_scale * 50.0);
    const double g_lo = gap(lo);
    const double g_hi = gap(hi);
    if ((g_lo > 0.0) == (g_hi > 0.0)) {
        throw Error(ErrorKind::CalibrationInfeasible, probability_field(component),
                    "no Weibull scale for component " + std::to_string(component) +
                        " reproduces its observation probability under the chosen copula");
    }
    return {shape, std::exp(numerics::find_root(gap, lo, hi, 1e-13))};
}

}  // namespace

void TTEDesign::validate() const {
    auto check_probability = [](double p, const char* field) {
        if (!(p > 0.0 && p < 1.0)) {
            throw Error(ErrorKind::Validation, field, std::string(field) + " must lie in (0, 1)");
        }
    };
    auto check_hr = [](double hr, const char* field) {
        if (!(hr > 0.0 && hr <= 1.0)) {
            throw Error(ErrorKind::Validation, field, std::string(field) + " must lie in (0, 1]");
        }
    };
    auto check_shape = [](double beta, const char* field) {
        if (!(beta > 0.0) || !std::isfinite(beta)) {
            throw Error(ErrorKind::Validation, field, std::string(field) + " must be positive");
        }
    };
    check_probability(p0_e1, "p0_e1");
    check_probability(p0_e2, "p0_e2");
    check_hr(hr_e1, "hr_e1");
    check_hr(hr_e2, "hr_e2");
    check_shape(beta_e1, "beta_e1");
    check_shape(beta_e2, "beta_e2");
    if (case_id < 1 || case_id > 4) {
        throw Error(ErrorKind::Validation, "case", "case must be 1, 2, 3 or 4");
    }
    if (!(followup_time > 0.0) || !std::isfinite(followup_time)) {
        throw Error(ErrorKind::Validation, "followup_time", "followup_time must be positive");
    }
    association.validate();
    if (case_id == 4 && !(p0_e1 + p0_e2 < 1.0)) {
        throw Error(ErrorKind::Validation, "p0_e2",
                    "with both components fatal the observation probabilities must sum to less than 1");
    }
}

bool TTEDesign::is_precluded(int component) const {
    require_component(component);
    switch (case_id) {
    case 2: return component == 1;
    case 3: return component == 2;
    case 4: return true;
    default: return false;
    }
}

CompositeLaw::CompositeLaw(TTEDesign design, Copula copula, numerics::QuadratureSpec quad,
                           std::array<std::array<WeibullMarginal, 2>, 2> marginals)
    : design_(design), copula_(copula), quad_(quad), marginals_(marginals) {
    grading_ = grading_for(design_);
}

CompositeLaw CompositeLaw::calibrate(const TTEDesign& design, const numerics::QuadratureSpec& quad) {
    design.validate();
    quad.validate();
    const Copula copula = Copula::from_association(design.copula, design.association);
    const double tau = design.followup_time;
    const CrudeIntegrator crude{copula, quad, grading_for(design), tau};

    WeibullMarginal m1 = WeibullMarginal::from_anchor({design.p0_e1, tau}, design.beta_e1);
    WeibullMarginal m2 = WeibullMarginal::from_anchor({design.p0_e2, tau}, design.beta_e2);

    const bool crude1 = design.is_precluded(1);
    const bool crude2 = design.is_precluded(2);
    if (crude1 && crude2) {
        // Each crude incidence is monotone in its own scale; alternate 1-D solves.
        for (int iter = 0; iter < 200; ++iter) {
            const double b1 = m1.scale();
            const double b2 = m2.scale();
            m1 = solve_crude_scale(crude, design.p0_e1, design.beta_e1, 1, m2);
            m2 = solve_crude_scale(crude, design.p0_e2, design.beta_e2, 2, m1);
            const double change = std::max(std::abs(m1.scale() / b1 - 1.0), std::abs(m2.scale() / b2 - 1.0));
            if (change < 1e-12) break;
        }
    } else if (crude1) {
        m1 = solve_crude_scale(crude, design.p0_e1, design.beta_e1, 1, m2);
    } else if (crude2) {
        m2 = solve_crude_scale(crude, design.p0_e2, design.beta_e2, 2, m1);
    }

    const WeibullMarginal t1 = m1.power_rule(design.hr_e1);
    const WeibullMarginal t2 = m2.power_rule(design.hr_e2);
    return CompositeLaw(design, copula, quad, {{{m1, m2}, {t1, t2}}});
}

const WeibullMarginal& CompositeLaw::marginal(Arm arm, int component) const {
    require_component(component);
    return marginals_[arm_index(arm)][component - 1];
}

LawPoint CompositeLaw::evaluate(Arm arm, double t) const {
    const auto& m = marginals_[arm_index(arm)];
    LawPoint p{};
    p.s1 = m[0].survival(t);
    p.s2 = m[1].survival(t);
    p.survival = copula_.cdf(p.s1, p.s2);
    p.density = copula_.partial_u(p.s1, p.s2) * m[0].density(t) + copula_.partial_v(p.s1, p.s2) * m[1].density(t);
    p.hazard = p.density / p.survival;
    return p;
}

double CompositeLaw::survival(Arm arm, double t) const {
    const auto& m = marginals_[arm_index(arm)];
    return copula_.cdf(m[0].survival(t), m[1].survival(t));
}

double CompositeLaw::density(Arm arm, double t) const { return evaluate(arm, t).density; }

double CompositeLaw::hazard(Arm arm, double t) const { return evaluate(arm, t).hazard; }

double CompositeLaw::event_probability(Arm arm) const { return 1.0 - survival(arm, horizon()); }

double CompositeLaw::crude_incidence(const WeibullMarginal& m1, const WeibullMarginal& m2, int component) const {
    return CrudeIntegrator{copula_, quad_, grading_, horizon()}(m1, m2, component);
}

double CompositeLaw::crude_incidence(Arm arm, int component) const {
    require_component(component);
    const auto& m = marginals_[arm_index(arm)];
    return crude_incidence(m[0], m[1], component);
}

double CompositeLaw::observation_probability(Arm arm, int component) const {
    if (design_.is_precluded(component)) return crude_incidence(arm, component);
    return 1.0 - marginal(arm, component).survival(horizon());
}

double CompositeLaw::hr_star(double t) const {
    if (!(t > 0.0)) {
        throw Error(ErrorKind::Domain, "t", "hr_star requires t > 0");
    }
    t = std::max(t, offset_time());
    return evaluate(Arm::Treated, t).hazard / evaluate(Arm::Control, t).hazard;
}

double CompositeLaw::integrate_time(const numerics::RealFunction& f) const {
    return numerics::integrate_graded(f, horizon(), grading_, quad_);
}

SurvivalTable CompositeLaw::survival_curves(std::size_t grid_size) const {
    if (grid_size < 2) {
        throw Error(ErrorKind::Validation, "grid", "survival grid needs at least 2 points");
    }
    SurvivalTable table;
    table.time.reserve(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double t = horizon() * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        table.time.push_back(t);
        for (Arm arm : {Arm::Control, Arm::Treated}) {
            const auto& m = marginals_[arm_index(arm)];
            const double s1 = m[0].survival(t);
            const double s2 = m[1].survival(t);
            table.s1[arm_index(arm)].push_back(s1);
            table.s2[arm_index(arm)].push_back(s2);
            table.composite[arm_index(arm)].push_back(copula_.cdf(s1, s2));
        }
        table.hr_star.push_back(hr_star(std::max(t, offset_time())));
    }
    return table;
}

}  // namespace compdesign
