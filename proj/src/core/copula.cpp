// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/copula.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "core/error.hpp"
#include "core/numerics.hpp"

namespace compdesign {

namespace {

constexpr int kSpearmanPanels = 128;
constexpr double kTiny = std::numeric_limits<double>::min();

void require_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorKind::Domain, name, std::string(name) + " must lie in [0, 1]");
    }
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

// Debye function D1(x) = (1/x) * integral_0^x t / (e^t - 1) dt.
double debye1(double x) {
    numerics::QuadratureSpec spec{2000, 0.0};
    auto g = [](double t) { return t == 0.0 ? 1.0 : t / std::expm1(t); };
    return numerics::integrate(g, 0.0, x, spec) / x;
}

double log_sum_exp(double a, double b) {
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

CopulaFamily parse_copula_family(std::string_view name) {
    const auto s = lower(name);
    if (s == "frank") return CopulaFamily::Frank;
    if (s == "gumbel") return CopulaFamily::Gumbel;
    if (s == "clayton") return CopulaFamily::Clayton;
    if (s == "independence") return CopulaFamily::Independence;
    throw Error(ErrorKind::Validation, "copula", "unknown copula family '" + std::string(name) + "'");
}

AssociationKind parse_association_kind(std::string_view name) {
    const auto s = lower(name);
    if (s == "spearman") return AssociationKind::Spearman;
    if (s == "kendall") return AssociationKind::Kendall;
    throw Error(ErrorKind::Validation, "rho_type", "unknown association type '" + std::string(name) + "'");
}

const char* to_string(CopulaFamily family) noexcept {
    switch (family) {
    case CopulaFamily::Frank: return "Frank";
    case CopulaFamily::Gumbel: return "Gumbel";
    case CopulaFamily::Clayton: return "Clayton";
    case CopulaFamily::Independence: return "Independence";
    }
    return "unknown";
}

const char* to_string(AssociationKind kind) noexcept {
    return kind == AssociationKind::Spearman ? "Spearman" : "Kendall";
}

void AssociationSpec::validate() const {
    if (!(value >= 0.0 && value < 1.0)) {
        throw Error(ErrorKind::Validation, "rho", "association must lie in [0, 1)");
    }
}

Copula::Copula(CopulaFamily family, double theta) : family_(family), theta_(theta) {
    switch (family) {
    case CopulaFamily::Frank:
        if (!(theta != 0.0) || !std::isfinite(theta)) {
            throw Error(ErrorKind::Domain, "theta", "Frank copula requires theta != 0");
        }
        break;
    case CopulaFamily::Gumbel:
        if (!(theta >= 1.0) || !std::isfinite(theta)) {
            throw Error(ErrorKind::Domain, "theta", "Gumbel copula requires theta >= 1");
        }
        break;
    case CopulaFamily::Clayton:
        if (!(theta > 0.0) || !std::isfinite(theta)) {
            throw Error(ErrorKind::Domain, "theta", "Clayton copula requires theta > 0");
        }
        break;
    case CopulaFamily::Independence:
        theta_ = 0.0;
        break;
    }
}

double Copula::cdf(double u, double v) const {
    require_unit(u, "u");
    require_unit(v, "v");
    if (u == 0.0 || v == 0.0) return 0.0;
    if (u == 1.0) return v;
    if (v == 1.0) return u;
    const double t = theta_;
    switch (family_) {
    case CopulaFamily::Independence:
        return u * v;
    case CopulaFamily::Frank:
        return -std::log1p(std::expm1(-t * u) * std::expm1(-t * v) / std::expm1(-t)) / t;
    case CopulaFamily::Gumbel: {
        const double a = std::pow(-std::log(u), t) + std::pow(-std::log(v), t);
        return std::exp(-std::pow(a, 1.0 / t));
    }
    case CopulaFamily::Clayton: {
        const double s = std::pow(u, -t) + std::pow(v, -t) - 1.0;
        return std::isfinite(s) ? std::pow(s, -1.0 / t) : 0.0;
    }
    }
    return 0.0;
}

double Copula::partial_u(double u, double v) const {
    require_unit(u, "u");
    require_unit(v, "v");
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double t = theta_;
    switch (family_) {
    case CopulaFamily::Independence:
        return v;
    case CopulaFamily::Frank: {
        // 1 / (1 + e^(t(u-v)) * expm1(-t(1-v)) / expm1(-tv)), free of cancellation near (1, 1).
        const double r = std::exp(t * (u - v)) * std::expm1(-t * (1.0 - v)) / std::expm1(-t * v);
        return std::clamp(1.0 / (1.0 + r), 0.0, 1.0);
    }
    case CopulaFamily::Gumbel: {
        u = std::clamp(u, kTiny, 1.0);
        if (u == 1.0) return t > 1.0 ? 0.0 : v;
        const double lu = -std::log(u);
        const double lv = -std::log(v);
        const double a = std::pow(lu, t) + std::pow(lv, t);
        const double log_c = -std::pow(a, 1.0 / t);
        const double log_p = log_c + (1.0 / t - 1.0) * std::log(a) + (t - 1.0) * std::log(lu) + lu;
        return std::clamp(std::exp(log_p), 0.0, 1.0);
    }
    case CopulaFamily::Clayton: {
        u = std::clamp(u, kTiny, 1.0);
        // u^(-t-1) * (u^-t + v^-t - 1)^(-1/t - 1), in logs to avoid overflow.
        const double lu = std::log(u);
        const double lv = std::log(v);
        const double m = std::max(-t * lu, -t * lv);
        const double log_s = m + std::log(std::exp(-t * lu - m) + std::exp(-t * lv - m) - std::exp(-m));
        const double log_p = (-t - 1.0) * lu + (-1.0 / t - 1.0) * log_s;
        return std::clamp(std::exp(log_p), 0.0, 1.0);
    }
    }
    return 0.0;
}

double Copula::conditional_inverse(double u, double w) const {
    if (!(u > 0.0 && u < 1.0) || !(w > 0.0 && w < 1.0)) {
        throw Error(ErrorKind::Domain, "u", "conditional inverse requires u, w in (0, 1)");
    }
    const double t = theta_;
    switch (family_) {
    case CopulaFamily::Independence:
        return w;
    case CopulaFamily::Frank: {
        // exp(-t v) = (w e^-t + (1-w) e^-tu) / (w + (1-w) e^-tu); all terms positive.
        const double num = log_sum_exp(std::log(w) - t, std::log1p(-w) - t * u);
        const double den = log_sum_exp(std::log(w), std::log1p(-w) - t * u);
        const double v = (den - num) / t;
        return std::clamp(v, kTiny, 1.0 - std::numeric_limits<double>::epsilon());
    }
    case CopulaFamily::Clayton: {
        const double a = std::pow(w * std::pow(u, t + 1.0), -t / (1.0 + t));
        const double v = std::pow(a - std::pow(u, -t) + 1.0, -1.0 / t);
        return std::clamp(v, kTiny, 1.0 - std::numeric_limits<double>::epsilon());
    }
    case CopulaFamily::Gumbel: {
        // partial_u is increasing in v; solve on x = -log(v) for resolution near 0.
        auto g = [&](double x) { return partial_u(u, std::exp(-x)) - w; };
        double hi = 1.0;
        while (g(hi) > 0.0 && hi < 700.0) hi *= 2.0;
        const double x = numerics::find_root(g, 0.0, std::min(hi, 700.0), 1e-12);
        return std::clamp(std::exp(-x), kTiny, 1.0 - std::numeric_limits<double>::epsilon());
    }
    }
    return w;
}

double Copula::spearman_rho() const {
    if (family_ == CopulaFamily::Independence) return 0.0;
    constexpr int n = kSpearmanPanels;
    const double h = 1.0 / n;
    std::array<double, n + 1> weight{};
    for (int i = 0; i <= n; ++i) {
        weight[i] = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    }
    double total = 0.0;
    for (int i = 1; i <= n; ++i) {  // C vanishes on the u = 0 and v = 0 edges
        const double u = i * h;
        double row = 0.0;
        for (int j = 1; j <= n; ++j) {
            row += weight[j] * cdf(u, j * h);
        }
        total += weight[i] * row;
    }
    return 12.0 * total * (h / 3.0) * (h / 3.0) - 3.0;
}

double Copula::kendall_tau() const {
    const double t = theta_;
    switch (family_) {
    case CopulaFamily::Independence: return 0.0;
    case CopulaFamily::Clayton: return t / (t + 2.0);
    case CopulaFamily::Gumbel: return 1.0 - 1.0 / t;
    case CopulaFamily::Frank:
        if (t > 0.0) return 1.0 - 4.0 / t + 4.0 * debye1(t) / t;
        // D1(-x) = D1(x) + x/2
        return 1.0 - 4.0 / t + 4.0 * (debye1(-t) - t / 2.0) / t;
    }
    return 0.0;
}

double Copula::association(AssociationKind kind) const {
    return kind == AssociationKind::Spearman ? spearman_rho() : kendall_tau();
}

Copula Copula::from_association(CopulaFamily family, const AssociationSpec& assoc) {
    assoc.validate();
    if (assoc.value == 0.0 || family == CopulaFamily::Independence) {
        if (assoc.value != 0.0) {
            throw Error(ErrorKind::Validation, "rho", "Independence copula requires zero association");
        }
        return Copula{};
    }
    if (assoc.kind == AssociationKind::Kendall) {
        if (family == CopulaFamily::Clayton) return {family, 2.0 * assoc.value / (1.0 - assoc.value)};
        if (family == CopulaFamily::Gumbel) return {family, 1.0 / (1.0 - assoc.value)};
    }
    double lo = family == CopulaFamily::Gumbel ? 1.0 : 1e-6;
    double hi = family == CopulaFamily::Gumbel ? 2.0 : 1.0;
    auto gap = [&](double theta) { return Copula(family, theta).association(assoc.kind) - assoc.value; };
    while (gap(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e4) {
            throw Error(ErrorKind::CalibrationInfeasible, "rho", "association too close to 1 to invert");
        }
    }
    return {family, numerics::find_root(gap, lo, hi, 1e-13)};
}

std::pair<double, double> Copula::draw(Rng& rng) const {
    const double u = rng.uniform();
    const double w = rng.uniform();
    return {u, conditional_inverse(u, w)};
}

std::vector<std::pair<double, double>> Copula::sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) {
        throw Error(ErrorKind::Validation, "n", "sample size must be positive");
    }
    Rng rng(seed);
    std::vector<std::pair<double, double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(draw(rng));
    return out;
}

}  // namespace compdesign
