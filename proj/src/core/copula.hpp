// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "core/random.hpp"

namespace compdesign {

enum class CopulaFamily { Frank, Gumbel, Clayton, Independence };
enum class AssociationKind { Spearman, Kendall };

CopulaFamily parse_copula_family(std::string_view name);
AssociationKind parse_association_kind(std::string_view name);
const char* to_string(CopulaFamily family) noexcept;
const char* to_string(AssociationKind kind) noexcept;

/// Rank association between the two component times. Only nonnegative
/// association is supported.
struct AssociationSpec {
    double value = 0.0;
    AssociationKind kind = AssociationKind::Spearman;

    void validate() const;
};

/// Bivariate Archimedean copula. Used as a survival copula:
/// P(T1 > t1, T2 > t2) = C(S1(t1), S2(t2)).
class Copula {
public:
    Copula() = default;  // independence
    Copula(CopulaFamily family, double theta);

    /// Solves for theta reproducing the requested association. A zero value
    /// maps to the Independence family whatever `family` is.
    static Copula from_association(CopulaFamily family, const AssociationSpec& assoc);

    CopulaFamily family() const noexcept { return family_; }
    double theta() const noexcept { return theta_; }

    double cdf(double u, double v) const;
    /// dC/du, the conditional distribution P(V <= v | U = u).
    double partial_u(double u, double v) const;
    /// dC/dv, the conditional distribution P(U <= u | V = v).
    double partial_v(double u, double v) const { return partial_u(v, u); }
    /// The v solving partial_u(u, v) = w.
    double conditional_inverse(double u, double w) const;

    /// Spearman's rho as 12 * integral of C over the unit square - 3.
    double spearman_rho() const;
    double kendall_tau() const;
    double association(AssociationKind kind) const;

    std::pair<double, double> draw(Rng& rng) const;
    std::vector<std::pair<double, double>> sample(std::size_t n, std::uint64_t seed) const;

private:
    CopulaFamily family_ = CopulaFamily::Independence;
    double theta_ = 0.0;
};

}  // namespace compdesign
