#pragma once

#include <functional>
#include <string>

#include "hetero/validation.hpp"

namespace hetero {

enum class ProfileKind { Constant, Periodic, AsymptoticallyConstant, Diverging };

/// The spatial weight h(x) multiplying the potential term of the action.
/// Immutable after construction; `lower_bound` is the declared infimum of h
/// over the whole line (verified by sampling only).
struct InhomogeneityProfile {
    ProfileKind kind = ProfileKind::Constant;
    std::function<double(double)> eval;
    double period_T = 0.0;     // Periodic only
    double h_inf = 0.0;        // AsymptoticallyConstant only
    double alpha = 0.0;        // Diverging power law only
    double lower_bound = 0.0;
    std::string descriptor = "constant";

    bool is_constant() const { return kind == ProfileKind::Constant; }

    static InhomogeneityProfile constant();

    /// T-periodic positive weight. `lower_bound` is the declared positive
    /// infimum over one period.
    static InhomogeneityProfile periodic(double period,
                                         std::function<double(double)> eval,
                                         double lower_bound,
                                         std::string descriptor = "periodic");

    /// base + amp * sin(2*pi*x / T); requires base > |amp| for positivity.
    static InhomogeneityProfile periodic_sin(double period, double base, double amp);

    /// Bounded weight with h <= h_inf everywhere and h -> h_inf at both tails.
    static InhomogeneityProfile asymptotically_constant(double h_inf,
                                                        std::function<double(double)> eval,
                                                        double lower_bound,
                                                        std::string descriptor = "asymptotic");

    /// h_inf - dip * exp(-(x/width)^2); requires 0 < dip < h_inf.
    static InhomogeneityProfile gaussian_dip(double h_inf, double dip, double width);

    /// Nonnegative weight diverging at both tails; may vanish at isolated
    /// points.
    static InhomogeneityProfile diverging(std::function<double(double)> eval,
                                          double alpha,
                                          std::string descriptor = "diverging");

    /// c0 + |x|^alpha.
    static InhomogeneityProfile power_law(double alpha, double c0);
};

/// Samples the weight densely over [-domain_radius, domain_radius] and checks
/// the kind-specific invariants. Hard violations throw
/// ProfileInvariantViolation with the offending abscissa; adequacy issues
/// (slow tail convergence, weak divergence at the boundary) come back as
/// warnings.
ValidationReport verify_profile(const InhomogeneityProfile& p, double domain_radius);

} // namespace hetero
