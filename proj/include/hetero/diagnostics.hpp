#pragma once

#include <vector>

#include "hetero/discretization.hpp"
#include "hetero/inhomogeneity.hpp"
#include "hetero/potential.hpp"

namespace hetero {

/// Quantities steering the clearing-out diagnostic. `epsilon` must satisfy
/// epsilon < (1/c2_estimate) * integral of sqrt(V) over [d/2, d], the value of
/// which is kept in `epsilon_integral`; `M` is the competitor-energy-to-zeta
/// ratio C1/zeta (floored at 3, rounded to a whole number of periods for
/// periodic weights).
struct ClearingOutParams {
    double d = 0.0;
    double epsilon = 0.0;
    double c2_estimate = 0.0;
    double zeta = 0.0;
    double M = 0.0;
    double min_separation = 3.0;
    double epsilon_integral = 0.0;
    double competitor_energy = 0.0;   // measured C1
};

struct ClearingViolation {
    double x1 = 0.0;          // left endpoint of the witnessing pair
    double x2 = 0.0;          // right endpoint
    double x_violation = 0.0; // interior point escaping the d-tube
    int well_sign = +1;       // -1 for a-, +1 for a+
    double distance = 0.0;    // |u(x_violation) - well|
};

struct CheckReport {
    bool passed = true;
    std::vector<ClearingViolation> violations;
    long pairs_admissible = 0;  // endpoint pairs satisfying the separation rule
};

/// Max over cells of |kinetic density - potential density| for the constant
/// weight; identically zero along exact homogeneous connections.
double first_integral_deviation(const PotentialSpec& p, const InhomogeneityProfile& h,
                                const Profile& u);

/// Max deviation of 1/2|u'|^2 - h W(u) + int h' W from its left-boundary
/// value; collapses to the first-integral deviation when the weight is
/// constant.
double weighted_energy_identity_residual(const PotentialSpec& p, const InhomogeneityProfile& h,
                                         const Profile& u);

/// |K - P| / (K + P) for total kinetic K and unweighted potential P; zero by
/// convention for a path resting at a well.
double equipartition_ratio(const PotentialSpec& p, const Profile& u);

/// Scans endpoint pairs that are epsilon-close to the same well and at least
/// min_separation apart, and reports every interior node escaping the d-tube.
CheckReport clearing_out_check(const PotentialSpec& p, const Profile& u,
                               const ClearingOutParams& params);

/// 0.99 * min(d/2, (1/c2) * integral over [d/2, d] of sqrt(V)).
double epsilon_threshold(const EnvelopeTable& env, double d, double c2);

/// Energy of the local tube competitor (ramp to the well over one unit,
/// constant in the middle, ramp back) divided by the larger endpoint
/// distance. Returns 0 when both endpoints sit exactly at the well.
double estimate_c2(const PotentialSpec& p, const InhomogeneityProfile& h, const Profile& u,
                   double x1, double x2);

struct MeanValuePoint {
    double x = 0.0;
    double w_value = 0.0;
    double interval_lo = 0.0;
    double interval_hi = 0.0;
    double avg_density = 0.0;  // average weighted energy density on the interval
    bool bound_ok = true;      // w_value <= zeta whenever avg_density <= zeta
};

/// Grid point of least W(u(.)) in each interval [2kM, (2k+1)M] contained in
/// the domain, mirrored to the negative side. Consecutive points are between
/// M and 3M apart by construction.
std::vector<MeanValuePoint> mean_value_points(const PotentialSpec& p,
                                              const InhomogeneityProfile& h, const Profile& u,
                                              double zeta, double M);

/// Independent scalar two-point oracle: integrates u'' = h(x) W'(u) from
/// x = 0 with a fixed-step fourth-order scheme at step spacing/4. For a
/// constant weight the initial slope comes from the conserved quantity
/// (slope = sqrt(2 W(mid))); otherwise the weight must be even and W
/// reflection-symmetric about the midpoint, and the slope is found by
/// bisection on overshoot/undershoot.
Profile shooting_oracle_scalar(const PotentialSpec& p, const InhomogeneityProfile& h,
                               const Grid& g);

/// Sup-norm distance between two paths after shifting `b` so both cross half
/// the well gap at the same abscissa (sub-grid alignment via linear
/// interpolation).
double aligned_sup_distance(const Profile& a, const Profile& b, const PotentialSpec& p);

/// Default clearing-out parameters measured along a run: d = delta, C1 from
/// the linear competitor on the same grid, empirical C2 from tube competitor
/// pairs of the run itself, epsilon from the threshold rule.
ClearingOutParams make_clearing_params(const PotentialSpec& p, const EnvelopeTable& env,
                                       const InhomogeneityProfile& h, const Profile& u);

} // namespace hetero
