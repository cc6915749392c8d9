#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hetero/validation.hpp"

namespace hetero {

enum class Smoothness { C1, C2 };

/// A double-well potential W : R^n -> R with two global zeros a-, a+ and
/// positive values elsewhere. `grad_w` may be empty, in which case gradients
/// fall back to central finite differences with step 1e-6 * (1 + |u|).
struct PotentialSpec {
    int dim = 1;
    std::vector<double> a_minus;
    std::vector<double> a_plus;
    std::function<double(std::span<const double>)> w;
    std::function<void(std::span<const double>, std::span<double>)> grad_w;
    double delta = 0.0;   // tube radius, 0 < delta < |a+ - a-|
    Smoothness smoothness_order = Smoothness::C2;
    std::string name = "custom";

    double well_gap() const;

    double eval_w(std::span<const double> u) const { return w(u); }

    /// Gradient with finite-difference fallback when no analytic gradient
    /// was supplied.
    void eval_grad(std::span<const double> u, std::span<double> out) const;
};

/// Radial lower envelope of W around the wells:
/// v(rho) = min over both wells of the minimum of W(a +/- rho*nu) over
/// sampled directions nu. Direction sets are prefix-nested, so enlarging
/// `sphere_sample_count` can only lower the tabulated values.
struct EnvelopeTable {
    std::vector<double> rho_samples;   // ascending, rho_samples[0] == 0
    std::vector<double> v_values;      // v_values[0] == 0, positive beyond
    int sphere_sample_count = 0;

    /// Piecewise-linear interpolation of v at rho in [0, delta].
    double interpolate(double rho) const;
};

/// Scalar quartic (u^2-1)^2/4 with wells at -1 and +1.
PotentialSpec make_quartic_scalar();

/// W(u) = |u - a-|^2 |u - a+|^2 / 4 in any dimension.
PotentialSpec make_product_vector(std::vector<double> a_minus, std::vector<double> a_plus);

/// Scalar polynomial W(u) = sum_k coeffs[k] * u^k with declared wells.
PotentialSpec make_polynomial_scalar(std::vector<double> coeffs,
                                     double a_minus, double a_plus,
                                     double delta = 0.0);

/// Sampling check of the standing assumptions: W vanishes at the wells, is
/// positive elsewhere, and stays bounded away from zero on the sphere of
/// radius `sample_radius` around the midpoint of the wells. Throws
/// AssumptionViolation on the first hard failure.
ValidationReport validate_assumptions(const PotentialSpec& p,
                                      double sample_radius,
                                      int sample_count);

/// Tabulates the sphere envelope on a uniform rho grid over [0, delta].
EnvelopeTable build_envelope(const PotentialSpec& p, int rho_count, int sphere_sample_count);

/// sqrt(2) * integral of sqrt(W) along the straight segment from a- to a+
/// (trapezoid rule). Exact minimal energy for n = 1; a segment-path bound
/// for n >= 2.
double modica_lower_bound(const PotentialSpec& p, int quadrature_points);

/// First `count` elements of a deterministic unit-direction sequence in
/// dimension n. Prefix-nested: the sequence for a larger count extends the
/// smaller one.
std::vector<std::vector<double>> direction_sequence(int n, int count);

} // namespace hetero
