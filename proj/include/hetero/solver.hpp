#pragma once

#include <optional>
#include <utility>

#include "hetero/discretization.hpp"
#include "hetero/errors.hpp"
#include "hetero/inhomogeneity.hpp"
#include "hetero/potential.hpp"

namespace hetero {

enum class StepRule { ArmijoBacktracking, BarzilaiBorweinSafeguarded };

struct SolveConfig {
    double L = 5.0;
    double radius_R = 20.0;
    int node_count = 4001;
    double grad_tol = 1e-8;          // max-norm of the projected gradient
    int max_iters = 200000;
    StepRule step_rule = StepRule::ArmijoBacktracking;
    double L_growth_factor = 2.0;
    int max_L_doublings = 6;

    void validate() const;
    Grid grid() const { return Grid(radius_R, node_count); }
};

struct SolveReport {
    double energy = 0.0;               // value of the discrete action at exit
    int iterations = 0;                // accepted descent steps
    double projected_grad_norm = 0.0;
    double el_residual_max = 0.0;      // |u'' - h grad W| where constraints inactive
    double first_integral_dev = 0.0;   // NaN unless the weight is constant
    double equipartition_ratio = 0.0;  // NaN unless the weight is constant
    bool tube_certificate = false;     // strict tube condition with 1e-9*delta margin
    int active_constraint_count = 0;
    double tail_energy = 0.0;          // energy of the cells beyond +-L
    double translation_shift = 0.0;
    bool converged = false;            // false when max_iters was exhausted
    double L_used = 0.0;
    double radius_used = 0.0;
};

/// Projected descent on the discrete action over the tube classes. Descent is
/// monotone: every accepted step lowers the energy. With
/// BarzilaiBorweinSafeguarded the trial step is the spectral step, backtracked
/// until sufficient decrease holds; with ArmijoBacktracking the trial step is
/// carried over from the previous iteration and doubled.
///
/// Throws StepCollapse if backtracking pushes the step below 1e-16. When the
/// iteration budget runs out the report comes back with converged = false.
std::pair<Profile, SolveReport> minimize(const PotentialSpec& p, const InhomogeneityProfile& h,
                                         const SolveConfig& cfg,
                                         const std::optional<Profile>& init = std::nullopt);

/// Shifts the path by a whole number of cells so the first node at which
/// |u - a-| reaches half the well gap lands on x = 0. Vacated cells are filled
/// with the adjacent well value. Returns the shifted path and the applied
/// shift. Throws NoTransitionError when no node lies outside both tubes.
std::pair<Profile, double> normalize_translate(const Profile& u, const PotentialSpec& p,
                                               const ConstraintSpec& c);

/// Carries a SolveReport and the last iterate of a failed certification loop.
struct TubeCertificateFailure : Error {
    TubeCertificateFailure(const std::string& msg, SolveReport rep, Profile last)
        : Error(msg), report(std::move(rep)), last_profile(std::move(last)) {}
    SolveReport report;
    Profile last_profile;
};

/// Full solve: minimize, certify the strict tube condition, translate and
/// re-minimize when constraints are active, and grow L (and R with it) up to
/// max_L_doublings times. Throws TubeCertificateFailure when the growth budget
/// is exhausted without a certificate.
std::pair<Profile, SolveReport> solve_heteroclinic(const PotentialSpec& p,
                                                   const InhomogeneityProfile& h,
                                                   const SolveConfig& cfg);

struct ComparisonReport {
    double m_L = 0.0;                   // weighted-problem minimum
    double m_inf_L = 0.0;               // constant-weight (h_inf) minimum
    double gap = 0.0;                   // m_inf_L - m_L
    double test_function_energy = 0.0;  // weighted energy of the constant-weight minimizer
    SolveReport report_h;
    SolveReport report_inf;
    Profile u_h;
    Profile u_inf;
};

/// Solves the weighted problem and the constant problem at level h_inf on the
/// same grid and reports the energy gap along with the test-function bound
/// m_L <= J_h(u_inf).
ComparisonReport energy_comparison_asymptotic(const PotentialSpec& p,
                                              const InhomogeneityProfile& h,
                                              const SolveConfig& cfg);

/// Strict tube certificate: every constrained node keeps a 1e-9*delta margin
/// to the tube boundary.
bool tube_certificate(const Profile& u, const ConstraintSpec& c, const PotentialSpec& p);

/// Nodes of the constrained region sitting on the tube boundary (no margin).
int active_constraint_count(const Profile& u, const ConstraintSpec& c, const PotentialSpec& p);

} // namespace hetero
