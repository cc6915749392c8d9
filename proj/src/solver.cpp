#include "hetero/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hetero/diagnostics.hpp"

namespace hetero {

namespace {

double dist(std::span<const double> u, std::span<const double> v) {
    double s = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Boundary-activity threshold shared by the certificate and the KKT residual.
constexpr double kActiveMargin = 1e-9;

const std::vector<double>* region_well(const Grid& g, const ConstraintSpec& c,
                                       const PotentialSpec& p, int i) {
    const double tol = 1e-12 * g.radius_R;
    const double x = g.node(i);
    if (x <= -c.L + tol) return &p.a_minus;
    if (x >= c.L - tol) return &p.a_plus;
    return nullptr;
}

// Max-norm KKT residual: plain gradient at free nodes; at nodes pinned to the
// tube boundary the outward-blocked radial component is dropped.
double projected_grad_max_norm(const Profile& u, std::span<const double> grad,
                               const ConstraintSpec& c, const PotentialSpec& p) {
    const Grid& g = u.grid;
    const int n = u.dim;
    double worst = 0.0;
    std::vector<double> gtan(static_cast<size_t>(n));
    for (int i = 1; i + 1 < g.node_count; ++i) {
        const double* gi = grad.data() + static_cast<size_t>(i) * static_cast<size_t>(n);
        const std::vector<double>* well = region_well(g, c, p, i);
        double local = 0.0;
        if (well == nullptr) {
            for (int k = 0; k < n; ++k) local = std::max(local, std::abs(gi[k]));
        } else {
            const auto ui = u.node(i);
            const double r = dist(ui, *well);
            if (r >= c.delta * (1.0 - 1e-12) && r > 0.0) {
                double gr = 0.0;
                for (int k = 0; k < n; ++k)
                    gr += gi[k] * (ui[static_cast<size_t>(k)] - (*well)[static_cast<size_t>(k)]) / r;
                if (gr < 0.0) {
                    for (int k = 0; k < n; ++k)
                        gtan[static_cast<size_t>(k)] =
                            gi[k] - gr * (ui[static_cast<size_t>(k)] - (*well)[static_cast<size_t>(k)]) / r;
                    for (int k = 0; k < n; ++k)
                        local = std::max(local, std::abs(gtan[static_cast<size_t>(k)]));
                } else {
                    for (int k = 0; k < n; ++k) local = std::max(local, std::abs(gi[k]));
                }
            } else {
                for (int k = 0; k < n; ++k) local = std::max(local, std::abs(gi[k]));
            }
        }
        worst = std::max(worst, local);
    }
    return worst;
}

double el_residual_max(const Profile& u, std::span<const double> grad, const ConstraintSpec& c,
                       const PotentialSpec& p) {
    const Grid& g = u.grid;
    const int n = u.dim;
    double worst = 0.0;
    for (int i = 1; i + 1 < g.node_count; ++i) {
        const std::vector<double>* well = region_well(g, c, p, i);
        if (well != nullptr) {
            const double r = dist(u.node(i), *well);
            if (r >= c.delta * (1.0 - kActiveMargin)) continue;   // constraint active
        }
        const double* gi = grad.data() + static_cast<size_t>(i) * static_cast<size_t>(n);
        for (int k = 0; k < n; ++k)
            worst = std::max(worst, std::abs(gi[k]) / g.spacing);
    }
    return worst;
}

PotentialSpec scale_potential(const PotentialSpec& p, double factor) {
    PotentialSpec out = p;
    auto w0 = p.w;
    out.w = [w0, factor](std::span<const double> u) { return factor * w0(u); };
    if (p.grad_w) {
        auto g0 = p.grad_w;
        out.grad_w = [g0, factor](std::span<const double> u, std::span<double> g) {
            g0(u, g);
            for (double& v : g) v *= factor;
        };
    }
    return out;
}

Profile embed(const Profile& u, const Grid& wider, const PotentialSpec& p) {
    Profile out(wider, u.dim);
    const int off = wider.center_index() - u.grid.center_index();
    for (int j = 0; j < wider.node_count; ++j) {
        const int i = j - off;
        if (i >= 0 && i < u.grid.node_count) {
            out.set_node(j, u.node(i));
        } else {
            out.set_node(j, i < 0 ? p.a_minus : p.a_plus);
        }
    }
    out.pin_endpoints(p);
    return out;
}

} // namespace

void SolveConfig::validate() const {
    if (!(L >= 2.0)) throw PreconditionError("constraint onset must satisfy L >= 2");
    if (!(radius_R >= 2.0 * L)) throw PreconditionError("truncation radius must satisfy R >= 2L");
    if (node_count < 3 || node_count % 2 == 0)
        throw PreconditionError("node_count must be an odd integer >= 3");
    if (!(grad_tol > 0.0)) throw PreconditionError("grad_tol must be positive");
    if (max_iters < 1) throw PreconditionError("max_iters must be positive");
    if (!(L_growth_factor > 1.0)) throw PreconditionError("L_growth_factor must exceed 1");
    if (max_L_doublings < 0) throw PreconditionError("max_L_doublings must be nonnegative");
}

bool tube_certificate(const Profile& u, const ConstraintSpec& c, const PotentialSpec& p) {
    return active_constraint_count(u, c, p) == 0;
}

int active_constraint_count(const Profile& u, const ConstraintSpec& c, const PotentialSpec& p) {
    int count = 0;
    for (int i = 0; i < u.grid.node_count; ++i) {
        const std::vector<double>* well = region_well(u.grid, c, p, i);
        if (well == nullptr) continue;
        if (dist(u.node(i), *well) >= c.delta * (1.0 - kActiveMargin)) ++count;
    }
    return count;
}

std::pair<Profile, SolveReport> minimize(const PotentialSpec& p, const InhomogeneityProfile& h,
                                         const SolveConfig& cfg,
                                         const std::optional<Profile>& init) {
    cfg.validate();
    const Grid g = cfg.grid();
    const ConstraintSpec c(cfg.L, p.delta);

    Profile u = init ? *init : linear_competitor(p, g);
    if (!(u.grid == g)) throw PreconditionError("initial path lives on a different grid");
    if (u.dim != p.dim) throw PreconditionError("initial path has the wrong dimension");
    u.pin_endpoints(p);
    project_constraints_inplace(u, c, p);

    const auto hv = tabulate_weight(h, g);
    const size_t M = u.values.size();

    double J = discrete_energy_cached(p, hv, u);
    std::vector<double> grad = discrete_gradient_cached(p, hv, u);
    double pg = projected_grad_max_norm(u, grad, c, p);

    Profile trial = u;
    std::vector<double> u_prev, grad_prev;
    bool have_history = false;
    double step_carry = 1.0;

    int iters = 0;
    bool converged = pg <= cfg.grad_tol;

    while (!converged && iters < cfg.max_iters) {
        double t;
        if (cfg.step_rule == StepRule::BarzilaiBorweinSafeguarded && have_history) {
            double ss = 0.0, sy = 0.0;
            for (size_t m = 0; m < M; ++m) {
                const double sm = u.values[m] - u_prev[m];
                ss += sm * sm;
                sy += sm * (grad[m] - grad_prev[m]);
            }
            t = sy > 0.0 ? std::clamp(ss / sy, 1e-12, 1e4) : 1e4;
        } else {
            t = std::min(2.0 * step_carry, 1e3);
        }

        // Backtracking along the projection arc until sufficient decrease.
        double J_trial = J;
        while (true) {
            for (size_t m = 0; m < M; ++m) trial.values[m] = u.values[m] - t * grad[m];
            project_constraints_inplace(trial, c, p);
            double ip = 0.0;
            for (size_t m = 0; m < M; ++m) ip += grad[m] * (trial.values[m] - u.values[m]);
            J_trial = discrete_energy_cached(p, hv, trial);
            if (ip < 0.0 && J_trial <= J + 1e-4 * ip) break;
            t *= 0.5;
            if (t < 1e-16)
                throw StepCollapse("descent step collapsed below 1e-16 at iteration " +
                                   std::to_string(iters));
        }

        if (cfg.step_rule == StepRule::BarzilaiBorweinSafeguarded) {
            u_prev = u.values;
            grad_prev = grad;
            have_history = true;
        }
        u.values.swap(trial.values);
        J = J_trial;
        grad = discrete_gradient_cached(p, hv, u);
        step_carry = t;
        ++iters;
        pg = projected_grad_max_norm(u, grad, c, p);
        if (pg <= cfg.grad_tol) converged = true;
    }

    SolveReport rep;
    rep.energy = J;
    rep.iterations = iters;
    rep.projected_grad_norm = pg;
    rep.el_residual_max = el_residual_max(u, grad, c, p);
    rep.converged = converged;
    rep.active_constraint_count = active_constraint_count(u, c, p);
    rep.tube_certificate = rep.active_constraint_count == 0;
    rep.tail_energy = tail_energy(p, h, u, cfg.L);
    rep.translation_shift = 0.0;
    rep.L_used = cfg.L;
    rep.radius_used = cfg.radius_R;
    if (h.is_constant()) {
        rep.first_integral_dev = first_integral_deviation(p, h, u);
        rep.equipartition_ratio = equipartition_ratio(p, u);
    } else {
        rep.first_integral_dev = std::numeric_limits<double>::quiet_NaN();
        rep.equipartition_ratio = std::numeric_limits<double>::quiet_NaN();
    }
    return {std::move(u), rep};
}

std::pair<Profile, double> normalize_translate(const Profile& u, const PotentialSpec& p,
                                               const ConstraintSpec& c) {
    const Grid& g = u.grid;
    const int N = g.node_count;

    bool outside_both = false;
    for (int i = 0; i < N && !outside_both; ++i)
        outside_both = dist(u.node(i), p.a_minus) > c.delta && dist(u.node(i), p.a_plus) > c.delta;
    if (!outside_both)
        throw NoTransitionError("path never leaves both tubes; nothing to translate");

    const double half = 0.5 * p.well_gap();
    int crossing = -1;
    for (int i = 0; i < N; ++i) {
        if (dist(u.node(i), p.a_minus) >= half) {
            crossing = i;
            break;
        }
    }
    if (crossing < 0)
        throw NoTransitionError("path never reaches the midpoint distance from a-");

    const int cells = g.center_index() - crossing;
    if (cells == 0) return {u, 0.0};

    Profile out(g, u.dim);
    for (int j = 0; j < N; ++j) {
        const int src = j - cells;
        if (src >= 0 && src < N) {
            out.set_node(j, u.node(src));
        } else {
            out.set_node(j, src < 0 ? p.a_minus : p.a_plus);
        }
    }
    out.pin_endpoints(p);
    return {std::move(out), static_cast<double>(cells) * g.spacing};
}

std::pair<Profile, SolveReport> solve_heteroclinic(const PotentialSpec& p,
                                                   const InhomogeneityProfile& h,
                                                   const SolveConfig& cfg) {
    cfg.validate();
    SolveConfig cur = cfg;
    std::optional<Profile> init;

    SolveReport last_rep;
    Profile last_u;

    for (int attempt = 0; attempt <= cfg.max_L_doublings; ++attempt) {
        const ConstraintSpec c(cur.L, p.delta);
        auto [u, rep] = minimize(p, h, cur, init);
        if (rep.tube_certificate) return {std::move(u), rep};

        // Translate within the class and retry before paying for a larger L.
        try {
            auto [shifted, shift] = normalize_translate(u, p, c);
            if (shift != 0.0) {
                auto [u2, rep2] = minimize(p, h, cur, shifted);
                rep2.translation_shift = shift;
                if (rep2.tube_certificate) return {std::move(u2), rep2};
                u = std::move(u2);
                rep = rep2;
            }
        } catch (const NoTransitionError&) {
            // overlapping tubes or a collapsed path; growth is the only lever
        }

        last_rep = rep;
        last_u = u;
        if (attempt == cfg.max_L_doublings) break;

        const double spacing = cur.grid().spacing;
        SolveConfig next = cur;
        next.L = cur.L * cfg.L_growth_factor;
        const Grid ng = Grid::with_spacing(cur.radius_R * cfg.L_growth_factor, spacing);
        next.radius_R = ng.radius_R;
        next.node_count = ng.node_count;
        init = embed(u, ng, p);
        cur = next;
    }
    throw TubeCertificateFailure("no strict tube certificate within the growth budget (final L = " +
                                     std::to_string(cur.L) + ")",
                                 last_rep, std::move(last_u));
}

ComparisonReport energy_comparison_asymptotic(const PotentialSpec& p,
                                              const InhomogeneityProfile& h,
                                              const SolveConfig& cfg) {
    if (h.kind != ProfileKind::AsymptoticallyConstant)
        throw MisuseError("energy comparison needs an asymptotically constant weight");

    ComparisonReport out;
    {
        auto [u, rep] = solve_heteroclinic(p, h, cfg);
        out.u_h = std::move(u);
        out.report_h = rep;
        out.m_L = rep.energy;
    }
    {
        // The constant problem at level h_inf, realized as a scaled potential
        // under the unit weight.
        const PotentialSpec p_inf = scale_potential(p, h.h_inf);
        const auto h_const = InhomogeneityProfile::constant();
        auto [u, rep] = solve_heteroclinic(p_inf, h_const, cfg);
        out.u_inf = std::move(u);
        out.report_inf = rep;
        out.m_inf_L = rep.energy;
    }
    out.gap = out.m_inf_L - out.m_L;
    out.test_function_energy = discrete_energy(p, h, out.u_inf);
    return out;
}

} // namespace hetero
