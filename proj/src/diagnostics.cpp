#include "hetero/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hetero/errors.hpp"

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

double cell_kinetic(const Profile& u, int i) {
    const double s = u.grid.spacing;
    const auto a = u.node(i);
    const auto b = u.node(i + 1);
    double kin = 0.0;
    for (int k = 0; k < u.dim; ++k) {
        const double d = (b[static_cast<size_t>(k)] - a[static_cast<size_t>(k)]) / s;
        kin += d * d;
    }
    return 0.5 * kin;
}

double weight_derivative(const InhomogeneityProfile& h, double x) {
    const double step = 1e-6 * (1.0 + std::abs(x));
    return (h.eval(x + step) - h.eval(x - step)) / (2.0 * step);
}

} // namespace

double first_integral_deviation(const PotentialSpec& p, const InhomogeneityProfile& h,
                                const Profile& u) {
    if (!h.is_constant())
        throw MisuseError("the first integral is conserved only for a constant weight");
    const int N = u.grid.node_count;
    double worst = 0.0;
    double w_left = p.eval_w(u.node(0));
    for (int i = 0; i + 1 < N; ++i) {
        const double w_right = p.eval_w(u.node(i + 1));
        const double e = cell_kinetic(u, i) - 0.5 * (w_left + w_right);
        worst = std::max(worst, std::abs(e));
        w_left = w_right;
    }
    return worst;
}

double weighted_energy_identity_residual(const PotentialSpec& p, const InhomogeneityProfile& h,
                                         const Profile& u) {
    const Grid& g = u.grid;
    const int N = g.node_count;
    const double s = g.spacing;

    std::vector<double> wv(static_cast<size_t>(N)), hv(static_cast<size_t>(N)),
        hp(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        const double x = g.node(i);
        wv[static_cast<size_t>(i)] = p.eval_w(u.node(i));
        hv[static_cast<size_t>(i)] = h.eval(x);
        hp[static_cast<size_t>(i)] = h.is_constant() ? 0.0 : weight_derivative(h, x);
    }

    // Cumulative trapezoid of h' W at the nodes.
    std::vector<double> acc(static_cast<size_t>(N), 0.0);
    for (int i = 0; i + 1 < N; ++i)
        acc[static_cast<size_t>(i + 1)] =
            acc[static_cast<size_t>(i)] +
            s * 0.5 * (hp[static_cast<size_t>(i)] * wv[static_cast<size_t>(i)] +
                       hp[static_cast<size_t>(i + 1)] * wv[static_cast<size_t>(i + 1)]);

    double base = 0.0;
    double worst = 0.0;
    for (int i = 0; i + 1 < N; ++i) {
        const double pot = 0.5 * (hv[static_cast<size_t>(i)] * wv[static_cast<size_t>(i)] +
                                  hv[static_cast<size_t>(i + 1)] * wv[static_cast<size_t>(i + 1)]);
        const double mid_acc = 0.5 * (acc[static_cast<size_t>(i)] + acc[static_cast<size_t>(i + 1)]);
        const double q = cell_kinetic(u, i) - pot + mid_acc;
        if (i == 0) base = q;
        worst = std::max(worst, std::abs(q - base));
    }
    return worst;
}

double equipartition_ratio(const PotentialSpec& p, const Profile& u) {
    const int N = u.grid.node_count;
    const double s = u.grid.spacing;
    double K = 0.0, P = 0.0;
    double w_left = p.eval_w(u.node(0));
    for (int i = 0; i + 1 < N; ++i) {
        const double w_right = p.eval_w(u.node(i + 1));
        K += s * cell_kinetic(u, i);
        P += s * 0.5 * (w_left + w_right);
        w_left = w_right;
    }
    const double total = K + P;
    if (total == 0.0) return 0.0;
    return std::abs(K - P) / total;
}

CheckReport clearing_out_check(const PotentialSpec& p, const Profile& u,
                               const ClearingOutParams& params) {
    if (!(params.epsilon > 0.0) || !(params.d > params.epsilon))
        throw PreconditionError("clearing-out needs 0 < epsilon < d");

    const Grid& g = u.grid;
    const int N = g.node_count;
    CheckReport rep;

    for (int sign = -1; sign <= 1; sign += 2) {
        const std::vector<double>& well = sign < 0 ? p.a_minus : p.a_plus;
        std::vector<double> d_i(static_cast<size_t>(N));
        std::vector<int> close;
        for (int i = 0; i < N; ++i) {
            d_i[static_cast<size_t>(i)] = dist(u.node(i), well);
            if (d_i[static_cast<size_t>(i)] <= params.epsilon) close.push_back(i);
        }
        if (close.size() < 2) continue;

        // Count admissible endpoint pairs (separation >= min_separation).
        for (size_t a = 0; a < close.size(); ++a) {
            const double xa = g.node(close[a]);
            auto it = std::lower_bound(close.begin() + static_cast<long>(a) + 1, close.end(),
                                       xa + params.min_separation,
                                       [&](int idx, double v) { return g.node(idx) < v; });
            rep.pairs_admissible += static_cast<long>(close.end() - it);
        }

        const int first = close.front();
        const int last = close.back();
        if (g.node(last) - g.node(first) < params.min_separation) continue;

        for (int k = first + 1; k < last; ++k) {
            if (d_i[static_cast<size_t>(k)] < params.d) continue;
            // Witness pair: nearest close nodes on each side, widened until
            // the separation rule holds (the outermost pair always does).
            auto it = std::lower_bound(close.begin(), close.end(), k);
            int li = *(it - 1);
            int rj = *it;
            if (g.node(rj) - g.node(li) < params.min_separation) li = first;
            if (g.node(rj) - g.node(li) < params.min_separation) rj = last;
            ClearingViolation v;
            v.x1 = g.node(li);
            v.x2 = g.node(rj);
            v.x_violation = g.node(k);
            v.well_sign = sign;
            v.distance = d_i[static_cast<size_t>(k)];
            rep.violations.push_back(v);
        }
    }
    rep.passed = rep.violations.empty();
    return rep;
}

double epsilon_threshold(const EnvelopeTable& env, double d, double c2) {
    if (env.rho_samples.empty()) throw PreconditionError("empty envelope table");
    const double delta = env.rho_samples.back();
    if (!(d > 0.0) || !(d <= delta + 1e-12))
        throw PreconditionError("clearing distance must satisfy 0 < d <= delta");
    if (!(c2 > 0.0)) throw PreconditionError("c2 must be positive");

    // Trapezoid of sqrt(V) over [d/2, d] on the table nodes plus endpoints.
    std::vector<double> xs = {0.5 * d};
    for (double rho : env.rho_samples)
        if (rho > 0.5 * d && rho < d) xs.push_back(rho);
    xs.push_back(d);

    double integral = 0.0;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        const double f0 = std::sqrt(std::max(0.0, env.interpolate(xs[i])));
        const double f1 = std::sqrt(std::max(0.0, env.interpolate(xs[i + 1])));
        integral += 0.5 * (f0 + f1) * (xs[i + 1] - xs[i]);
    }
    return 0.99 * std::min(0.5 * d, integral / c2);
}

double estimate_c2(const PotentialSpec& p, const InhomogeneityProfile& h, const Profile& u,
                   double x1, double x2) {
    const Grid& g = u.grid;
    const double s = g.spacing;
    const int i1 = static_cast<int>(std::lround((x1 + g.radius_R) / s));
    const int i2 = static_cast<int>(std::lround((x2 + g.radius_R) / s));
    if (i1 < 0 || i2 >= g.node_count)
        throw PreconditionError("competitor endpoints fall outside the grid");
    const double xa = g.node(i1);
    const double xb = g.node(i2);
    if (!(xb - xa >= 3.0 - 1e-9))
        throw PreconditionError("competitor endpoints must be at least 3 apart");

    const double dm = std::max(dist(u.node(i1), p.a_minus), dist(u.node(i2), p.a_minus));
    const double dp = std::max(dist(u.node(i1), p.a_plus), dist(u.node(i2), p.a_plus));
    const std::vector<double>* well = nullptr;
    double endpoint_dist = 0.0;
    if (dp <= p.delta) {
        well = &p.a_plus;
        endpoint_dist = dp;
    } else if (dm <= p.delta) {
        well = &p.a_minus;
        endpoint_dist = dm;
    } else {
        throw PreconditionError("both endpoints must lie in the tube of one well");
    }

    // Ramp to the well over one unit, flat middle, ramp back.
    auto competitor_at = [&](int i) {
        const double x = g.node(i);
        std::vector<double> v(static_cast<size_t>(u.dim));
        double t;
        std::span<const double> anchor;
        if (x <= xa + 1.0) {
            t = std::min(1.0, x - xa);
            anchor = u.node(i1);
        } else if (x >= xb - 1.0) {
            t = std::min(1.0, xb - x);
            anchor = u.node(i2);
        } else {
            t = 1.0;
            anchor = *well;
        }
        for (int k = 0; k < u.dim; ++k)
            v[static_cast<size_t>(k)] = (1.0 - t) * anchor[static_cast<size_t>(k)] +
                                        t * (*well)[static_cast<size_t>(k)];
        return v;
    };

    double J = 0.0;
    std::vector<double> left = competitor_at(i1);
    for (int i = i1; i < i2; ++i) {
        std::vector<double> right = competitor_at(i + 1);
        double kin = 0.0;
        for (int k = 0; k < u.dim; ++k) {
            const double d = (right[static_cast<size_t>(k)] - left[static_cast<size_t>(k)]) / s;
            kin += d * d;
        }
        const double pot = 0.5 * (h.eval(g.node(i)) * p.eval_w(left) +
                                  h.eval(g.node(i + 1)) * p.eval_w(right));
        J += s * (0.5 * kin + pot);
        left = std::move(right);
    }
    if (endpoint_dist == 0.0) return 0.0;
    return J / endpoint_dist;
}

std::vector<MeanValuePoint> mean_value_points(const PotentialSpec& p,
                                              const InhomogeneityProfile& h, const Profile& u,
                                              double zeta, double M) {
    if (!(M >= 3.0)) throw PreconditionError("interval length M must be at least 3");
    if (!(zeta > 0.0)) throw PreconditionError("zeta must be positive");

    const Grid& g = u.grid;
    const double R = g.radius_R;
    const double s = g.spacing;
    std::vector<MeanValuePoint> out;

    const int k_lo = static_cast<int>(std::ceil(-R / (2.0 * M) - 1e-12));
    const int k_hi = static_cast<int>(std::floor((R / M - 1.0) / 2.0 + 1e-12));

    for (int k = k_lo; k <= k_hi; ++k) {
        const double lo = 2.0 * static_cast<double>(k) * M;
        const double hi = lo + M;
        if (lo < -R - 1e-12 || hi > R + 1e-12) continue;

        MeanValuePoint mv;
        mv.interval_lo = lo;
        mv.interval_hi = hi;
        mv.w_value = std::numeric_limits<double>::infinity();

        double energy = 0.0;
        double length = 0.0;
        double w_left = 0.0;
        bool have_left = false;
        for (int i = 0; i + 1 < g.node_count; ++i) {
            const double x0 = g.node(i);
            const double x1 = g.node(i + 1);
            if (x0 < lo - 1e-12 || x1 > hi + 1e-12) {
                have_left = false;
                continue;
            }
            if (!have_left) {
                w_left = p.eval_w(u.node(i));
                have_left = true;
                const double wl = w_left;
                if (wl < mv.w_value) {
                    mv.w_value = wl;
                    mv.x = x0;
                }
            }
            const double w_right = p.eval_w(u.node(i + 1));
            if (w_right < mv.w_value) {
                mv.w_value = w_right;
                mv.x = x1;
            }
            energy += s * (cell_kinetic(u, i) +
                           0.5 * (h.eval(x0) * w_left + h.eval(x1) * w_right));
            length += s;
            w_left = w_right;
        }
        if (!(length > 0.0)) continue;
        mv.avg_density = energy / length;
        mv.bound_ok = !(mv.avg_density <= zeta) || (mv.w_value <= zeta);
        out.push_back(mv);
    }
    return out;
}

namespace {

struct ShootOutcome {
    enum class Kind { Overshoot, Undershoot, Landed } kind = Kind::Undershoot;
    double terminal_gap = 0.0;
};

// One RK4 step of (u, v) -> (v, h(x) W'(u)).
void rk4_step(const PotentialSpec& p, const InhomogeneityProfile& h, double x, double dt,
              double& u, double& v) {
    auto f = [&](double xx, double uu) {
        double g1;
        std::span<double> gs(&g1, 1);
        std::span<const double> us(&uu, 1);
        p.eval_grad(us, gs);
        return h.eval(xx) * g1;
    };
    const double k1u = v, k1v = f(x, u);
    const double k2u = v + 0.5 * dt * k1v, k2v = f(x + 0.5 * dt, u + 0.5 * dt * k1u);
    const double k3u = v + 0.5 * dt * k2v, k3v = f(x + 0.5 * dt, u + 0.5 * dt * k2u);
    const double k4u = v + dt * k3v, k4v = f(x + dt, u + dt * k3u);
    u += dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

// Integrates rightward from (0, mid, slope) and classifies the trajectory.
// When `samples` is given, fills node values for x >= 0 (node stride is four
// integration steps). Once the trajectory has approached the well to within
// snap distance, any departure or crossing is treated as the blowup of the
// unstable mode and the remainder is held at the well.
ShootOutcome shoot_right(const PotentialSpec& p, const InhomogeneityProfile& h, const Grid& g,
                         double slope, std::vector<double>* samples) {
    const double a_plus = p.a_plus[0];
    const double dir = p.a_plus[0] > p.a_minus[0] ? 1.0 : -1.0;
    const double mid = 0.5 * (p.a_plus[0] + p.a_minus[0]);
    const double dt = g.spacing / 4.0;
    const int steps_total = (g.node_count - 1) / 2 * 4;
    const double snap = 1e-7;

    double u = mid, v = slope;
    double best_gap = std::abs(u - a_plus);
    bool frozen = false;
    bool landed = false;

    if (samples) {
        samples->assign(1, u);
        samples->reserve(static_cast<size_t>(steps_total / 4) + 1);
    }

    ShootOutcome out;
    out.kind = ShootOutcome::Kind::Undershoot;
    for (int step = 1; step <= steps_total; ++step) {
        if (!frozen) {
            const double x = dt * static_cast<double>(step - 1);
            rk4_step(p, h, x, dt, u, v);
            const double gap = std::abs(u - a_plus);
            const bool crossed = (u - a_plus) * dir > 0.0;
            const bool departing = gap > 10.0 * best_gap;
            if (best_gap < snap && (crossed || departing)) {
                u = a_plus;
                v = 0.0;
                frozen = true;
                landed = true;
            } else if (crossed) {
                out.kind = ShootOutcome::Kind::Overshoot;
                out.terminal_gap = gap;
                if (!samples) return out;
                u = a_plus;   // cap the blowup so the sample vector stays finite
                v = 0.0;
                frozen = true;
            } else if (v * dir <= 0.0 && gap > snap) {
                out.kind = ShootOutcome::Kind::Undershoot;
                out.terminal_gap = gap;
                if (!samples) return out;
            }
            if (gap < best_gap) best_gap = gap;
        }
        if (samples && step % 4 == 0) samples->push_back(u);
    }
    if (out.kind != ShootOutcome::Kind::Overshoot) {
        out.terminal_gap = landed ? best_gap : std::abs(u - a_plus);
        if (landed || out.terminal_gap <= 1e-10) out.kind = ShootOutcome::Kind::Landed;
    }
    return out;
}

} // namespace

Profile shooting_oracle_scalar(const PotentialSpec& p, const InhomogeneityProfile& h,
                               const Grid& g) {
    if (p.dim != 1) throw MisuseError("the shooting oracle handles scalar problems only");
    const double a_minus = p.a_minus[0];
    const double a_plus = p.a_plus[0];
    const double mid = 0.5 * (a_minus + a_plus);
    const double dir = a_plus > a_minus ? 1.0 : -1.0;
    const double dt = g.spacing / 4.0;

    Profile out(g, 1);
    const int c = g.center_index();

    if (h.is_constant()) {
        // Slope from the conserved quantity; the slope is re-projected onto
        // sqrt(2 W) after every step, which pins the trajectory to the
        // connection's level set and keeps the tails from blowing up.
        double wm = 0.0;
        {
            std::span<const double> ms(&mid, 1);
            wm = p.eval_w(ms);
        }
        const double slope0 = dir * std::sqrt(2.0 * wm);

        auto march = [&](int side) {
            double u = mid, v = slope0;
            out.node(c)[0] = mid;
            const int steps = (g.node_count - 1) / 2 * 4;
            for (int step = 1; step <= steps; ++step) {
                const double x = dt * static_cast<double>(step - 1) * side;
                rk4_step(p, h, x, dt * side, u, v);
                // clamp past the target well, then re-project the slope
                if (side > 0 && (u - a_plus) * dir >= 0.0) u = a_plus;
                if (side < 0 && (u - a_minus) * dir <= 0.0) u = a_minus;
                std::span<const double> us(&u, 1);
                v = dir * std::sqrt(std::max(0.0, 2.0 * p.eval_w(us)));
                if (step % 4 == 0) out.node(c + side * (step / 4))[0] = u;
            }
        };
        march(+1);
        march(-1);
        return out;
    }

    // Odd-about-the-midpoint ansatz: needs an even weight and a potential
    // symmetric under reflection about the midpoint.
    for (int i = 0; i <= c; ++i) {
        const double x = g.node(c + i);
        const double hv = h.eval(x);
        if (std::abs(h.eval(-x) - hv) > 1e-9 * (1.0 + std::abs(hv)))
            throw ShootingFailure("weight is not even; the odd-solution ansatz does not apply");
    }
    for (int i = 0; i <= 100; ++i) {
        const double t = 0.6 * p.well_gap() * static_cast<double>(i) / 100.0;
        const double up = mid + t, um = mid - t;
        std::span<const double> ups(&up, 1), ums(&um, 1);
        if (std::abs(p.eval_w(ups) - p.eval_w(ums)) > 1e-9 * (1.0 + p.eval_w(ups)))
            throw ShootingFailure("potential is not symmetric about the midpoint");
    }

    double wm = 0.0;
    {
        std::span<const double> ms(&mid, 1);
        wm = p.eval_w(ms);
    }

    double s_lo = 0.0;
    if (shoot_right(p, h, g, s_lo, nullptr).kind == ShootOutcome::Kind::Overshoot)
        throw ShootingFailure("zero slope already overshoots; no bracket");
    double s_hi = std::max(1.0, dir * std::sqrt(2.0 * wm));
    bool bracketed = false;
    for (int i = 0; i < 80; ++i) {
        if (shoot_right(p, h, g, dir * s_hi, nullptr).kind == ShootOutcome::Kind::Overshoot) {
            bracketed = true;
            break;
        }
        s_hi *= 2.0;
    }
    if (!bracketed) throw ShootingFailure("could not bracket the connecting slope");

    double s_cur = 0.5 * (s_lo + s_hi);
    for (int it = 0; it < 200; ++it) {
        s_cur = 0.5 * (s_lo + s_hi);
        const auto res = shoot_right(p, h, g, dir * s_cur, nullptr);
        if (res.kind == ShootOutcome::Kind::Landed && res.terminal_gap <= 1e-10) break;
        if (res.kind == ShootOutcome::Kind::Overshoot) s_hi = s_cur;
        else s_lo = s_cur;
        if (s_hi - s_lo <= 1e-17 * std::max(1.0, s_hi)) break;
    }

    std::vector<double> samples;
    shoot_right(p, h, g, dir * 0.5 * (s_lo + s_hi), &samples);
    for (int i = 0; i <= c; ++i) {
        const double u = samples[static_cast<size_t>(i)];
        out.node(c + i)[0] = u;
        out.node(c - i)[0] = a_minus + a_plus - u;   // reflected branch
    }
    return out;
}

namespace {

// Abscissa where |u - a-| first reaches half the well gap, located by linear
// interpolation of the distance between the bracketing nodes.
double half_crossing(const Profile& u, const PotentialSpec& p) {
    const double half = 0.5 * p.well_gap();
    const Grid& g = u.grid;
    double prev = dist(u.node(0), p.a_minus);
    for (int i = 1; i < g.node_count; ++i) {
        const double cur = dist(u.node(i), p.a_minus);
        if (prev < half && cur >= half) {
            const double t = (half - prev) / (cur - prev);
            return g.node(i - 1) + t * g.spacing;
        }
        prev = cur;
    }
    throw NoTransitionError("path never reaches the midpoint distance from a-");
}

} // namespace

double aligned_sup_distance(const Profile& a, const Profile& b, const PotentialSpec& p) {
    if (a.dim != b.dim) throw PreconditionError("paths have different dimensions");
    const double shift = half_crossing(a, p) - half_crossing(b, p);

    const Grid& gb = b.grid;
    double sup = 0.0;
    int compared = 0;
    for (int i = 0; i < a.grid.node_count; ++i) {
        const double xb = a.grid.node(i) - shift;
        if (xb < -gb.radius_R || xb > gb.radius_R) continue;
        const double pos = (xb + gb.radius_R) / gb.spacing;
        int j = static_cast<int>(std::floor(pos));
        if (j >= gb.node_count - 1) j = gb.node_count - 2;
        if (j < 0) j = 0;
        const double t = std::min(1.0, std::max(0.0, pos - static_cast<double>(j)));
        const auto b0 = b.node(j);
        const auto b1 = b.node(j + 1);
        const auto ai = a.node(i);
        for (int k = 0; k < a.dim; ++k) {
            const double bv = (1.0 - t) * b0[static_cast<size_t>(k)] + t * b1[static_cast<size_t>(k)];
            sup = std::max(sup, std::abs(ai[static_cast<size_t>(k)] - bv));
        }
        ++compared;
    }
    if (compared == 0) throw PreconditionError("aligned paths do not overlap");
    return sup;
}

ClearingOutParams make_clearing_params(const PotentialSpec& p, const EnvelopeTable& env,
                                       const InhomogeneityProfile& h, const Profile& u) {
    ClearingOutParams params;
    params.d = p.delta;
    params.competitor_energy = discrete_energy(p, h, linear_competitor(p, u.grid));

    const double vmax = *std::max_element(env.v_values.begin(), env.v_values.end());
    const double R = u.grid.radius_R;
    params.zeta = std::max(0.1 * vmax, 3.0 * params.competitor_energy / R);
    params.M = std::max(3.0, params.competitor_energy / params.zeta);
    if (h.kind == ProfileKind::Periodic)
        params.M = h.period_T * std::ceil(params.M / h.period_T);

    // Empirical C2 from tube-competitor pairs taken along the run itself.
    const Grid& g = u.grid;
    double c2 = 0.0;
    auto try_pair = [&](double x1, double x2) {
        if (x1 < -R || x2 > R || !(x2 - x1 >= 3.0)) return;
        try {
            c2 = std::max(c2, estimate_c2(p, h, u, x1, x2));
        } catch (const PreconditionError&) {
        }
    };
    // entry into the a+ tube from the left, and into the a- tube from the right
    for (int i = 0; i < g.node_count; ++i) {
        if (dist(u.node(i), p.a_plus) <= 0.5 * p.delta) {
            try_pair(g.node(i), g.node(i) + 3.0);
            try_pair(g.node(i), R - 1.0);
            break;
        }
    }
    for (int i = g.node_count - 1; i >= 0; --i) {
        if (dist(u.node(i), p.a_minus) <= 0.5 * p.delta) {
            try_pair(g.node(i) - 3.0, g.node(i));
            try_pair(-R + 1.0, g.node(i));
            break;
        }
    }
    params.c2_estimate = std::max(c2, 1e-6);

    params.epsilon = epsilon_threshold(env, params.d, params.c2_estimate);
    {
        // keep the integral the threshold was checked against
        std::vector<double> xs = {0.5 * params.d};
        for (double rho : env.rho_samples)
            if (rho > 0.5 * params.d && rho < params.d) xs.push_back(rho);
        xs.push_back(params.d);
        double integral = 0.0;
        for (size_t i = 0; i + 1 < xs.size(); ++i) {
            const double f0 = std::sqrt(std::max(0.0, env.interpolate(xs[i])));
            const double f1 = std::sqrt(std::max(0.0, env.interpolate(xs[i + 1])));
            integral += 0.5 * (f0 + f1) * (xs[i + 1] - xs[i]);
        }
        params.epsilon_integral = integral;
    }
    return params;
}

} // namespace hetero
