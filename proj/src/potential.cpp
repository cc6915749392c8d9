#include "hetero/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

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

double norm(std::span<const double> u) {
    double s = 0.0;
    for (double x : u) s += x * x;
    return std::sqrt(s);
}

// Van der Corput radical inverse in the given base.
double radical_inverse(unsigned base, unsigned long long k) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (k > 0) {
        r += f * static_cast<double>(k % base);
        k /= base;
        f *= inv;
    }
    return r;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::string point_str(std::span<const double> u) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < u.size(); ++i) {
        if (i) os << ", ";
        os << u[i];
    }
    os << ")";
    return os.str();
}

} // namespace

double PotentialSpec::well_gap() const {
    return dist(a_plus, a_minus);
}

void PotentialSpec::eval_grad(std::span<const double> u, std::span<double> out) const {
    if (grad_w) {
        grad_w(u, out);
        return;
    }
    // Central differences, step scaled with the point magnitude.
    std::vector<double> up(u.begin(), u.end());
    const double step = 1e-6 * (1.0 + norm(u));
    for (int k = 0; k < dim; ++k) {
        const double saved = up[k];
        up[k] = saved + step;
        const double wp = w(up);
        up[k] = saved - step;
        const double wm = w(up);
        up[k] = saved;
        out[k] = (wp - wm) / (2.0 * step);
    }
}

double EnvelopeTable::interpolate(double rho) const {
    if (rho_samples.empty()) throw PreconditionError("envelope table is empty");
    if (rho <= rho_samples.front()) return v_values.front();
    if (rho >= rho_samples.back()) return v_values.back();
    const auto it = std::upper_bound(rho_samples.begin(), rho_samples.end(), rho);
    const size_t j = static_cast<size_t>(it - rho_samples.begin());
    const double r0 = rho_samples[j - 1], r1 = rho_samples[j];
    const double t = (rho - r0) / (r1 - r0);
    return (1.0 - t) * v_values[j - 1] + t * v_values[j];
}

PotentialSpec make_quartic_scalar() {
    PotentialSpec p;
    p.dim = 1;
    p.a_minus = {-1.0};
    p.a_plus = {1.0};
    p.w = [](std::span<const double> u) {
        const double q = u[0] * u[0] - 1.0;
        return 0.25 * q * q;
    };
    p.grad_w = [](std::span<const double> u, std::span<double> g) {
        g[0] = u[0] * u[0] * u[0] - u[0];
    };
    p.delta = 0.5;
    p.smoothness_order = Smoothness::C2;
    p.name = "quartic";
    return p;
}

PotentialSpec make_product_vector(std::vector<double> a_minus, std::vector<double> a_plus) {
    if (a_minus.size() != a_plus.size() || a_minus.empty())
        throw DegenerateMinimaError("wells must be nonempty points of equal dimension");
    if (a_minus == a_plus)
        throw DegenerateMinimaError("the two wells coincide");

    PotentialSpec p;
    p.dim = static_cast<int>(a_minus.size());
    p.a_minus = std::move(a_minus);
    p.a_plus = std::move(a_plus);
    const std::vector<double> am = p.a_minus, ap = p.a_plus;
    p.w = [am, ap](std::span<const double> u) {
        double dm = 0.0, dp = 0.0;
        for (size_t i = 0; i < u.size(); ++i) {
            const double em = u[i] - am[i];
            const double ep = u[i] - ap[i];
            dm += em * em;
            dp += ep * ep;
        }
        return 0.25 * dm * dp;
    };
    p.grad_w = [am, ap](std::span<const double> u, std::span<double> g) {
        double dm = 0.0, dp = 0.0;
        for (size_t i = 0; i < u.size(); ++i) {
            const double em = u[i] - am[i];
            const double ep = u[i] - ap[i];
            dm += em * em;
            dp += ep * ep;
        }
        for (size_t i = 0; i < u.size(); ++i)
            g[i] = 0.5 * dp * (u[i] - am[i]) + 0.5 * dm * (u[i] - ap[i]);
    };
    p.delta = 0.25 * p.well_gap();
    p.smoothness_order = Smoothness::C2;
    p.name = "product";
    return p;
}

PotentialSpec make_polynomial_scalar(std::vector<double> coeffs,
                                     double a_minus, double a_plus, double delta) {
    if (coeffs.empty()) throw PreconditionError("empty coefficient table");
    if (a_minus == a_plus) throw DegenerateMinimaError("the two wells coincide");

    PotentialSpec p;
    p.dim = 1;
    p.a_minus = {a_minus};
    p.a_plus = {a_plus};
    const std::vector<double> c = coeffs;
    p.w = [c](std::span<const double> u) {
        double v = 0.0;
        for (size_t k = c.size(); k-- > 0;) v = v * u[0] + c[k];
        return v;
    };
    p.grad_w = [c](std::span<const double> u, std::span<double> g) {
        double v = 0.0;
        for (size_t k = c.size(); k-- > 1;) v = v * u[0] + c[k] * static_cast<double>(k);
        g[0] = v;
    };
    p.delta = delta > 0.0 ? delta : 0.25 * std::abs(a_plus - a_minus);
    p.smoothness_order = Smoothness::C2;
    p.name = "polynomial";
    return p;
}

std::vector<std::vector<double>> direction_sequence(int n, int count) {
    if (n < 1 || count < 1) throw PreconditionError("direction_sequence: bad arguments");
    std::vector<std::vector<double>> dirs;
    dirs.reserve(static_cast<size_t>(count));

    const double golden = 0.6180339887498948482;  // frac of the golden ratio

    if (n == 1) {
        for (int k = 0; k < count; ++k)
            dirs.push_back({k % 2 == 0 ? 1.0 : -1.0});
        return dirs;
    }
    if (n == 2) {
        for (int k = 0; k < count; ++k) {
            const double t = std::fmod(static_cast<double>(k) * golden, 1.0);
            dirs.push_back({std::cos(2.0 * M_PI * t), std::sin(2.0 * M_PI * t)});
        }
        return dirs;
    }
    if (n == 3) {
        for (int k = 0; k < count; ++k) {
            const double z = 2.0 * radical_inverse(2, static_cast<unsigned long long>(k) + 1) - 1.0;
            const double t = std::fmod(static_cast<double>(k) * golden, 1.0);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            dirs.push_back({r * std::cos(2.0 * M_PI * t), r * std::sin(2.0 * M_PI * t), z});
        }
        return dirs;
    }

    // n > 3: Halton points pushed through Box-Muller, then normalized.
    const int pairs = (n + 1) / 2;
    for (int k = 0; k < count; ++k) {
        std::vector<double> d(static_cast<size_t>(n));
        for (int j = 0; j < pairs; ++j) {
            const unsigned b1 = kPrimes[(2 * j) % 12];
            const unsigned b2 = kPrimes[(2 * j + 1) % 12];
            const double u1 = std::max(radical_inverse(b1, static_cast<unsigned long long>(k) + 1), 1e-12);
            const double u2 = radical_inverse(b2, static_cast<unsigned long long>(k) + 1);
            const double r = std::sqrt(-2.0 * std::log(u1));
            if (2 * j < n) d[static_cast<size_t>(2 * j)] = r * std::cos(2.0 * M_PI * u2);
            if (2 * j + 1 < n) d[static_cast<size_t>(2 * j + 1)] = r * std::sin(2.0 * M_PI * u2);
        }
        double nn = norm(d);
        if (nn < 1e-12) {
            d.assign(static_cast<size_t>(n), 0.0);
            d[0] = 1.0;
            nn = 1.0;
        }
        for (double& x : d) x /= nn;
        dirs.push_back(std::move(d));
    }
    return dirs;
}

ValidationReport validate_assumptions(const PotentialSpec& p,
                                      double sample_radius, int sample_count) {
    const double gap = p.well_gap();
    if (!(sample_radius > gap))
        throw PreconditionError("sample_radius must exceed the distance between the wells");
    if (sample_count < 1000)
        throw PreconditionError("sample_count must be at least 1000");
    if (!(p.delta > 0.0) || !(p.delta < gap))
        throw PreconditionError("tube radius must satisfy 0 < delta < |a+ - a-|");

    ValidationReport rep;
    const double wtol = 1e-12;

    const double wm = p.eval_w(p.a_minus);
    const double wp = p.eval_w(p.a_plus);
    if (std::abs(wm) > wtol)
        throw AssumptionViolation("W(a-) = " + std::to_string(wm) + " is not zero at " +
                                      point_str(p.a_minus),
                                  AssumptionViolation::Which::WellValue, p.a_minus);
    if (std::abs(wp) > wtol)
        throw AssumptionViolation("W(a+) = " + std::to_string(wp) + " is not zero at " +
                                      point_str(p.a_plus),
                                  AssumptionViolation::Which::WellValue, p.a_plus);
    rep.note("wells: W(a-) and W(a+) vanish to 1e-12");

    // Midpoint-centered Halton cloud in the ball, minima neighborhoods excluded.
    std::vector<double> center(static_cast<size_t>(p.dim));
    for (int k = 0; k < p.dim; ++k) center[static_cast<size_t>(k)] = 0.5 * (p.a_minus[static_cast<size_t>(k)] + p.a_plus[static_cast<size_t>(k)]);
    const double exclusion = 1e-3 * gap;

    std::vector<double> u(static_cast<size_t>(p.dim));
    int kept = 0;
    unsigned long long k = 1;
    while (kept < sample_count) {
        double r2 = 0.0;
        for (int j = 0; j < p.dim; ++j) {
            const double t = 2.0 * radical_inverse(kPrimes[j % 12], k) - 1.0;
            u[static_cast<size_t>(j)] = t;
            r2 += t * t;
        }
        ++k;
        if (r2 > 1.0) continue;   // rejection keeps the cloud inside the ball
        for (int j = 0; j < p.dim; ++j)
            u[static_cast<size_t>(j)] = center[static_cast<size_t>(j)] + sample_radius * u[static_cast<size_t>(j)];
        ++kept;
        if (dist(u, p.a_minus) < exclusion || dist(u, p.a_plus) < exclusion) continue;
        const double wu = p.eval_w(u);
        if (!(wu > 0.0)) {
            ValidationReport::Violation v;
            v.what = "W <= 0 away from the wells";
            v.point.assign(u.begin(), u.end());
            rep.violations.push_back(v);
            rep.passed = false;
            throw AssumptionViolation("W(" + point_str(u) + ") = " + std::to_string(wu) +
                                          " is not positive away from the wells",
                                      AssumptionViolation::Which::InteriorPositivity,
                                      std::vector<double>(u.begin(), u.end()));
        }
    }
    rep.note("interior: W > 0 on " + std::to_string(sample_count) + " ball samples");

    // Growth proxy: minimum of W over directions on the bounding sphere.
    const auto dirs = direction_sequence(p.dim, std::max(2, std::min(sample_count, 4096)));
    double min_sphere = std::numeric_limits<double>::infinity();
    std::vector<double> argmin(static_cast<size_t>(p.dim));
    for (const auto& nu : dirs) {
        for (int j = 0; j < p.dim; ++j)
            u[static_cast<size_t>(j)] = center[static_cast<size_t>(j)] + sample_radius * nu[static_cast<size_t>(j)];
        const double wu = p.eval_w(u);
        if (wu < min_sphere) {
            min_sphere = wu;
            argmin.assign(u.begin(), u.end());
        }
    }
    const double sphere_threshold = 1e-8;
    if (!(min_sphere > sphere_threshold))
        throw AssumptionViolation("minimum of W on the radius-" + std::to_string(sample_radius) +
                                      " sphere is " + std::to_string(min_sphere) +
                                      ", too small at " + point_str(argmin),
                                  AssumptionViolation::Which::GrowthAtInfinity, argmin);
    rep.note("growth: min W on the bounding sphere = " + std::to_string(min_sphere));
    rep.passed = true;
    return rep;
}

EnvelopeTable build_envelope(const PotentialSpec& p, int rho_count, int sphere_sample_count) {
    if (rho_count < 8) throw PreconditionError("rho_count must be at least 8");
    const int min_dirs = p.dim == 1 ? 2 : 64;
    if (sphere_sample_count < min_dirs)
        throw PreconditionError("sphere_sample_count too small for this dimension");

    EnvelopeTable table;
    table.sphere_sample_count = sphere_sample_count;
    table.rho_samples.resize(static_cast<size_t>(rho_count));
    table.v_values.resize(static_cast<size_t>(rho_count));

    const auto dirs = direction_sequence(p.dim, sphere_sample_count);
    std::vector<double> u(static_cast<size_t>(p.dim));

    for (int i = 0; i < rho_count; ++i) {
        const double rho = p.delta * static_cast<double>(i) / static_cast<double>(rho_count - 1);
        table.rho_samples[static_cast<size_t>(i)] = rho;
        if (i == 0) {
            table.v_values[0] = 0.0;
            continue;
        }
        double vmin = std::numeric_limits<double>::infinity();
        for (const auto& nu : dirs) {
            for (int j = 0; j < p.dim; ++j)
                u[static_cast<size_t>(j)] = p.a_minus[static_cast<size_t>(j)] + rho * nu[static_cast<size_t>(j)];
            vmin = std::min(vmin, p.eval_w(u));
            for (int j = 0; j < p.dim; ++j)
                u[static_cast<size_t>(j)] = p.a_plus[static_cast<size_t>(j)] + rho * nu[static_cast<size_t>(j)];
            vmin = std::min(vmin, p.eval_w(u));
        }
        if (!(vmin > 0.0))
            throw EnvelopeDegenerateError("sphere envelope vanishes at rho = " + std::to_string(rho));
        table.v_values[static_cast<size_t>(i)] = vmin;
    }
    return table;
}

double modica_lower_bound(const PotentialSpec& p, int quadrature_points) {
    if (quadrature_points < 100) throw PreconditionError("need at least 100 quadrature points");
    const double len = p.well_gap();
    std::vector<double> u(static_cast<size_t>(p.dim));
    double sum = 0.0;
    for (int i = 0; i < quadrature_points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(quadrature_points - 1);
        for (int j = 0; j < p.dim; ++j)
            u[static_cast<size_t>(j)] = (1.0 - t) * p.a_minus[static_cast<size_t>(j)] + t * p.a_plus[static_cast<size_t>(j)];
        const double f = std::sqrt(std::max(0.0, p.eval_w(u)));
        const double wgt = (i == 0 || i == quadrature_points - 1) ? 0.5 : 1.0;
        sum += wgt * f;
    }
    const double dt = len / static_cast<double>(quadrature_points - 1);
    return std::sqrt(2.0) * sum * dt;
}

} // namespace hetero
