#include "hetero/inhomogeneity.hpp"

#include <cmath>
#include <sstream>

#include "hetero/errors.hpp"

namespace hetero {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

InhomogeneityProfile InhomogeneityProfile::constant() {
    InhomogeneityProfile p;
    p.kind = ProfileKind::Constant;
    p.eval = [](double) { return 1.0; };
    p.lower_bound = 1.0;
    p.descriptor = "constant";
    return p;
}

InhomogeneityProfile InhomogeneityProfile::periodic(double period,
                                                    std::function<double(double)> eval,
                                                    double lower_bound,
                                                    std::string descriptor) {
    if (!(period > 0.0)) throw ProfileParamError("periodic weight needs T > 0");
    if (!(lower_bound > 0.0)) throw ProfileParamError("periodic weight must be positive");
    InhomogeneityProfile p;
    p.kind = ProfileKind::Periodic;
    p.period_T = period;
    p.eval = std::move(eval);
    p.lower_bound = lower_bound;
    p.descriptor = std::move(descriptor);
    return p;
}

InhomogeneityProfile InhomogeneityProfile::periodic_sin(double period, double base, double amp) {
    if (!(base - std::abs(amp) > 0.0))
        throw ProfileParamError("periodic weight base + amp*sin must stay positive");
    const double T = period;
    auto eval = [T, base, amp](double x) { return base + amp * std::sin(2.0 * M_PI * x / T); };
    return periodic(period, eval, base - std::abs(amp),
                    "periodic:T=" + fmt(period) + ",base=" + fmt(base) + ",amp=" + fmt(amp));
}

InhomogeneityProfile InhomogeneityProfile::asymptotically_constant(
    double h_inf, std::function<double(double)> eval, double lower_bound,
    std::string descriptor) {
    if (!(h_inf > 0.0)) throw ProfileParamError("asymptotic weight needs h_inf > 0");
    if (!(lower_bound > 0.0))
        throw ProfileParamError("asymptotic weight must be bounded below by a positive constant");
    InhomogeneityProfile p;
    p.kind = ProfileKind::AsymptoticallyConstant;
    p.h_inf = h_inf;
    p.eval = std::move(eval);
    p.lower_bound = lower_bound;
    p.descriptor = std::move(descriptor);
    return p;
}

InhomogeneityProfile InhomogeneityProfile::gaussian_dip(double h_inf, double dip, double width) {
    if (!(dip > 0.0) || !(dip < h_inf))
        throw ProfileParamError("gaussian dip needs 0 < dip < h_inf");
    if (!(width > 0.0)) throw ProfileParamError("gaussian dip needs width > 0");
    auto eval = [h_inf, dip, width](double x) {
        const double t = x / width;
        return h_inf - dip * std::exp(-t * t);
    };
    return asymptotically_constant(
        h_inf, eval, h_inf - dip,
        "asymptotic:hinf=" + fmt(h_inf) + ",dip=" + fmt(dip) + ",width=" + fmt(width));
}

InhomogeneityProfile InhomogeneityProfile::diverging(std::function<double(double)> eval,
                                                     double alpha, std::string descriptor) {
    InhomogeneityProfile p;
    p.kind = ProfileKind::Diverging;
    p.alpha = alpha;
    p.eval = std::move(eval);
    p.lower_bound = 0.0;
    p.descriptor = std::move(descriptor);
    return p;
}

InhomogeneityProfile InhomogeneityProfile::power_law(double alpha, double c0) {
    if (!(alpha > 0.0)) throw ProfileParamError("power-law weight needs alpha > 0");
    if (c0 < 0.0) throw ProfileParamError("power-law weight needs c0 >= 0");
    auto eval = [alpha, c0](double x) { return c0 + std::pow(std::abs(x), alpha); };
    auto p = diverging(eval, alpha, "diverging:alpha=" + fmt(alpha) + ",c0=" + fmt(c0));
    p.lower_bound = c0;
    return p;
}

ValidationReport verify_profile(const InhomogeneityProfile& p, double domain_radius) {
    if (!(domain_radius > 0.0)) throw PreconditionError("domain_radius must be positive");
    ValidationReport rep;

    const int samples = 4097;
    const double step = 2.0 * domain_radius / static_cast<double>(samples - 1);
    auto sample_x = [&](int i) { return -domain_radius + step * static_cast<double>(i); };

    for (int i = 0; i < samples; ++i) {
        const double x = sample_x(i);
        const double v = p.eval(x);
        if (!std::isfinite(v))
            throw ProfileInvariantViolation("weight is not finite at x = " + fmt(x), x);
        if (v < p.lower_bound - 1e-12)
            throw ProfileInvariantViolation(
                "weight drops below its declared lower bound at x = " + fmt(x), x);
    }
    rep.note("finite and above the declared lower bound on " + std::to_string(samples) +
             " samples");

    switch (p.kind) {
        case ProfileKind::Constant: {
            for (int i = 0; i < samples; ++i) {
                const double x = sample_x(i);
                if (std::abs(p.eval(x) - 1.0) > 1e-12)
                    throw ProfileInvariantViolation("constant weight must be identically 1; x = " +
                                                        fmt(x), x);
            }
            rep.note("constant: identically 1");
            break;
        }
        case ProfileKind::Periodic: {
            const double T = p.period_T;
            for (int i = 0; i < samples; ++i) {
                const double x = sample_x(i);
                const double v = p.eval(x);
                if (!(v > 0.0))
                    throw ProfileInvariantViolation("periodic weight must be positive; x = " +
                                                        fmt(x), x);
                if (x + T <= domain_radius &&
                    std::abs(p.eval(x + T) - v) > 1e-12 * (1.0 + std::abs(v)))
                    throw ProfileInvariantViolation(
                        "weight is not T-periodic with the declared period at x = " + fmt(x), x);
            }
            rep.note("periodic: positive and T-periodic with T = " + fmt(T));
            break;
        }
        case ProfileKind::AsymptoticallyConstant: {
            bool strictly_below = false;
            for (int i = 0; i < samples; ++i) {
                const double x = sample_x(i);
                const double v = p.eval(x);
                if (v > p.h_inf + 1e-12)
                    throw ProfileInvariantViolation("weight exceeds h_inf at x = " + fmt(x), x);
                if (v < p.h_inf - 1e-6) strictly_below = true;
            }
            const double tail_gap = std::max(std::abs(p.eval(domain_radius) - p.h_inf),
                                             std::abs(p.eval(-domain_radius) - p.h_inf));
            if (tail_gap > 1e-3)
                rep.warn("tails have not reached h_inf at |x| = " + fmt(domain_radius) +
                         " (gap " + fmt(tail_gap) + "); enlarge the domain");
            rep.note(strictly_below
                         ? "asymptotic: h < h_inf on a set of positive measure"
                         : "asymptotic: h == h_inf on all samples (no strict energy gap expected)");
            break;
        }
        case ProfileKind::Diverging: {
            for (int i = 0; i < samples; ++i) {
                const double x = sample_x(i);
                if (p.eval(x) < 0.0)
                    throw ProfileInvariantViolation("diverging weight must be nonnegative; x = " +
                                                        fmt(x), x);
            }
            const double edge = std::min(p.eval(domain_radius), p.eval(-domain_radius));
            const double need = 10.0 * p.eval(0.0) + 1.0;
            if (edge < need)
                rep.warn("weight at the truncation boundary (" + fmt(edge) +
                         ") is below the divergence adequacy level " + fmt(need));
            rep.note("diverging: nonnegative, boundary value " + fmt(edge));
            break;
        }
    }
    rep.passed = true;
    return rep;
}

} // namespace hetero
