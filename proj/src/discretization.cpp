#include "hetero/discretization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hetero/errors.hpp"

namespace hetero {

namespace {

double dist_sq(std::span<const double> u, std::span<const double> v) {
    double s = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        s += d * d;
    }
    return s;
}

} // namespace

Grid::Grid(double radius, int nodes) : radius_R(radius), node_count(nodes) {
    if (!(radius > 0.0)) throw PreconditionError("grid radius must be positive");
    if (nodes < 3 || nodes % 2 == 0)
        throw PreconditionError("node_count must be an odd integer >= 3");
    spacing = 2.0 * radius / static_cast<double>(nodes - 1);
}

Grid Grid::with_spacing(double radius, double spacing) {
    if (!(spacing > 0.0)) throw PreconditionError("spacing must be positive");
    int half = static_cast<int>(std::ceil(radius / spacing - 1e-12));
    if (half < 1) half = 1;
    return Grid(static_cast<double>(half) * spacing, 2 * half + 1);
}

Profile::Profile(Grid g, int d) : grid(g), dim(d) {
    if (d < 1) throw PreconditionError("profile dimension must be positive");
    values.assign(static_cast<size_t>(g.node_count) * static_cast<size_t>(d), 0.0);
}

void Profile::pin_endpoints(const PotentialSpec& p) {
    set_node(0, p.a_minus);
    set_node(grid.node_count - 1, p.a_plus);
}

ConstraintSpec::ConstraintSpec(double L_, double delta_) : L(L_), delta(delta_) {
    if (!(L >= 2.0)) throw PreconditionError("constraint onset must satisfy L >= 2");
    if (!(delta > 0.0)) throw PreconditionError("tube radius must be positive");
}

std::vector<double> tabulate_weight(const InhomogeneityProfile& h, const Grid& g) {
    std::vector<double> hv(static_cast<size_t>(g.node_count));
    for (int i = 0; i < g.node_count; ++i) hv[static_cast<size_t>(i)] = h.eval(g.node(i));
    return hv;
}

double discrete_energy_cached(const PotentialSpec& p, std::span<const double> h_values,
                              const Profile& u) {
    const Grid& g = u.grid;
    const double s = g.spacing;
    const int N = g.node_count;
    const int n = u.dim;

    double J = 0.0;
    double w_left = p.eval_w(u.node(0));
    for (int i = 0; i + 1 < N; ++i) {
        double kin = 0.0;
        const auto a = u.node(i);
        const auto b = u.node(i + 1);
        for (int k = 0; k < n; ++k) {
            const double d = (b[static_cast<size_t>(k)] - a[static_cast<size_t>(k)]) / s;
            kin += d * d;
        }
        const double w_right = p.eval_w(b);
        const double pot = 0.5 * (h_values[static_cast<size_t>(i)] * w_left +
                                  h_values[static_cast<size_t>(i + 1)] * w_right);
        J += s * (0.5 * kin + pot);
        w_left = w_right;
    }
    return J;
}

double discrete_energy(const PotentialSpec& p, const InhomogeneityProfile& h, const Profile& u) {
    const auto hv = tabulate_weight(h, u.grid);
    return discrete_energy_cached(p, hv, u);
}

std::vector<double> discrete_gradient_cached(const PotentialSpec& p,
                                             std::span<const double> h_values,
                                             const Profile& u) {
    const Grid& g = u.grid;
    const double s = g.spacing;
    const int N = g.node_count;
    const int n = u.dim;

    std::vector<double> grad(static_cast<size_t>(N) * static_cast<size_t>(n), 0.0);
    std::vector<double> gw(static_cast<size_t>(n));
    for (int i = 1; i + 1 < N; ++i) {
        const auto um = u.node(i - 1);
        const auto uc = u.node(i);
        const auto up = u.node(i + 1);
        p.eval_grad(uc, gw);
        double* out = grad.data() + static_cast<size_t>(i) * static_cast<size_t>(n);
        for (int k = 0; k < n; ++k) {
            const double second = (up[static_cast<size_t>(k)] - 2.0 * uc[static_cast<size_t>(k)] +
                                   um[static_cast<size_t>(k)]) / (s * s);
            out[k] = s * (-second + h_values[static_cast<size_t>(i)] * gw[static_cast<size_t>(k)]);
        }
    }
    return grad;
}

std::vector<double> discrete_gradient(const PotentialSpec& p, const InhomogeneityProfile& h,
                                      const Profile& u) {
    const auto hv = tabulate_weight(h, u.grid);
    return discrete_gradient_cached(p, hv, u);
}

int project_constraints_inplace(Profile& u, const ConstraintSpec& c, const PotentialSpec& p) {
    const Grid& g = u.grid;
    const double tol = 1e-12 * g.radius_R;
    int moved = 0;
    for (int i = 0; i < g.node_count; ++i) {
        const double x = g.node(i);
        const std::vector<double>* well = nullptr;
        if (x <= -c.L + tol) well = &p.a_minus;
        else if (x >= c.L - tol) well = &p.a_plus;
        else continue;
        auto ui = u.node(i);
        const double d = std::sqrt(dist_sq(ui, *well));
        if (d > c.delta) {
            const double scale = c.delta / d;
            for (int k = 0; k < u.dim; ++k) {
                const double a = (*well)[static_cast<size_t>(k)];
                ui[static_cast<size_t>(k)] = a + scale * (ui[static_cast<size_t>(k)] - a);
            }
            ++moved;
        }
    }
    return moved;
}

Profile project_constraints(const Profile& u, const ConstraintSpec& c, const PotentialSpec& p) {
    Profile out = u;
    project_constraints_inplace(out, c, p);
    return out;
}

Profile linear_competitor(const PotentialSpec& p, const Grid& g) {
    if (!(g.radius_R >= 2.0)) throw PreconditionError("competitor needs R >= 2");
    Profile u(g, p.dim);
    for (int i = 0; i < g.node_count; ++i) {
        const double x = g.node(i);
        auto ui = u.node(i);
        if (x <= -1.0) {
            for (int k = 0; k < p.dim; ++k) ui[static_cast<size_t>(k)] = p.a_minus[static_cast<size_t>(k)];
        } else if (x >= 1.0) {
            for (int k = 0; k < p.dim; ++k) ui[static_cast<size_t>(k)] = p.a_plus[static_cast<size_t>(k)];
        } else {
            const double t = 0.5 * (x + 1.0);
            for (int k = 0; k < p.dim; ++k)
                ui[static_cast<size_t>(k)] = (1.0 - t) * p.a_minus[static_cast<size_t>(k)] +
                                             t * p.a_plus[static_cast<size_t>(k)];
        }
    }
    return u;
}

double tail_energy(const PotentialSpec& p, const InhomogeneityProfile& h, const Profile& u,
                   double L) {
    const Grid& g = u.grid;
    const double s = g.spacing;
    const int N = g.node_count;
    double J = 0.0;
    for (int i = 0; i + 1 < N; ++i) {
        const double x0 = g.node(i);
        const double x1 = g.node(i + 1);
        if (!(x1 <= -L || x0 >= L)) continue;
        double kin = 0.0;
        const auto a = u.node(i);
        const auto b = u.node(i + 1);
        for (int k = 0; k < u.dim; ++k) {
            const double d = (b[static_cast<size_t>(k)] - a[static_cast<size_t>(k)]) / s;
            kin += d * d;
        }
        const double pot = 0.5 * (h.eval(x0) * p.eval_w(a) + h.eval(x1) * p.eval_w(b));
        J += s * (0.5 * kin + pot);
    }
    return J;
}

void write_profile_csv(const Profile& u, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << "x";
    for (int k = 1; k <= u.dim; ++k) f << ",u" << k;
    f << "\n";
    char buf[32];
    for (int i = 0; i < u.grid.node_count; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", u.grid.node(i));
        f << buf;
        const auto ui = u.node(i);
        for (int k = 0; k < u.dim; ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", ui[static_cast<size_t>(k)]);
            f << "," << buf;
        }
        f << "\n";
    }
    if (!f) throw IoError("write failed for " + path);
}

Profile read_profile_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(f, line)) throw IoError("empty profile file " + path);

    int dim = 0;
    {
        std::stringstream hs(line);
        std::string tok;
        bool first = true;
        while (std::getline(hs, tok, ',')) {
            if (first) {
                if (tok != "x") throw IoError("profile header must start with x");
                first = false;
            } else {
                ++dim;
            }
        }
        if (dim < 1) throw IoError("profile header lists no components");
    }

    std::vector<double> xs;
    std::vector<double> vals;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string tok;
        int col = 0;
        while (std::getline(ls, tok, ',')) {
            const double v = std::strtod(tok.c_str(), nullptr);
            if (col == 0) xs.push_back(v);
            else vals.push_back(v);
            ++col;
        }
        if (col != dim + 1) throw IoError("ragged row in " + path);
    }
    const int N = static_cast<int>(xs.size());
    if (N < 3 || N % 2 == 0) throw IoError("profile must have an odd node count >= 3");

    const double R = std::max(std::abs(xs.front()), std::abs(xs.back()));
    Grid g(R, N);
    for (int i = 0; i < N; ++i) {
        if (std::abs(xs[static_cast<size_t>(i)] - g.node(i)) > 1e-9 * (1.0 + R))
            throw IoError("profile abscissae are not a uniform symmetric grid");
    }
    Profile u(g, dim);
    u.values = std::move(vals);
    return u;
}

} // namespace hetero
