#pragma once

#include <span>
#include <string>
#include <vector>

#include "hetero/inhomogeneity.hpp"
#include "hetero/potential.hpp"

namespace hetero {

/// Uniform symmetric grid on [-R, R] with an odd number of nodes, so x = 0
/// is a node.
struct Grid {
    double radius_R = 0.0;
    int node_count = 0;
    double spacing = 0.0;

    Grid() = default;
    Grid(double radius, int nodes);

    double node(int i) const {
        return -radius_R + (2.0 * radius_R) * static_cast<double>(i) /
                               static_cast<double>(node_count - 1);
    }
    int center_index() const { return (node_count - 1) / 2; }

    /// Grid with the same spacing covering [-radius, radius]; radius is
    /// rounded up to a whole number of cells.
    static Grid with_spacing(double radius, double spacing);

    bool operator==(const Grid&) const = default;
};

/// Discrete path u_i in R^n on a grid, stored node-major.
struct Profile {
    Grid grid;
    int dim = 1;
    std::vector<double> values;   // node_count * dim

    Profile() = default;
    Profile(Grid g, int dim);

    std::span<double> node(int i) {
        return {values.data() + static_cast<size_t>(i) * static_cast<size_t>(dim),
                static_cast<size_t>(dim)};
    }
    std::span<const double> node(int i) const {
        return {values.data() + static_cast<size_t>(i) * static_cast<size_t>(dim),
                static_cast<size_t>(dim)};
    }

    void set_node(int i, std::span<const double> v) {
        auto dst = node(i);
        for (int k = 0; k < dim; ++k) dst[static_cast<size_t>(k)] = v[static_cast<size_t>(k)];
    }

    /// Pins the first node to a- and the last to a+.
    void pin_endpoints(const PotentialSpec& p);
};

/// Discrete realization of the two tube classes: nodes with x <= -L must stay
/// within delta of a-, nodes with x >= +L within delta of a+.
struct ConstraintSpec {
    double L = 0.0;
    double delta = 0.0;

    ConstraintSpec() = default;
    ConstraintSpec(double L, double delta);
};

/// Action of a discrete path: forward differences for the kinetic term,
/// trapezoid rule for the weighted potential term.
double discrete_energy(const PotentialSpec& p, const InhomogeneityProfile& h, const Profile& u);

/// Same quadrature with the weight values already tabulated on the grid
/// nodes.`h_values` must have grid.node_count entries.
double discrete_energy_cached(const PotentialSpec& p, std::span<const double> h_values,
                              const Profile& u);

/// Exact gradient of discrete_energy with respect to the interior nodes;
/// endpoint slots are zero. Entry i is
/// spacing * ( -(u_{i+1} - 2 u_i + u_{i-1}) / spacing^2 + h(x_i) grad W(u_i) ).
std::vector<double> discrete_gradient(const PotentialSpec& p, const InhomogeneityProfile& h,
                                      const Profile& u);

std::vector<double> discrete_gradient_cached(const PotentialSpec& p,
                                             std::span<const double> h_values, const Profile& u);

/// Projects every constrained node onto the closed delta-ball of its well.
/// Idempotent; interior nodes untouched.
Profile project_constraints(const Profile& u, const ConstraintSpec& c, const PotentialSpec& p);

/// In-place variant; returns the number of nodes that moved.
int project_constraints_inplace(Profile& u, const ConstraintSpec& c, const PotentialSpec& p);

/// Piecewise-linear path: a- for x <= -1, a+ for x >= +1, linear in between.
/// Its energy bounds the constrained infimum for every L >= 2.
Profile linear_competitor(const PotentialSpec& p, const Grid& g);

/// Energy split over [-L, L] complement: sum of the cells lying entirely in
/// |x| >= L.
double tail_energy(const PotentialSpec& p, const InhomogeneityProfile& h, const Profile& u,
                   double L);

/// Weight values tabulated at the grid nodes.
std::vector<double> tabulate_weight(const InhomogeneityProfile& h, const Grid& g);

/// CSV round-trip with header "x,u1,...,un" and 17 significant digits, so
/// values survive write/read bit-exactly.
void write_profile_csv(const Profile& u, const std::string& path);
Profile read_profile_csv(const std::string& path);

} // namespace hetero
