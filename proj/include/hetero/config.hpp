#pragma once

#include <string>
#include <vector>

#include "hetero/inhomogeneity.hpp"
#include "hetero/potential.hpp"
#include "hetero/solver.hpp"

namespace hetero {

/// Fully resolved run description. Sections: [potential] [inhomogeneity]
/// [solver] [output]; unknown sections or keys are hard errors.
struct RunConfig {
    // [potential]
    std::string potential_kind = "quartic";   // quartic | product2d | custom
    std::vector<double> a_minus;              // optional well override
    std::vector<double> a_plus;
    double delta = 0.0;                       // 0 -> constructor default
    std::vector<double> coeffs;               // custom scalar polynomial

    // [inhomogeneity]
    std::string h_descriptor = "constant";

    // [solver]
    SolveConfig solve;
    bool deterministic = false;

    // [output]
    std::string profile_csv = "profile.csv";
    std::string report_json = "report.json";
    std::string plotdata = "plot.dat";
    bool with_clearing_out = true;
    bool with_energy_identity = true;
    bool with_mean_value = true;
    bool with_oracle = false;
    bool compare_asymptotic = false;

    bool operator==(const RunConfig&) const = default;
};

/// Parses "key = value" lines under the four known sections, filling defaults
/// for everything absent. Unknown keys or sections are hard errors.
RunConfig parse_config(const std::string& text);

/// Canonical text form; parse(serialize(cfg)) == cfg.
std::string serialize_config(const RunConfig& cfg);

/// Applies one "section.key=value" override.
void apply_override(RunConfig& cfg, const std::string& spec);

/// Instantiates the potential selected by the config (validated separately).
PotentialSpec build_potential(const RunConfig& cfg);

/// Parses the compact weight syntax: "constant",
/// "periodic:T=..,base=..,amp=..", "asymptotic:hinf=..,dip=..,width=..",
/// "diverging:alpha=..,c0=..".
InhomogeneityProfile build_weight(const std::string& descriptor);

} // namespace hetero
