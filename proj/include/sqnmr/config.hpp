#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqnmr/dynamics.hpp"
#include "sqnmr/errors.hpp"
#include "sqnmr/hamiltonians.hpp"
#include "sqnmr/states.hpp"

namespace sqnmr {

// flat run configuration; defaults are the 23Na working point.
// angles are degrees and frequencies kHz/MHz here, converted to radians
// and rad/s by the derived accessors.
struct RunConfig {
    std::string isotope = "23Na";
    double gamma_n_MHz_per_T = 11.26;
    int two_I = 3;
    double B0_T = 7.0;
    double temperature_K = 0.1;
    double nuQ_kHz = 200.0;
    double eta = 0.0;
    double alphaQ_deg = 0.0;
    double betaQ_deg = 0.0;
    double gammaQ_deg = 0.0;

    // relaxation times: give either the dimensionless multiple of 1/omegaQ
    // or the value in seconds, not both
    std::optional<double> T1_omegaQ_inv;
    std::optional<double> T1_seconds;
    std::optional<double> T2_omegaQ_inv;
    std::optional<double> T2_seconds;

    std::string initial_state = "rtes"; // rtes | thermal | css
    double css_theta0_deg = 90.0;
    double css_phi0_deg = 180.0;

    std::optional<double> t_max_seconds; // default: two quadrupole periods, 2/nuQ
    int n_samples = 2000;

    // equilibrium state that T1/T2 relax towards
    std::string relax_target = "evolution-thermal"; // evolution-thermal | lab-thermal | mixed

    std::vector<double> eta_values = {0.0, 0.25, 0.5, 0.75, 1.0};

    int husimi_n = 101;
    double husimi_extent = 3.0;
    double husimi_time_seconds = 0.0;

    int fid_samples = 512;
    double fid_t_max_over_T2 = 8.0;
    int zero_fill = 2;
    std::optional<double> spectrum_T2_seconds; // default: 2/omegaQ

    int order = 2; // effective hamiltonian order for spectrum / euler-grid

    bool boltzmann_literal_eq2 = false; // fidelity map: thermalize under H_Q alone

    void validate() const; // throws config_error naming the offending key

    double nuQ_Hz() const { return nuQ_kHz * 1e3; }
    double omega0() const;        // rad/s
    double omegaQ() const;        // rad/s, 2*pi*nuQ/3
    double t_max() const;         // seconds, resolved default
    double spectrum_T2() const;   // seconds, resolved default
    SpinQuantum spin() const;
    HamiltonianSpec hamiltonian() const;
    EnvironmentSpec environment() const;
    RelaxationSpec relaxation() const; // resolved to seconds
};

// apply a flat JSON object onto defaults; unknown keys and type mismatches
// throw config_error naming the key. does not validate ranges (see validate()).
RunConfig parse_config(const nlohmann::json& j);

// read a JSON file (empty path = defaults) and apply --set key=value overrides;
// each value is parsed as JSON if possible, else taken as a string. validates.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides);

// resolved echo for manifests: every field, relaxation times in seconds
nlohmann::json config_echo(const RunConfig& c);

} // namespace sqnmr
