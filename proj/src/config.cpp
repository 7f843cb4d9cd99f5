#include "sqnmr/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "sqnmr/constants.hpp"

namespace sqnmr {

namespace {

using nlohmann::json;

double deg2rad(double d) { return d * pi / 180.0; }

[[noreturn]] void bad_key(const std::string& key, const std::string& what) {
    throw config_error("config key \"" + key + "\": " + what);
}

double read_double(const json& v, const std::string& key) {
    if (!v.is_number()) bad_key(key, "expected a number");
    return v.get<double>();
}

int read_int(const json& v, const std::string& key) {
    if (!v.is_number_integer()) bad_key(key, "expected an integer");
    return v.get<int>();
}

bool read_bool(const json& v, const std::string& key) {
    if (!v.is_boolean()) bad_key(key, "expected true or false");
    return v.get<bool>();
}

std::string read_string(const json& v, const std::string& key) {
    if (!v.is_string()) bad_key(key, "expected a string");
    return v.get<std::string>();
}

std::vector<double> read_double_list(const json& v, const std::string& key) {
    if (!v.is_array()) bad_key(key, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number()) bad_key(key, "expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

} // namespace

RunConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw config_error("config root must be a JSON object");
    RunConfig c;
    for (const auto& [key, v] : j.items()) {
        if (key == "isotope") c.isotope = read_string(v, key);
        else if (key == "gamma_n_MHz_per_T") c.gamma_n_MHz_per_T = read_double(v, key);
        else if (key == "two_I") c.two_I = read_int(v, key);
        else if (key == "B0_T") c.B0_T = read_double(v, key);
        else if (key == "temperature_K") c.temperature_K = read_double(v, key);
        else if (key == "nuQ_kHz") c.nuQ_kHz = read_double(v, key);
        else if (key == "eta") c.eta = read_double(v, key);
        else if (key == "alphaQ_deg") c.alphaQ_deg = read_double(v, key);
        else if (key == "betaQ_deg") c.betaQ_deg = read_double(v, key);
        else if (key == "gammaQ_deg") c.gammaQ_deg = read_double(v, key);
        else if (key == "T1_omegaQ_inv") c.T1_omegaQ_inv = read_double(v, key);
        else if (key == "T1_seconds") c.T1_seconds = read_double(v, key);
        else if (key == "T2_omegaQ_inv") c.T2_omegaQ_inv = read_double(v, key);
        else if (key == "T2_seconds") c.T2_seconds = read_double(v, key);
        else if (key == "initial_state") c.initial_state = read_string(v, key);
        else if (key == "css_theta0_deg") c.css_theta0_deg = read_double(v, key);
        else if (key == "css_phi0_deg") c.css_phi0_deg = read_double(v, key);
        else if (key == "t_max_seconds") c.t_max_seconds = read_double(v, key);
        else if (key == "n_samples") c.n_samples = read_int(v, key);
        else if (key == "relax_target") c.relax_target = read_string(v, key);
        else if (key == "eta_values") c.eta_values = read_double_list(v, key);
        else if (key == "husimi_n") c.husimi_n = read_int(v, key);
        else if (key == "husimi_extent") c.husimi_extent = read_double(v, key);
        else if (key == "husimi_time_seconds") c.husimi_time_seconds = read_double(v, key);
        else if (key == "fid_samples") c.fid_samples = read_int(v, key);
        else if (key == "fid_t_max_over_T2") c.fid_t_max_over_T2 = read_double(v, key);
        else if (key == "zero_fill") c.zero_fill = read_int(v, key);
        else if (key == "spectrum_T2_seconds") c.spectrum_T2_seconds = read_double(v, key);
        else if (key == "order") c.order = read_int(v, key);
        else if (key == "boltzmann_literal_eq2") c.boltzmann_literal_eq2 = read_bool(v, key);
        else throw config_error("unknown config key \"" + key + "\"");
    }
    return c;
}

void RunConfig::validate() const {
    auto require = [](bool ok, const std::string& key, const std::string& what) {
        if (!ok) bad_key(key, what);
    };
    require(std::isfinite(gamma_n_MHz_per_T) && gamma_n_MHz_per_T > 0.0, "gamma_n_MHz_per_T",
            "must be > 0");
    require(two_I >= 1, "two_I", "must be >= 1");
    require(std::isfinite(B0_T) && B0_T >= 0.0, "B0_T", "must be >= 0");
    require(std::isfinite(temperature_K) && temperature_K > 0.0, "temperature_K", "must be > 0");
    require(std::isfinite(nuQ_kHz) && nuQ_kHz >= 0.0, "nuQ_kHz", "must be >= 0");
    require(std::isfinite(eta) && eta >= 0.0 && eta <= 1.0, "eta", "must lie in [0, 1]");
    require(std::isfinite(alphaQ_deg), "alphaQ_deg", "must be finite");
    require(std::isfinite(betaQ_deg), "betaQ_deg", "must be finite");
    require(std::isfinite(gammaQ_deg), "gammaQ_deg", "must be finite");
    require(!(T1_omegaQ_inv && T1_seconds), "T1_seconds",
            "give either T1_omegaQ_inv or T1_seconds, not both");
    require(!(T2_omegaQ_inv && T2_seconds), "T2_seconds",
            "give either T2_omegaQ_inv or T2_seconds, not both");
    for (const auto* p : {&T1_omegaQ_inv, &T1_seconds, &T2_omegaQ_inv, &T2_seconds})
        if (*p) require(std::isfinite(**p) && **p > 0.0, "T1/T2", "must be > 0");
    require((T1_omegaQ_inv || T2_omegaQ_inv) ? omegaQ() > 0.0 : true, "nuQ_kHz",
            "relaxation in units of 1/omegaQ needs nuQ_kHz > 0");
    require(initial_state == "rtes" || initial_state == "thermal" || initial_state == "css",
            "initial_state", "must be one of rtes | thermal | css");
    require(css_theta0_deg >= 0.0 && css_theta0_deg <= 180.0, "css_theta0_deg",
            "must lie in [0, 180]");
    require(css_phi0_deg >= 0.0 && css_phi0_deg < 360.0, "css_phi0_deg",
            "must lie in [0, 360)");
    if (t_max_seconds)
        require(std::isfinite(*t_max_seconds) && *t_max_seconds > 0.0, "t_max_seconds",
                "must be > 0");
    else
        require(nuQ_kHz > 0.0, "t_max_seconds", "required when nuQ_kHz = 0");
    require(n_samples >= 2, "n_samples", "must be >= 2");
    require(relax_target == "evolution-thermal" || relax_target == "lab-thermal" ||
                relax_target == "mixed",
            "relax_target", "must be one of evolution-thermal | lab-thermal | mixed");
    require(!eta_values.empty(), "eta_values", "must not be empty");
    for (double e : eta_values)
        require(std::isfinite(e) && e >= 0.0 && e <= 1.0, "eta_values",
                "entries must lie in [0, 1]");
    require(husimi_n >= 2, "husimi_n", "must be >= 2");
    require(std::isfinite(husimi_extent) && husimi_extent > 0.0, "husimi_extent", "must be > 0");
    require(std::isfinite(husimi_time_seconds) && husimi_time_seconds >= 0.0,
            "husimi_time_seconds", "must be >= 0");
    require(fid_samples >= 4, "fid_samples", "must be >= 4");
    require(std::isfinite(fid_t_max_over_T2) && fid_t_max_over_T2 > 0.0, "fid_t_max_over_T2",
            "must be > 0");
    require(zero_fill >= 1, "zero_fill", "must be >= 1");
    if (spectrum_T2_seconds)
        require(std::isfinite(*spectrum_T2_seconds) && *spectrum_T2_seconds > 0.0,
                "spectrum_T2_seconds", "must be > 0");
    else
        require(nuQ_kHz > 0.0, "spectrum_T2_seconds", "required when nuQ_kHz = 0");
    require(order == 1 || order == 2, "order", "must be 1 or 2");
    try {
        relaxation().validate();
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
}

double RunConfig::omega0() const { return 2.0 * pi * gamma_n_MHz_per_T * 1e6 * B0_T; }

double RunConfig::omegaQ() const { return 2.0 * pi * nuQ_Hz() / 3.0; }

double RunConfig::t_max() const {
    return t_max_seconds ? *t_max_seconds : 2.0 / nuQ_Hz();
}

double RunConfig::spectrum_T2() const {
    return spectrum_T2_seconds ? *spectrum_T2_seconds : 2.0 / omegaQ();
}

SpinQuantum RunConfig::spin() const { return SpinQuantum(two_I); }

HamiltonianSpec RunConfig::hamiltonian() const {
    HamiltonianSpec spec;
    spec.omega0 = omega0();
    spec.omegaQ = omegaQ();
    spec.eta = eta;
    spec.alphaQ = deg2rad(alphaQ_deg);
    spec.betaQ = deg2rad(betaQ_deg);
    spec.gammaQ = deg2rad(gammaQ_deg);
    return spec;
}

EnvironmentSpec RunConfig::environment() const {
    return EnvironmentSpec{B0_T, temperature_K, gamma_n_MHz_per_T * 1e6};
}

RelaxationSpec RunConfig::relaxation() const {
    RelaxationSpec r;
    if (T1_seconds) r.T1 = *T1_seconds;
    else if (T1_omegaQ_inv) r.T1 = *T1_omegaQ_inv / omegaQ();
    if (T2_seconds) r.T2 = *T2_seconds;
    else if (T2_omegaQ_inv) r.T2 = *T2_omegaQ_inv / omegaQ();
    return r;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    nlohmann::json j = nlohmann::json::object();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw config_error("cannot open config file: " + path);
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw config_error("malformed JSON in " + path + ": " + e.what());
        }
    }
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw config_error("--set expects key=value, got \"" + kv + "\"");
        const std::string key = kv.substr(0, eq);
        const std::string raw = kv.substr(eq + 1);
        nlohmann::json v = nlohmann::json::parse(raw, nullptr, /*allow_exceptions=*/false);
        if (v.is_discarded()) v = raw; // not valid JSON: take it as a string
        j[key] = v;
    }
    RunConfig c = parse_config(j);
    c.validate();
    return c;
}

nlohmann::json config_echo(const RunConfig& c) {
    nlohmann::json j;
    j["isotope"] = c.isotope;
    j["gamma_n_MHz_per_T"] = c.gamma_n_MHz_per_T;
    j["two_I"] = c.two_I;
    j["B0_T"] = c.B0_T;
    j["temperature_K"] = c.temperature_K;
    j["nuQ_kHz"] = c.nuQ_kHz;
    j["eta"] = c.eta;
    j["alphaQ_deg"] = c.alphaQ_deg;
    j["betaQ_deg"] = c.betaQ_deg;
    j["gammaQ_deg"] = c.gammaQ_deg;
    const RelaxationSpec r = c.relaxation();
    if (r.T1) j["T1_seconds"] = *r.T1;
    if (r.T2) j["T2_seconds"] = *r.T2;
    j["initial_state"] = c.initial_state;
    j["css_theta0_deg"] = c.css_theta0_deg;
    j["css_phi0_deg"] = c.css_phi0_deg;
    j["t_max_seconds"] = c.t_max();
    j["n_samples"] = c.n_samples;
    j["relax_target"] = c.relax_target;
    j["eta_values"] = c.eta_values;
    j["husimi_n"] = c.husimi_n;
    j["husimi_extent"] = c.husimi_extent;
    j["husimi_time_seconds"] = c.husimi_time_seconds;
    j["fid_samples"] = c.fid_samples;
    j["fid_t_max_over_T2"] = c.fid_t_max_over_T2;
    j["zero_fill"] = c.zero_fill;
    j["spectrum_T2_seconds"] = c.spectrum_T2();
    j["order"] = c.order;
    j["boltzmann_literal_eq2"] = c.boltzmann_literal_eq2;
    return j;
}

} // namespace sqnmr
