#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sqnmr/errors.hpp"
#include "sqnmr/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"spin squeezing simulator for quadrupolar NMR"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::vector<std::string> overrides;
    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw ? static_cast<int>(hw) : 1;
    int order = 2;

    app.add_option("--config", config_path, "JSON config file (defaults: 23Na working point)");
    app.add_option("--set", overrides, "override a config key, key=value (repeatable)");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--threads", threads, "worker threads for sweeps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    auto* order_opt = app.add_option("--order", order, "effective hamiltonian order")
                          ->check(CLI::IsMember({1, 2}));

    const std::vector<std::pair<std::string, std::string>> subs = {
        {"husimi", "Husimi Q snapshot of the prepared state"},
        {"fidelity-map", "pulsed-thermal vs target-CSS fidelity over (B0, T)"},
        {"squeeze", "squeezing parameter trace under the quadrupole hamiltonian"},
        {"spectrum", "FID and spectrum from the effective hamiltonian"},
        {"eta-family", "squeezing traces across a set of asymmetry values"},
        {"euler-grid", "minimum squeezing over PAS tilt and asymmetry"},
    };
    for (const auto& [name, desc] : subs) app.add_subcommand(name, desc)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        sqnmr::RunConfig cfg = sqnmr::load_config(config_path, overrides);
        if (order_opt->count() > 0) {
            cfg.order = order;
            cfg.validate();
        }
        sqnmr::run_subcommand(app.get_subcommands().front()->get_name(), cfg, out_dir, threads);
    } catch (const sqnmr::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
